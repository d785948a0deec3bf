#include "symtherm/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <thread>

#include "io_internal.hpp"
#include "symtherm/conditions.hpp"
#include "symtherm/entanglement.hpp"
#include "symtherm/errors.hpp"
#include "symtherm/indistinguishability.hpp"
#include "symtherm/io.hpp"
#include "symtherm/linalg.hpp"
#include "symtherm/tolerances.hpp"

namespace symtherm {

namespace {

using detail::json;
using detail::ParsedModel;

struct LoadedConfig {
  json cfg;
  std::string hash;
};

LoadedConfig load_config(const CliOptions& opt) {
  if (opt.config_path.empty()) throw config_error("--config PATH is required");
  LoadedConfig out;
  out.cfg = detail::parse_text(read_file(opt.config_path));
  out.hash = hash_hex(fnv1a(out.cfg.dump()));
  return out;
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ';';
    s += std::to_string(v[i]);
  }
  return s;
}

// --- grids and sectors -------------------------------------------------------

// (beta, tanh_beta) pairs; tanh_beta = 1 maps to beta = 19 (tanh(19) rounds
// to 1.0 in double precision).
std::vector<std::pair<double, double>> beta_grid(const json& cfg) {
  std::vector<std::pair<double, double>> grid;
  if (cfg.contains("betas")) {
    for (double b : cfg.at("betas").get<std::vector<double>>()) {
      if (b < 0.0 || !std::isfinite(b)) throw config_error("betas must be finite and >= 0");
      grid.emplace_back(b, std::tanh(b));
    }
    return grid;
  }
  if (cfg.contains("tanh_beta")) {
    const auto t = cfg.at("tanh_beta").get<std::vector<double>>();
    if (t.size() != 3) throw config_error("tanh_beta must be [start, stop, step]");
    const double start = t[0], stop = t[1], step = t[2];
    if (step <= 0.0) throw config_error("tanh_beta step must be positive");
    const long count = stop < start ? 0 : std::lround(std::floor((stop - start) / step + 1e-9)) + 1;
    for (long k = 0; k < count; ++k) {
      const double tb = std::min(start + k * step, 1.0);
      if (tb < 0.0 || tb > 1.0) throw config_error("tanh_beta values must lie in [0, 1]");
      grid.emplace_back(tb >= 1.0 ? 19.0 : std::atanh(tb), tb);
    }
    return grid;
  }
  throw config_error("sweep config needs \"betas\" or \"tanh_beta\"");
}

IrrepLabel sector_from_json(const json& js, const Representation& rep) {
  if (rep.group().is_finite()) {
    if (!js.is_array()) throw config_error("finite-group sector must be an exponent array");
    IrrepLabel lab{js.get<std::vector<int>>(), 0};
    if (static_cast<int>(lab.exps.size()) != rep.group().n_generators())
      throw config_error("sector exponent count does not match the group");
    for (int k = 0; k < rep.group().n_generators(); ++k)
      lab.exps[k] = ((lab.exps[k] % rep.group().orders()[k]) + rep.group().orders()[k]) %
                    rep.group().orders()[k];
    return lab;
  }
  if (!js.is_number_integer()) throw config_error("U(1) sector must be an integer charge");
  return IrrepLabel{{}, js.get<long>()};
}

std::vector<IrrepLabel> sectors_from_config(const json& cfg, const Representation& rep) {
  if (!cfg.contains("sectors") || (cfg.at("sectors").is_string() && cfg.at("sectors") == "all"))
    return realizable_irreps(rep);
  std::vector<IrrepLabel> out;
  for (const json& js : cfg.at("sectors")) out.push_back(sector_from_json(js, rep));
  return out;
}

std::vector<int> fermion_sectors_from_config(const json& cfg) {
  if (!cfg.contains("sectors") || (cfg.at("sectors").is_string() && cfg.at("sectors") == "all"))
    return {1, -1};
  std::vector<int> out;
  for (const json& js : cfg.at("sectors")) {
    const int v = js.get<int>();
    if (v != 1 && v != -1) throw config_error("fermionic sectors must be +1 or -1");
    out.push_back(v);
  }
  return out;
}

// --- oracle column -----------------------------------------------------------

bool is_z2_spin_flip(const Representation& rep) {
  if (!rep.group().is_finite() || rep.group().orders() != std::vector<int>{2}) return false;
  if (rep.site_rep(0).dim != 2) return false;
  const Operator& u = rep.site_rep(0).gen_images[0];
  const Operator x = Operator::from_matrix(2, {0, 1, 1, 0});
  return (u - x).frobenius_norm() < 1e-9;
}

// contiguous on the ring, both sides of size >= 2
bool cluster_oracle_applies(const ModelSpec& spec, const Partition& part) {
  if (spec.boundary != Boundary::Periodic || spec.n_sites < 4 || spec.n_sites % 2 != 0)
    return false;
  const int n = spec.n_sites;
  const int a = static_cast<int>(part.a_sites.size());
  if (a < 2 || n - a < 2) return false;
  std::vector<bool> in(n, false);
  for (int s : part.a_sites) in[s] = true;
  int boundaries = 0;
  for (int i = 0; i < n; ++i)
    if (in[i] != in[(i + 1) % n]) ++boundaries;
  return boundaries == 2;
}

std::optional<double> sweep_oracle(const ParsedModel& model, const Representation* rep,
                                   const Partition& part, bool canonical,
                                   const std::optional<IrrepLabel>& sector, double beta,
                                   double tanh_beta) {
  if (!model.is_preset) return std::nullopt;
  if (model.preset == "cluster-chain") {
    if (!cluster_oracle_applies(model.spec, part)) return std::nullopt;
    if (!canonical) return oracle_cluster_gibbs_EN(tanh_beta);
    if (!rep || !is_z2_spin_flip(*rep)) return std::nullopt;
    const int lambda_sector = sector->exps[0] == 0 ? 1 : -1;
    if (lambda_sector == -1 && tanh_beta >= 1.0) return std::nullopt;
    return oracle_cluster_canonical_EN(tanh_beta, model.spec.n_sites, lambda_sector);
  }
  if (model.preset == "xyz2" && canonical && rep && is_z2_spin_flip(*rep) &&
      sector->exps[0] == 0) {
    const double neg = oracle_xyz_canonical_negativity(model.params.j, model.params.gamma, beta);
    return std::log2(2.0 * neg + 1.0);
  }
  return std::nullopt;
}

// --- sweep ---------------------------------------------------------------------

struct SweepRow {
  std::string ensemble;
  std::string sector;
  double beta = 0.0, tanh_beta = 0.0;
  double log_neg = 0.0, trace_norm_pt = 0.0;
  std::optional<double> oracle;
};

void parallel_for(size_t count, int threads, const std::function<void(size_t)>& body) {
  const int n_threads = std::max(1, std::min(threads, 64));
  if (n_threads == 1 || count <= 1) {
    for (size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_lock;
  auto work = [&] {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> g(error_lock);
        if (!first_error) first_error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < n_threads; ++t) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

std::string emit_sweep(const std::string& hash, const ParsedModel& model, const Partition& part,
                       const std::vector<SweepRow>& rows, const std::string& format) {
  const std::string model_name = model.spec.name;
  const int n_sites = model.spec.fermionic() ? model.spec.n_modes : model.spec.n_sites;
  const std::string part_str = join_ints(part.a_sites);
  if (format == "json") {
    json out = json::array();
    for (const auto& r : rows) {
      json row{{"config_hash", hash},     {"model", model_name},
               {"n_sites", n_sites},      {"ensemble", r.ensemble},
               {"sector", r.sector},      {"partition", part_str},
               {"beta", r.beta},          {"tanh_beta", r.tanh_beta},
               {"log_negativity_bits", r.log_neg}, {"trace_norm_pt", r.trace_norm_pt}};
      row["oracle_value"] = r.oracle ? json(*r.oracle) : json(nullptr);
      row["abs_err_vs_oracle"] = r.oracle ? json(std::abs(r.log_neg - *r.oracle)) : json(nullptr);
      out.push_back(std::move(row));
    }
    return out.dump(2) + "\n";
  }
  std::string out =
      "config_hash,model,n_sites,ensemble,sector,partition,beta,tanh_beta,"
      "log_negativity_bits,trace_norm_pt,oracle_value,abs_err_vs_oracle\n";
  for (const auto& r : rows) {
    out += hash + ',' + model_name + ',' + std::to_string(n_sites) + ',' + r.ensemble + ',' +
           r.sector + ',' + part_str + ',' + format_g12(r.beta) + ',' + format_g12(r.tanh_beta) +
           ',' + format_g12(r.log_neg) + ',' + format_g12(r.trace_norm_pt) + ',';
    if (r.oracle) {
      out += format_g12(*r.oracle) + ',' + format_g12(std::abs(r.log_neg - *r.oracle));
    } else {
      out += ',';
    }
    out += '\n';
  }
  return out;
}

std::string sweep_impl(const CliOptions& opt) {
  const LoadedConfig lc = load_config(opt);
  const json& cfg = lc.cfg;
  if (!cfg.contains("model")) throw config_error("sweep config needs \"model\"");
  const ParsedModel model = detail::model_from_json(cfg.at("model"));
  if (!cfg.contains("partition")) throw config_error("sweep config needs \"partition\"");
  Partition part(cfg.at("partition").get<std::vector<int>>());
  const std::string ensemble = cfg.value("ensemble", std::string());
  if (ensemble != "gibbs" && ensemble != "canonical" && ensemble != "both")
    throw config_error("ensemble must be \"gibbs\", \"canonical\" or \"both\"");
  const auto grid = beta_grid(cfg);

  std::optional<Representation> rep;
  if (cfg.contains("symmetry")) rep = detail::symmetry_from_json(cfg.at("symmetry"));

  std::vector<SweepRow> rows;
  if (model.spec.fermionic()) {
    const MajoranaSystem sys(model.spec.n_modes);
    const Operator h = build_fermionic_hamiltonian(model.spec, sys);
    const FermionPartition fpart = FermionPartition::from_modes(part.a_sites);
    struct Job {
      double beta, tanh;
      std::optional<int> lambda;
    };
    std::vector<Job> jobs;
    for (const auto& [b, t] : grid) {
      if (ensemble != "canonical") jobs.push_back({b, t, std::nullopt});
      if (ensemble != "gibbs")
        for (int lam : fermion_sectors_from_config(cfg)) jobs.push_back({b, t, lam});
    }
    rows.resize(jobs.size());
    parallel_for(jobs.size(), opt.threads, [&](size_t i) {
      const Job& jb = jobs[i];
      Operator state = gibbs_state(h, jb.beta);
      if (jb.lambda) {
        const Operator proj = sys.parity_projector(*jb.lambda);
        state = proj * state * proj;
        state *= cplx(1.0 / state.trace().real(), 0.0);
      }
      const double tn = trace_norm(fermionic_partial_transpose(state, fpart, sys));
      double en = std::log2(tn);
      if (std::abs(en) < tol::kNegativitySnap) en = 0.0;
      SweepRow& r = rows[i];
      r.ensemble = jb.lambda ? "canonical" : "gibbs";
      r.sector = jb.lambda ? (*jb.lambda > 0 ? "+1" : "-1") : "";
      r.beta = jb.beta;
      r.tanh_beta = jb.tanh;
      r.log_neg = en;
      r.trace_norm_pt = tn;
    });
    return emit_sweep(lc.hash, model, part, rows, opt.format);
  }

  const Operator h = rep ? build_hamiltonian(model.spec, *rep) : build_hamiltonian(model.spec);
  part.validate_bipartition(model.spec.n_sites);
  if (ensemble != "gibbs" && !rep)
    throw config_error("canonical sweeps need a \"symmetry\" spec");

  struct Job {
    double beta, tanh;
    std::optional<IrrepLabel> sector;
  };
  std::vector<Job> jobs;
  const std::vector<IrrepLabel> sectors =
      ensemble == "gibbs" ? std::vector<IrrepLabel>{} : sectors_from_config(cfg, *rep);
  for (const auto& [b, t] : grid) {
    if (ensemble != "canonical") jobs.push_back({b, t, std::nullopt});
    if (ensemble != "gibbs")
      for (const auto& lab : sectors) jobs.push_back({b, t, lab});
  }
  rows.resize(jobs.size());
  parallel_for(jobs.size(), opt.threads, [&](size_t i) {
    const Job& jb = jobs[i];
    const Operator state = jb.sector ? canonical_state(h, jb.beta, *rep, *jb.sector)
                                     : gibbs_state(h, jb.beta);
    const double tn = trace_norm(partial_transpose(state, part));
    double en = std::log2(tn);
    if (std::abs(en) < tol::kNegativitySnap) en = 0.0;
    SweepRow& r = rows[i];
    r.ensemble = jb.sector ? "canonical" : "gibbs";
    r.sector = jb.sector ? label_string(rep->group(), *jb.sector) : "";
    r.beta = jb.beta;
    r.tanh_beta = jb.tanh;
    r.log_neg = en;
    r.trace_norm_pt = tn;
    r.oracle = sweep_oracle(model, rep ? &*rep : nullptr, part, jb.sector.has_value(), jb.sector,
                            jb.beta, jb.tanh);
  });
  return emit_sweep(lc.hash, model, part, rows, opt.format);
}

// --- check -----------------------------------------------------------------------

json witness_json(const AbelianGroup& g, const std::optional<GroupElement>& w) {
  if (!w) return nullptr;
  if (g.is_finite()) return w->exps;
  return w->theta;
}

json condition_json(const AbelianGroup& g, const ConditionResult& r) {
  return json{{"holds", r.holds}, {"norm", r.norm}, {"witness", witness_json(g, r.witness)}};
}

std::string check_impl(const CliOptions& opt) {
  const LoadedConfig lc = load_config(opt);
  const json& cfg = lc.cfg;
  if (!cfg.contains("model")) throw config_error("check config needs \"model\"");
  const ParsedModel model = detail::model_from_json(cfg.at("model"));
  if (!cfg.contains("partition")) throw config_error("check config needs \"partition\"");
  const std::vector<int> part_sites = cfg.at("partition").get<std::vector<int>>();

  json out{{"config_hash", lc.hash}};

  if (model.spec.fermionic()) {
    const MajoranaSystem sys(model.spec.n_modes);
    const Operator h = build_fermionic_hamiltonian(model.spec, sys);
    const auto rep = predict_persistence_fermionic(h, FermionPartition::from_modes(part_sites), sys);
    json fj{{"gibbs", {{"holds", rep.gibbs.holds}, {"norm", rep.gibbs.norm}}}};
    fj["canonical"] = json::array();
    for (const auto& [lam, res] : rep.canonical)
      fj["canonical"].push_back({{"sector", lam}, {"holds", res.holds}, {"norm", res.norm}});
    out["fermionic"] = std::move(fj);
    return out.dump(2) + "\n";
  }

  if (!cfg.contains("symmetry")) throw config_error("check config needs \"symmetry\"");
  const Representation rep = detail::symmetry_from_json(cfg.at("symmetry"));
  const Operator h = build_hamiltonian(model.spec, rep);
  const Partition part(part_sites);

  EnsembleSpec spec;
  spec.hamiltonian = h;
  const PersistenceReport report = predict_persistence(spec, rep, part);
  out["sec"] = condition_json(rep.group(), report.sec);
  out["sectors"] = json::array();
  for (const auto& s : report.sectors)
    out["sectors"].push_back({{"label", label_string(rep.group(), s.label)},
                              {"ec", condition_json(rep.group(), s.ec)},
                              {"nc", {{"holds", s.nc.holds}, {"norm", s.nc.norm}}}});

  if (cfg.contains("random_equivalence_trials")) {
    const int trials = cfg.at("random_equivalence_trials").get<int>();
    std::mt19937_64 rng(opt.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const int dim = rep.hilbert().total_dim();
    const auto sectors = realizable_irreps(rep);
    int mismatches = 0;
    for (int trial = 0; trial < trials; ++trial) {
      Operator m(rep.hilbert());
      for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) m.at(r, c) = cplx(gauss(rng), gauss(rng));
      Operator hr = m + m.adjoint();
      Operator hs = Operator::zero(rep.hilbert());
      if (rep.group().is_finite()) {
        const auto elems = group_elements(rep.group());
        for (const auto& g : elems) {
          const Operator u = global_unitary(rep, g);
          hs += u * hr * u.adjoint();
        }
        hs *= cplx(1.0 / static_cast<double>(elems.size()), 0.0);
      } else {
        // project onto charge-conserving blocks
        hs = hr;
        for (int r = 0; r < dim; ++r)
          for (int c = 0; c < dim; ++c) {
            long qr = 0, qc = 0;
            const auto mr = rep.hilbert().unpack(r), mc = rep.hilbert().unpack(c);
            for (int i = 0; i < rep.n_sites(); ++i) {
              qr += rep.site_rep(i).charges[mr[i]];
              qc += rep.site_rep(i).charges[mc[i]];
            }
            if (qr != qc) hs.at(r, c) = 0.0;
          }
      }
      const auto& sector = sectors[rng() % sectors.size()];
      const int a_size = 1 + static_cast<int>(rng() % (rep.n_sites() - 1));
      std::vector<int> all(rep.n_sites());
      std::iota(all.begin(), all.end(), 0);
      std::shuffle(all.begin(), all.end(), rng);
      Partition pa(std::vector<int>(all.begin(), all.begin() + a_size));
      if (!verify_ec_nc_equivalence(hs, rep, sector, pa)) ++mismatches;
    }
    out["random_equivalence"] = {{"trials", trials}, {"mismatches", mismatches}};
  }
  return out.dump(2) + "\n";
}

// --- classify ----------------------------------------------------------------------

std::string classify_impl(const CliOptions& opt) {
  const LoadedConfig lc = load_config(opt);
  if (!lc.cfg.contains("symmetry")) throw config_error("classify config needs \"symmetry\"");
  const Representation rep = detail::symmetry_from_json(lc.cfg.at("symmetry"));

  json out{{"config_hash", lc.hash}};
  out["irreps"] = json::array();
  std::vector<IrrepLabel> labels;
  if (rep.group().is_finite()) {
    for (const auto& e : group_elements(rep.group())) labels.push_back(IrrepLabel{e.exps, 0});
  } else {
    labels = realizable_irreps(rep);
  }
  for (const auto& lab : labels)
    out["irreps"].push_back({{"label", label_string(rep.group(), lab)},
                             {"class", irrep_class_name(classify_irrep(rep, lab))}});
  const CensusResult census = semiuniform_census(rep);
  out["census"] = {{"total", census.total}, {"semiuniform", census.semiuniform}};
  return out.dump(2) + "\n";
}

// --- locality -----------------------------------------------------------------------

std::string locality_impl(const CliOptions& opt) {
  const LoadedConfig lc = load_config(opt);
  const json& cfg = lc.cfg;
  if (!cfg.contains("symmetry")) throw config_error("locality config needs \"symmetry\"");
  const Representation base_rep = detail::symmetry_from_json(cfg.at("symmetry"));
  if (!cfg.contains("n_values")) throw config_error("locality config needs \"n_values\"");
  const auto n_values = cfg.at("n_values").get<std::vector<int>>();
  if (!cfg.contains("a_sites")) throw config_error("locality config needs \"a_sites\"");
  const Partition part(cfg.at("a_sites").get<std::vector<int>>());
  const double beta = cfg.value("beta", 0.0);
  if (!cfg.contains("sector")) throw config_error("locality config needs \"sector\"");

  std::optional<ParsedModel> model;
  if (cfg.contains("model")) model = detail::model_from_json(cfg.at("model"));
  if (beta > 0.0 && !model) throw config_error("locality at beta > 0 needs a preset \"model\"");

  std::string out =
      "config_hash,model,n_sites,beta,sector,a_sites,distance,"
      "proj_trace_exact,proj_trace_asymptote,xi\n";
  for (int n : n_values) {
    const Representation rep =
        Representation::homogeneous(base_rep.group(), base_rep.site_rep(0), n);
    const IrrepLabel sector = sector_from_json(cfg.at("sector"), rep);
    double dist;
    if (beta == 0.0) {
      dist = local_sector_distance_beta0(rep, sector, part);
    } else {
      const Operator h = build_hamiltonian(detail::preset_at_size(*model, n), rep);
      dist = local_sector_distance(h, rep, sector, beta, part);
    }
    out += lc.hash + ',' + (model ? model->spec.name : std::string()) + ',' + std::to_string(n) +
           ',' + format_g12(beta) + ',' + label_string(rep.group(), sector) + ',' +
           join_ints(part.a_sites) + ',' + format_g12(dist) + ',';
    if (rep.group().is_finite()) {
      const auto ptr = projector_trace_ratio(rep, sector, n);
      out += format_g12(ptr.exact) + ',' + format_g12(ptr.asymptote) + ',' + format_g12(ptr.xi);
    } else {
      out += ",,";
    }
    out += '\n';
  }
  return out;
}

}  // namespace

std::string run_sweep(const CliOptions& opt) { return sweep_impl(opt); }
std::string run_check(const CliOptions& opt) { return check_impl(opt); }
std::string run_classify(const CliOptions& opt) { return classify_impl(opt); }
std::string run_locality(const CliOptions& opt) { return locality_impl(opt); }

int run_command(const std::string& command, const CliOptions& options) {
  std::string artifact;
  if (command == "sweep")
    artifact = run_sweep(options);
  else if (command == "check")
    artifact = run_check(options);
  else if (command == "classify")
    artifact = run_classify(options);
  else if (command == "locality")
    artifact = run_locality(options);
  else
    throw config_error("unknown command: " + command);

  if (options.out_path.empty()) {
    std::cout << artifact;
  } else {
    std::ofstream out(options.out_path, std::ios::binary);
    if (!out) throw config_error("cannot write output file: " + options.out_path);
    out << artifact;
  }
  return 0;
}

}  // namespace symtherm
