#include "symtherm/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "io_internal.hpp"
#include "symtherm/errors.hpp"

namespace symtherm {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw config_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

uint64_t fnv1a(std::string_view text) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hash_hex(uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string format_g12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

namespace detail {

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw config_error(std::string("JSON parse error: ") + e.what());
  }
}

Representation symmetry_from_json(const json& j) {
  if (!j.is_object() || !j.contains("group") || !j.contains("site_rep") || !j.contains("n_sites"))
    throw config_error("symmetry spec needs \"group\", \"site_rep\" and \"n_sites\"");
  const int n_sites = j.at("n_sites").get<int>();

  AbelianGroup group = AbelianGroup::charge_u1();
  const json& jg = j.at("group");
  if (jg.contains("finite")) {
    group = AbelianGroup::finite(jg.at("finite").get<std::vector<int>>());
  } else if (!(jg.contains("u1") && jg.at("u1").get<bool>())) {
    throw config_error("symmetry group must be {\"finite\": [...]} or {\"u1\": true}");
  }

  const json& jr = j.at("site_rep");
  SiteRep site;
  if (jr.contains("paulis")) {
    site = SiteRep::from_pauli(jr.at("paulis").get<std::vector<std::string>>());
  } else if (jr.contains("diag_phases")) {
    site = SiteRep::from_diag_phases(group, jr.at("diag_phases").get<std::vector<std::vector<int>>>());
  } else if (jr.contains("charges")) {
    site = SiteRep::from_charges(jr.at("charges").get<std::vector<int>>());
  } else {
    throw config_error("site_rep must give \"paulis\", \"diag_phases\" or \"charges\"");
  }
  try {
    return Representation::homogeneous(std::move(group), std::move(site), n_sites);
  } catch (const std::invalid_argument& e) {
    throw config_error(std::string("invalid symmetry spec: ") + e.what());
  }
}

namespace {

Boundary boundary_from(const json& j, Boundary fallback) {
  if (!j.contains("boundary")) return fallback;
  const std::string b = j.at("boundary").get<std::string>();
  if (b == "open") return Boundary::Open;
  if (b == "periodic") return Boundary::Periodic;
  throw config_error("boundary must be \"open\" or \"periodic\"");
}

}  // namespace

ParsedModel model_from_json(const json& j) {
  ParsedModel out;
  if (j.contains("preset")) {
    out.is_preset = true;
    out.preset = j.at("preset").get<std::string>();
    if (j.contains("params")) {
      const json& p = j.at("params");
      if (p.contains("n_sites")) out.params.n_sites = p.at("n_sites").get<int>();
      if (p.contains("n_modes")) out.params.n_modes = p.at("n_modes").get<int>();
      if (p.contains("coeff")) out.params.coeff = p.at("coeff").get<double>();
      if (p.contains("j")) out.params.j = p.at("j").get<double>();
      if (p.contains("gamma")) out.params.gamma = p.at("gamma").get<double>();
      out.params.boundary = boundary_from(p, Boundary::Periodic);
    }
    try {
      out.spec = make_preset(out.preset, out.params);
    } catch (const std::invalid_argument& e) {
      throw config_error(e.what());
    }
    return out;
  }

  if (j.contains("n_modes")) {
    out.spec.n_modes = j.at("n_modes").get<int>();
    out.spec.name = "fermionic";
    for (const json& jt : j.value("terms", json::array())) {
      MajoranaTerm t;
      t.majoranas = jt.at("majoranas").get<std::vector<int>>();
      t.coeff = cplx(jt.value("coeff_real", 0.0), jt.value("coeff_imag", 0.0));
      out.spec.majorana_terms.push_back(std::move(t));
    }
    return out;
  }

  if (!j.contains("n_sites")) throw config_error("model spec needs \"n_sites\" or \"preset\"");
  out.spec.n_sites = j.at("n_sites").get<int>();
  out.spec.boundary = boundary_from(j, Boundary::Open);
  for (const json& jt : j.value("terms", json::array())) {
    PauliTerm t;
    t.sites = jt.at("sites").get<std::vector<int>>();
    t.paulis = jt.at("paulis").get<std::string>();
    t.coeff = jt.at("coeff").get<double>();
    out.spec.terms.push_back(std::move(t));
  }
  return out;
}

ModelSpec preset_at_size(const ParsedModel& model, int n_sites) {
  if (!model.is_preset)
    throw config_error("N-sweeps need a preset model (explicit term lists do not scale)");
  PresetParams params = model.params;
  params.n_sites = n_sites;
  params.n_modes = n_sites;
  return make_preset(model.preset, params);
}

}  // namespace detail

Representation parse_symmetry_json(const std::string& text) {
  return detail::symmetry_from_json(detail::parse_text(text));
}

ModelSpec parse_model_json(const std::string& text) {
  return detail::model_from_json(detail::parse_text(text)).spec;
}

}  // namespace symtherm
