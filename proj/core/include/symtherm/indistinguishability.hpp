#pragma once

#include "symtherm/operator.hpp"
#include "symtherm/symmetry.hpp"

namespace symtherm {

struct ProjectorTraceRatio {
  double exact = 0.0;      // Tr Pi_Lambda at the given N
  double asymptote = 0.0;  // d^N / |G/K| (0 if Lambda is inconsistent on K)
  double xi = 0.0;         // decay length; +infinity when all off-K traces vanish
};

/// Tr[Pi_Lambda] against its large-N form d^N/|G/K| with
/// K = { g : u(g) proportional to identity } and
/// xi = -1/log(max_{g not in K} |Tr u(g)| / d). Homogeneous finite
/// representations only; N is taken as a parameter so sweeps do not rebuild
/// the representation.
ProjectorTraceRatio projector_trace_ratio(const Representation& rep, const IrrepLabel& label,
                                          int n_sites);

/// || Tr_B[rho_{beta,Lambda}] - Tr_B[rho_beta] ||_1 over the kept region A.
/// At beta = 0 this takes an exact marginal path that never materializes a
/// d^N-dimensional operator (the Hamiltonian is ignored there).
double local_sector_distance(const Operator& hamiltonian, const Representation& rep,
                             const IrrepLabel& label, double beta, const Partition& region_a);

/// The beta = 0 marginal path by itself (per-site trace factorization of
/// Tr_B[U(g)] for finite groups, diagonal counting for U(1)).
double local_sector_distance_beta0(const Representation& rep, const IrrepLabel& label,
                                   const Partition& region_a);

}  // namespace symtherm
