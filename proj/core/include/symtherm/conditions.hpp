#pragma once

#include <optional>
#include <vector>

#include "symtherm/ensembles.hpp"
#include "symtherm/fermions.hpp"
#include "symtherm/operator.hpp"
#include "symtherm/symmetry.hpp"

namespace symtherm {

/// Boolean verdict plus the achieved norm (auditable borderline cases) and,
/// when the condition holds, the group element that witnesses it.
struct ConditionResult {
  bool holds = false;
  double norm = 0.0;
  std::optional<GroupElement> witness;
};

/// Symmetric entangling condition: exists g != e with [U_A(g), H] != 0.
/// The Hamiltonian must commute with the full symmetry action. Finite groups
/// are enumerated exhaustively; U(1) is probed at theta = 2pi/(range+1) and
/// one irrational multiple, which together detect any off-diagonal charge
/// block of H.
ConditionResult check_sec(const Operator& hamiltonian, const Representation& rep,
                          const Partition& region_a);

/// Entangling condition for a charge sector: exists g with
/// [U_A(g), H] Pi_Lambda != 0.
ConditionResult check_ec(const Operator& hamiltonian, const Representation& rep,
                         const IrrepLabel& sector, const Partition& region_a);

/// Negativity condition: (1 - Pi)(H Pi)^{T_A}(1 - Pi) != 0, with the partial
/// transpose taken after conjugating into the symmetry-adapted basis (so that
/// U_A(g)^{T_A} = U_A(g)). No witness element.
ConditionResult check_nc(const Operator& hamiltonian, const Representation& rep,
                         const IrrepLabel& sector, const Partition& region_a);

/// Checks check_ec == check_nc; when both are false additionally verifies the
/// intermediate block-diagonal form H Pi = sum_lambda Pi^A_lambda (H Pi)
/// Pi^A_lambda (residual below 1e-10 relative).
bool verify_ec_nc_equivalence(const Operator& hamiltonian, const Representation& rep,
                              const IrrepLabel& sector, const Partition& region_a);

struct SectorReport {
  IrrepLabel label;
  ConditionResult ec, nc;
};

struct FermionicReport {
  FermionConditionResult gibbs;
  std::vector<std::pair<int, FermionConditionResult>> canonical;  // per parity sector
};

/// Top-level persistence verdict: SEC once, EC/NC per realizable sector.
struct PersistenceReport {
  ConditionResult sec;
  std::vector<SectorReport> sectors;
  std::optional<FermionicReport> fermionic;
};

PersistenceReport predict_persistence(const EnsembleSpec& spec, const Representation& rep,
                                      const Partition& region_a);

FermionicReport predict_persistence_fermionic(const Operator& hamiltonian,
                                              const FermionPartition& region_a,
                                              const MajoranaSystem& sys);

}  // namespace symtherm
