#pragma once

#include "brace_forge/hopf.hpp"

namespace brace_forge {

/// phi: H (x) M -> M
struct LeftModuleData {
  HopfAlgebraData hopf;
  Space carrier;
  LinMap action;
};

/// phi: M (x) H -> M
struct RightModuleData {
  HopfAlgebraData hopf;
  Space carrier;
  LinMap action;
};

/// phi o (eta (x) M) = id and phi o (H (x) phi) = phi o (mu (x) M).
AxiomReport check_left_module(const LeftModuleData &m);
/// phi o (M (x) eta) = id and phi o (phi (x) H) = phi o (M (x) mu).
AxiomReport check_right_module(const RightModuleData &m);

/// eta_A and mu_A are H-linear, with the diagonal action
/// phi_{A(x)A} = (phi (x) phi) o (H (x) c_{H,A} (x) A) o (delta_H (x) A (x) A).
/// Throws Error(PrereqFailed) if m is not a left module.
AxiomReport check_module_algebra(const LeftModuleData &m, const AlgebraData &alg);

/// eps_C and delta_C are H-linear; also checks that phi is a coalgebra
/// morphism H (x) C -> C and records whether the two verdicts agree.
/// Throws Error(PrereqFailed) if m is not a left module.
AxiomReport check_module_coalgebra(const LeftModuleData &m, const CoalgebraData &coa);

/// Right-handed analogue: eps_C o phi = eps_C (x) eps_H and
/// delta_C o phi = phi_{C(x)C} o (delta_C (x) H) with
/// phi_{C(x)C} = (phi (x) phi) o (C (x) c_{C,H} (x) H) o (C (x) C (x) delta_H).
/// Throws Error(PrereqFailed) if m is not a right module.
AxiomReport check_right_module_coalgebra(const RightModuleData &m, const CoalgebraData &coa);

/// phi^ad = mu o (mu (x) lambda) o (H (x) c) o (delta (x) H).
/// Throws Error(PrereqFailed) if h fails check_hopf.
LeftModuleData adjoint_action(const HopfAlgebraData &h);

} // namespace brace_forge
