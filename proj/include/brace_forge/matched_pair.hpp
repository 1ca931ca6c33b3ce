#pragma once

#include "brace_forge/brace.hpp"
#include "brace_forge/obt.hpp"

namespace brace_forge {

/// Hopf algebras A, H with phi_A: H (x) A -> A (left H-action on A) and
/// phi_H: H (x) A -> H (right A-action on H).
struct MatchedPairData {
  HopfAlgebraData a;
  HopfAlgebraData h;
  LinMap phi_a;
  LinMap phi_h;

  Field field() const { return a.field(); }
  void validate_shapes() const;
  /// A and H have identical structure constants.
  bool is_diagonal() const;
};

/// Psi = (phi_A (x) phi_H) o (H (x) c_{H,A} (x) A) o (delta_H (x) delta_A): H (x) A -> A (x) H.
LinMap psi(const MatchedPairData &m);

/// Entries mp.i ... mp.vi:
///   i    (A, phi_A) left H-module coalgebra, (H, phi_H) right A-module coalgebra
///   ii   phi_A o (H (x) eta_A) = eps_H (x) eta_A
///   iii  phi_H o (eta_H (x) A) = eta_H (x) eps_A
///   iv   phi_A o (H (x) mu_A) = mu_A o (A (x) phi_A) o (Psi (x) A)
///   v    phi_H o (mu_H (x) A) = mu_H o (phi_H (x) H) o (H (x) Psi)
///   vi   c_{A,H} o Psi = (phi_H (x) phi_A) o (H (x) c_{H,A} (x) A) o (delta_H (x) delta_A)
/// Throws Error(PrereqFailed) if A or H fails check_hopf.
AxiomReport check_matched_pair(const MatchedPairData &m);

/// check_matched_pair plus mp.interweaving: mu_A = mu_A o Psi. Throws
/// Error(NotDiagonal) unless A = H exactly, Error(NotCocommutative) unless A
/// is cocommutative.
AxiomReport check_mp_over_A(const MatchedPairData &m);

/// (H2, H2, Gamma, Phi). Throws Error(BraceAxiomsFailed) or
/// Error(NotCocommutative).
MatchedPairData functor_F(const HopfBraceData &b);

/// (A-bar, A) with mu-bar = mu o (A (x) (phi_A o (lambda (x) A))) o (delta (x) A)
/// and lambda-bar = phi_A o (A (x) lambda) o delta. Throws
/// Error(MpAxiomsFailed) unless check_mp_over_A passes.
HopfBraceData functor_G(const MatchedPairData &m);

/// m against F(G(m)): components of A and H, phi_A, phi_H.
AxiomReport roundtrip_FG(const MatchedPairData &m);
/// b against G(F(b)).
AxiomReport roundtrip_GF(const HopfBraceData &b);

/// (A, phi_A o (lambda (x) A), phi_A o (A (x) lambda) o delta). Throws
/// Error(MpAxiomsFailed) unless check_mp_over_A passes.
OppBraceTripleData obt_from_matched_pair(const MatchedPairData &m);

/// Trivial actions phi_A = eps_H (x) A, phi_H = H (x) eps_A.
MatchedPairData trivial_pair(const HopfAlgebraData &a, const HopfAlgebraData &h);

/// (f, g): (A, H, phi_A, phi_H) -> (A', H', phi_A', phi_H') with f: A -> A'
/// and g: H -> H' Hopf morphisms ("A." and "H." prefixes) and
/// f o phi_A = phi_A' o (g (x) f), g o phi_H = phi_H' o (g (x) f).
AxiomReport check_mp_morphism(const LinMap &f, const LinMap &g, const MatchedPairData &src,
                              const MatchedPairData &dst);

} // namespace brace_forge
