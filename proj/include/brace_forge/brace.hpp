#pragma once

#include "brace_forge/hopf.hpp"

namespace brace_forge {

/// Two Hopf algebra structures H1 = (mu1, lambda1) and H2 = (mu2, lambda2)
/// on one coalgebra (eps, delta) with a single shared unit eta.
struct HopfBraceData {
  Space space;
  LinMap unit;
  LinMap counit;
  LinMap coproduct;
  LinMap product1;
  LinMap antipode1;
  LinMap product2;
  LinMap antipode2;

  /// Throws Error(PrereqFailed) unless h1 and h2 share unit, counit and
  /// coproduct exactly.
  static HopfBraceData from_hopf(const HopfAlgebraData &h1, const HopfAlgebraData &h2);

  Field field() const { return coproduct.field(); }
  std::size_t dim() const { return space.dim(); }
  HopfAlgebraData first() const;
  HopfAlgebraData second() const;
  CoalgebraData coalgebra() const { return {space, counit, coproduct}; }
  void validate_shapes() const;
};

bool is_cocommutative(const HopfBraceData &b);

/// Gamma = mu1 o (lambda1 (x) mu2) o (delta (x) H): H (x) H -> H.
LinMap gamma(const HopfBraceData &b);

/// Phi = mu2 o ((lambda2 o Gamma) (x) mu2) o (H (x) c (x) H) o (delta (x) delta).
/// Cocommutative braces only; throws Error(NotCocommutative).
LinMap phi(const HopfBraceData &b);

/// check_hopf on H1 and H2 (prefixed "H1." / "H2.") and the compatibility
/// mu2 o (H (x) mu1) = mu1 o (mu2 (x) Gamma) o (H (x) c (x) H) o (delta (x) H (x) H).
AxiomReport check_hopf_brace(const HopfBraceData &b);

/// The identities expressing Gamma o (H (x) lambda1), mu2 and mu1 through
/// each other. Throws Error(PrereqFailed) if b fails check_hopf_brace.
AxiomReport check_brace_identities(const HopfBraceData &b);

/// (H, H). Throws Error(PrereqFailed) if h fails check_hopf.
HopfBraceData trivial_brace(const HopfAlgebraData &h);

/// f is a Hopf morphism H1 -> H1' and H2 -> H2'; derived entry
/// f o Gamma = Gamma' o (f (x) f).
AxiomReport check_brace_morphism(const LinMap &f, const HopfBraceData &src,
                                 const HopfBraceData &dst);

} // namespace brace_forge
