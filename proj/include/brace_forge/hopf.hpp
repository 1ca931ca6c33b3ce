#pragma once

#include "brace_forge/cayley.hpp"
#include "brace_forge/diagram.hpp"
#include "brace_forge/linmap.hpp"
#include "brace_forge/report.hpp"

namespace brace_forge {

/// (A, eta: K -> A, mu: A (x) A -> A)
struct AlgebraData {
  Space space;
  LinMap unit;
  LinMap product;

  Field field() const { return product.field(); }
  std::size_t dim() const { return space.dim(); }
  /// Throws Error(DimensionMismatch) if the maps do not conform to `space`.
  void validate_shapes() const;
};

/// (C, epsilon: C -> K, delta: C -> C (x) C)
struct CoalgebraData {
  Space space;
  LinMap counit;
  LinMap coproduct;

  Field field() const { return coproduct.field(); }
  std::size_t dim() const { return space.dim(); }
  void validate_shapes() const;
};

/// Bialgebra data with an antipode candidate. Construction never verifies
/// axioms; call check_hopf.
struct HopfAlgebraData {
  AlgebraData algebra;
  CoalgebraData coalgebra;
  LinMap antipode;

  static HopfAlgebraData from_maps(const LinMap &eta, const LinMap &mu, const LinMap &eps,
                                   const LinMap &delta, const LinMap &lambda,
                                   std::string label = {});

  Field field() const { return algebra.field(); }
  std::size_t dim() const { return algebra.dim(); }
  const Space &space() const { return algebra.space; }
  const LinMap &eta() const { return algebra.unit; }
  const LinMap &mu() const { return algebra.product; }
  const LinMap &eps() const { return coalgebra.counit; }
  const LinMap &delta() const { return coalgebra.coproduct; }
  const LinMap &lambda() const { return antipode; }
  void validate_shapes() const;
};

/// Unit property and associativity.
AxiomReport check_algebra(const AlgebraData &a);
/// Counit property and coassociativity.
AxiomReport check_coalgebra(const CoalgebraData &c);
/// Algebra, coalgebra, bialgebra compatibility (eta and mu are coalgebra
/// morphisms) and both antipode equations lambda * id = eta o eps = id * lambda.
AxiomReport check_hopf(const HopfAlgebraData &h);

/// f * g := mu_A o (f (x) g) o delta_C.
LinMap convolve(const LinMap &f, const LinMap &g, const CoalgebraData &c, const AlgebraData &a);

/// Antimultiplicativity, anticomultiplicativity, unit and counit
/// preservation, and (for commutative or cocommutative h) lambda o lambda = id.
/// Throws Error(PrereqFailed) if h fails check_hopf.
AxiomReport check_antipode_properties(const HopfAlgebraData &h);

bool is_commutative(const AlgebraData &a);
bool is_cocommutative(const CoalgebraData &c);
inline bool is_commutative(const HopfAlgebraData &h) { return is_commutative(h.algebra); }
inline bool is_cocommutative(const HopfAlgebraData &h) { return is_cocommutative(h.coalgebra); }

/// H^op with mu^op = mu o c and the same antipode. Cocommutative inputs
/// only; throws Error(NotCocommutative) otherwise.
HopfAlgebraData opposite_hopf(const HopfAlgebraData &h);

/// K[G]: group-like basis, delta(x) = x (x) x, eps(x) = 1, lambda(x) = x^{-1}.
/// Throws Error(NotAGroup) with the failing report.
HopfAlgebraData group_algebra(const CayleyTable &g, Field field);

/// Algebra- and coalgebra-morphism equations for f: src -> dst, plus the
/// derived entry lambda_dst o f = f o lambda_src.
AxiomReport check_hopf_morphism(const LinMap &f, const HopfAlgebraData &src,
                                const HopfAlgebraData &dst);

/// Linear extension of a map between index sets: e_x -> e_{images[x]}.
LinMap linearize_map(const std::vector<std::size_t> &images, std::size_t codomain_dim,
                     Field field);

} // namespace brace_forge
