#pragma once

// Shared composite builders for the checkers. Internal header.

#include <string>
#include <vector>

#include "brace_forge/diagram.hpp"
#include "brace_forge/hopf.hpp"

namespace brace_forge::detail {

inline Diagram id(Field field, std::size_t dim) { return Diagram::identity(field, dim); }
inline Diagram id(const HopfAlgebraData &h) { return Diagram::identity(h.field(), h.dim()); }
inline Diagram swap(const HopfAlgebraData &h) { return braid(h.field(), h.dim(), h.dim()); }

/// delta_{C (x) D} = (C (x) c_{C,D} (x) D) o (delta_C (x) delta_D)
inline Diagram tensor_coproduct(const CoalgebraData &c, const CoalgebraData &d) {
  const Field f = c.field();
  return circ(otimes(id(f, c.dim()), braid(f, c.dim(), d.dim()), id(f, d.dim())),
              otimes(c.coproduct, d.coproduct));
}

inline Diagram tensor_counit(const CoalgebraData &c, const CoalgebraData &d) {
  return otimes(c.counit, d.counit);
}

/// eps_dst o f = eps_src, delta_dst o f = (f (x) f) o delta_src.
inline std::vector<Equation> coalgebra_morphism(const Diagram &f, const Diagram &eps_src,
                                                const Diagram &delta_src,
                                                const CoalgebraData &dst) {
  return {
      {"counit preserved", circ(dst.counit, f), eps_src},
      {"comultiplicative", circ(dst.coproduct, f), circ(otimes(f, f), delta_src)},
  };
}

inline std::vector<Equation> coalgebra_morphism(const Diagram &f, const CoalgebraData &src,
                                                const CoalgebraData &dst) {
  return coalgebra_morphism(f, src.counit, src.coproduct, dst);
}

/// f o eta_src = eta_dst, f o mu_src = mu_dst o (f (x) f).
inline std::vector<Equation> algebra_morphism(const Diagram &f, const AlgebraData &src,
                                              const AlgebraData &dst) {
  return {
      {"unit preserved", circ(f, src.unit), dst.unit},
      {"multiplicative", circ(f, src.product), circ(dst.product, otimes(f, f))},
  };
}

/// Componentwise exact equality; the witness names the component.
inline AxiomEntry same_map(std::string name, std::string description, const LinMap &expected,
                           const LinMap &actual) {
  return verify(std::move(name), std::move(description), {{"component", expected, actual}});
}

/// Round-trip entry "<prefix><name>": the recovered component equals the original.
inline AxiomEntry component(const std::string &prefix, const std::string &name,
                            const LinMap &original, const LinMap &recovered) {
  return verify(prefix + name, name + " recovered exactly", {{name, original, recovered}});
}

} // namespace brace_forge::detail
