#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "brace_forge/linmap.hpp"
#include "brace_forge/report.hpp"

namespace brace_forge {

/// Lazy composite of linear maps, kept as a sequence of layers where each
/// layer is a tensor product of dense factors (or identities). Evaluation
/// applies layers to sparse vectors one basis column at a time, so large
/// tensor powers such as H^{(x)4} never become dense matrices.
///
/// Composition and tensoring follow LinMap's conventions exactly:
/// materialize(circ(f, g)) == compose(f, g) and
/// materialize(otimes(f, g)) == tensor(f, g).
class Diagram {
public:
  Diagram(const LinMap &map); // NOLINT(google-explicit-constructor)

  static Diagram identity(Field field, std::size_t dim);

  Field field() const { return field_; }
  std::size_t domain_dim() const { return domain_dim_; }
  std::size_t codomain_dim() const { return codomain_dim_; }
  std::string shape() const;

  SparseVector apply(const SparseVector &v) const;
  /// Image of the basis vector e_j.
  SparseVector image(std::size_t j) const;
  LinMap materialize() const;

  friend Diagram circ(const Diagram &f, const Diagram &g);
  friend Diagram otimes(const Diagram &f, const Diagram &g);

private:
  struct Factor {
    std::optional<LinMap> map; // nullopt: identity on `in`
    std::size_t in;
    std::size_t out;
  };
  using Layer = std::vector<Factor>;

  Diagram(Field field, std::size_t dim);
  static SparseVector apply_layer(const Layer &layer, const SparseVector &v);
  static Layer pad(const Layer &layer, std::size_t left, std::size_t right);

  Field field_;
  std::size_t domain_dim_;
  std::size_t codomain_dim_;
  std::vector<Layer> layers_; // layers_[0] is applied first
};

/// f o g.
Diagram circ(const Diagram &f, const Diagram &g);
/// f (x) g, evaluated layer-wise by the interchange law.
Diagram otimes(const Diagram &f, const Diagram &g);

/// f1 o f2 o ... o fn.
template <class... Rest>
Diagram circ(const Diagram &f, const Diagram &g, const Diagram &h, const Rest &...rest) {
  return circ(circ(f, g), h, rest...);
}

/// f1 (x) f2 (x) ... (x) fn.
template <class... Rest>
Diagram otimes(const Diagram &f, const Diagram &g, const Diagram &h, const Rest &...rest) {
  return otimes(otimes(f, g), h, rest...);
}

/// Braiding c_{A,B} as a diagram factor.
Diagram braid(Field field, std::size_t a, std::size_t b);

/// First column (then row) on which the two diagrams differ.
std::optional<Mismatch> first_mismatch(const Diagram &lhs, const Diagram &rhs);

struct Equation {
  std::string label;
  Diagram lhs;
  Diagram rhs;
};

/// One report entry that passes iff every equation holds; the witness
/// names the first failing equation.
AxiomEntry verify(std::string name, std::string description,
                  const std::vector<Equation> &equations, bool derived = false);

} // namespace brace_forge
