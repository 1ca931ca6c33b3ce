#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "brace_forge/matched_pair.hpp"
#include "brace_forge/obt.hpp"
#include "brace_forge/set_braces.hpp"

namespace brace_forge::fixtures {

using Table = std::vector<std::vector<std::size_t>>;

/// Sweedler's four-dimensional Hopf algebra on the basis 1, g, x, gx with
/// g^2 = 1, x^2 = 0, xg = -gx, delta(x) = x (x) 1 + g (x) x. Needs char != 2.
HopfAlgebraData sweedler(Field field);

/// K^G on the basis of point indicators: pointwise product,
/// delta(e_g) = sum_{ab=g} e_a (x) e_b, lambda(e_g) = e_{g^{-1}}.
HopfAlgebraData function_algebra(const CayleyTable &g, Field field);

/// Triple on K[G] with m(x (x) y) = M[x][y] and u(x) = U[x].
OppBraceTripleData set_triple(const CayleyTable &g, const Table &m,
                              const std::vector<std::size_t> &u, Field field);

/// Pair on K[A], K[H] with h |> a = left[h][a] and h <| a = right[h][a].
MatchedPairData set_pair(const CayleyTable &a, const CayleyTable &h, const Table &left,
                         const Table &right, Field field);

/// One mutation fixture of criterion 10.
struct NegativeControl {
  std::string family;
  /// Report entries the mutation targets; all must fail.
  std::vector<std::string> intended;
  std::string description;
  /// False where no fixture failing only `intended` exists (or none was found).
  bool isolatable = true;
  std::function<AxiomReport()> check;
};

struct ControlOutcome {
  bool detected = false; ///< every intended entry failed with a witness
  bool isolated = false; ///< no other entry failed
  std::vector<std::string> failed;
};

ControlOutcome evaluate(const NegativeControl &control);

/// Algebra, coalgebra, antipode, brace compatibility, obt (i)-(viii), mp (i)-(vi).
std::vector<NegativeControl> negative_controls();

} // namespace brace_forge::fixtures
