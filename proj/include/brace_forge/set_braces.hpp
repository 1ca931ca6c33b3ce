#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "brace_forge/brace.hpp"
#include "brace_forge/cayley.hpp"

namespace brace_forge {

namespace groups {

/// Z/n with a . b = a + b mod n.
CayleyTable cyclic(std::size_t n);
/// Dihedral group of order 2k; element r^i s^j has index j*k + i.
CayleyTable dihedral(std::size_t k);
/// Quaternion group; index 4*s + q for sign s in {+,-} and q in {1, i, j, k}.
CayleyTable quaternion();
/// G x H with index g * |H| + h.
CayleyTable direct_product(const CayleyTable &g, const CayleyTable &h);

/// "Z<n>", "S3", "D<k>" (order 2k), "Q8", "V4", or products such as
/// "Z2xZ4". Throws Error(SchemaError) for unknown names.
CayleyTable builtin(std::string_view name);

/// One representative per isomorphism class, orders 1..8.
std::vector<CayleyTable> of_order(std::size_t n);
/// All representatives of order <= max_order (max_order <= 8).
std::vector<CayleyTable> up_to(std::size_t max_order);

} // namespace groups

/// (G, ., o) on one index set with a shared identity.
struct SkewBraceData {
  CayleyTable dot;
  CayleyTable circ;

  std::size_t order() const { return dot.order(); }
  friend bool operator==(const SkewBraceData &, const SkewBraceData &) = default;
};

/// Exhaustive check of a o (b . c) = (a o b) . a^{-1} . (a o c), a^{-1} the
/// dot-inverse. Throws Error(PrereqFailed) unless both tables are groups
/// with the same identity.
AxiomReport check_skew_brace(const SkewBraceData &s);

/// (G, ., .)
SkewBraceData trivial_skew_brace(const CayleyTable &g);

struct EnumerationOptions {
  /// Shuffle the candidate list before filtering; the output does not depend on it.
  std::optional<std::uint64_t> shuffle_seed;
};

struct Enumeration {
  std::vector<SkewBraceData> braces; ///< sorted by circ table
  std::size_t candidates = 0;        ///< labelled group tables tried
};

/// Every group table on the index set of `dot` with its identity that makes
/// a skew brace with `dot`. Candidates are the relabellings of the order-n
/// representatives fixing the identity. Throws Error(OrderTooLarge) above
/// order 8 and Error(NotAGroup) if `dot` is not a group.
Enumeration enumerate_skew_braces(const CayleyTable &dot, const EnumerationOptions &opts = {});

/// Labelled group tables on {0..n-1} with the given identity.
std::vector<CayleyTable> labelled_groups(std::size_t n, std::size_t identity);

/// H1 = K[G, .], H2 = K[G, o] on the shared group-like coalgebra. Throws
/// Error(SkewBraceAxiomsFailed).
HopfBraceData linearize(const SkewBraceData &s, Field field);

/// Maps f with f(x . y) = f(x) . f(y) and f(x o y) = f(x) o f(y), as image
/// vectors in lexicographic order. Throws Error(OrderTooLarge) above order 8.
std::vector<std::vector<std::size_t>> skew_brace_morphisms(const SkewBraceData &src,
                                                           const SkewBraceData &dst);

} // namespace brace_forge
