#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "brace_forge/linmap.hpp"

// Reference implementations written without the library's code paths, used to
// freeze expected values.
namespace brace_forge::oracle {

/// Row-major rows x cols rational matrix.
struct Dense {
  std::size_t rows = 0, cols = 0;
  std::vector<mpq_class> a;
  mpq_class &at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const mpq_class &at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

Dense dense(const LinMap &f);
Dense multiply(const Dense &f, const Dense &g);
Dense kron(const Dense &f, const Dense &g);
Dense swap(std::size_t m, std::size_t n);
/// Reduces every entry modulo p (p > 0) so F_p results can be compared.
Dense modulo(Dense d, unsigned long p);
bool same(const Dense &f, const Dense &g);

using Table = std::vector<std::vector<std::size_t>>;

/// All group tables on {0..n-1} with identity 0, by backtracking over
/// Latin squares whose first row and column are fixed, then filtering for
/// associativity.
std::vector<Table> naive_groups(std::size_t n);

/// a o (b . c) = (a o b) . a^-1 . (a o c) for all a, b, c.
bool naive_skew_law(const Table &dot, const Table &circ);

/// Random map with small integer (or small fraction) entries, about a
/// third of them zero.
LinMap random_map(std::mt19937 &rng, Field field, std::size_t domain, std::size_t codomain);

/// Number of circ tables among naive_groups(n) forming a skew brace with `dot`.
std::size_t naive_skew_brace_count(const Table &dot);

} // namespace brace_forge::oracle
