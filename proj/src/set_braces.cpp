#include "brace_forge/set_braces.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <random>
#include <set>

#include "brace_forge/error.hpp"

namespace brace_forge {

namespace groups {

CayleyTable cyclic(std::size_t n) {
  if (n == 0)
    throw Error(ErrorKind::NotAGroup, "Z/0 is not finite");
  std::vector<std::size_t> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      t[a * n + b] = (a + b) % n;
  return CayleyTable(n, std::move(t), 0, "Z" + std::to_string(n));
}

CayleyTable dihedral(std::size_t k) {
  if (k == 0)
    throw Error(ErrorKind::NotAGroup, "dihedral group needs k >= 1");
  const std::size_t n = 2 * k;
  std::vector<std::size_t> t(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t a = x % k, b = x / k, c = y % k, d = y / k;
      const std::size_t rot = b == 0 ? (a + c) % k : (a + k - c) % k;
      t[x * n + y] = ((b + d) % 2) * k + rot;
    }
  return CayleyTable(n, std::move(t), 0, "D" + std::to_string(k));
}

CayleyTable quaternion() {
  // unit products q_a q_b = sign * q_c over {1, i, j, k}
  static constexpr int kSign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  static constexpr std::size_t kUnit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  std::vector<std::size_t> t(64);
  for (std::size_t x = 0; x < 8; ++x)
    for (std::size_t y = 0; y < 8; ++y) {
      const std::size_t sx = x / 4, qx = x % 4, sy = y / 4, qy = y % 4;
      const bool negative = ((sx + sy) % 2 == 1) != (kSign[qx][qy] < 0);
      t[x * 8 + y] = (negative ? 4 : 0) + kUnit[qx][qy];
    }
  return CayleyTable(8, std::move(t), 0, "Q8");
}

CayleyTable direct_product(const CayleyTable &g, const CayleyTable &h) {
  const std::size_t m = h.order();
  const std::size_t n = g.order() * m;
  std::vector<std::size_t> t(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      t[x * n + y] = g(x / m, y / m) * m + h(x % m, y % m);
  return CayleyTable(n, std::move(t), g.identity() * m + h.identity(),
                     g.label() + "x" + h.label());
}

namespace {

std::optional<std::size_t> parse_index(std::string_view s) {
  std::size_t v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty() || (s.size() > 1 && s[0] == '0'))
    return std::nullopt;
  return v;
}

CayleyTable factor(std::string_view name) {
  if (name == "S3")
    return dihedral(3).with_label("S3");
  if (name == "Q8")
    return quaternion();
  if (name == "V4")
    return direct_product(cyclic(2), cyclic(2)).with_label("V4");
  if (name.size() > 1 && (name[0] == 'Z' || name[0] == 'D'))
    if (const auto v = parse_index(name.substr(1)); v && *v >= 1 && *v <= 64)
      return name[0] == 'Z' ? cyclic(*v) : dihedral(*v);
  throw Error(ErrorKind::SchemaError, "unknown builtin group '" + std::string(name) + "'");
}

} // namespace

CayleyTable builtin(std::string_view name) {
  std::optional<CayleyTable> out;
  std::size_t start = 0;
  while (start <= name.size()) {
    const std::size_t end = std::min(name.find('x', start), name.size());
    CayleyTable f = factor(name.substr(start, end - start));
    out = out ? direct_product(*out, f) : f;
    start = end + 1;
  }
  return out->with_label(std::string(name));
}

std::vector<CayleyTable> of_order(std::size_t n) {
  switch (n) {
  case 1: return {cyclic(1)};
  case 2: return {cyclic(2)};
  case 3: return {cyclic(3)};
  case 4: return {cyclic(4), builtin("Z2xZ2")};
  case 5: return {cyclic(5)};
  case 6: return {cyclic(6), builtin("S3")};
  case 7: return {cyclic(7)};
  case 8: return {cyclic(8), builtin("Z2xZ4"), builtin("Z2xZ2xZ2"), dihedral(4), quaternion()};
  default:
    throw Error(ErrorKind::OrderTooLarge,
                "group representatives are built in for orders 1..8, not " + std::to_string(n));
  }
}

std::vector<CayleyTable> up_to(std::size_t max_order) {
  std::vector<CayleyTable> out;
  for (std::size_t n = 1; n <= max_order; ++n)
    for (auto &g : of_order(n))
      out.push_back(std::move(g));
  return out;
}

} // namespace groups

AxiomReport check_skew_brace(const SkewBraceData &s) {
  const CayleyTable &dot = s.dot;
  const CayleyTable &circ = s.circ;
  {
    AxiomReport pre;
    pre.merge(check_group(dot), "dot.");
    pre.merge(check_group(circ), "circ.");
    if (!pre.all_passed())
      throw Error(ErrorKind::PrereqFailed, "skew brace needs two groups", pre);
  }
  if (dot.order() != circ.order() || dot.identity() != circ.identity())
    throw Error(ErrorKind::PrereqFailed, "dot and circ must share index set and identity");

  const std::size_t n = dot.order();
  std::vector<std::size_t> inv(n);
  for (std::size_t a = 0; a < n; ++a)
    inv[a] = *dot.inverse(a);

  AxiomEntry law{"skew_brace.compatibility", "a o (b . c) = (a o b) . a^-1 . (a o c)", true,
                 false, std::nullopt};
  for (std::size_t a = 0; a < n && law.passed; ++a)
    for (std::size_t b = 0; b < n && law.passed; ++b)
      for (std::size_t c = 0; c < n && law.passed; ++c) {
        const std::size_t lhs = circ(a, dot(b, c));
        const std::size_t rhs = dot(dot(circ(a, b), inv[a]), circ(a, c));
        if (lhs != rhs) {
          law.passed = false;
          law.witness = Witness{"compatibility", (a * n + b) * n + c, std::nullopt,
                                std::to_string(lhs), std::to_string(rhs),
                                "(a,b,c)=(" + std::to_string(a) + "," + std::to_string(b) + "," +
                                    std::to_string(c) + ")"};
        }
      }
  AxiomReport report;
  report.add(std::move(law));
  return report;
}

SkewBraceData trivial_skew_brace(const CayleyTable &g) { return SkewBraceData{g, g}; }

std::vector<CayleyTable> labelled_groups(std::size_t n, std::size_t identity) {
  if (identity >= n)
    throw Error(ErrorKind::NotAGroup, "identity index out of range");
  std::set<CayleyTable> seen;
  for (const CayleyTable &rep : groups::of_order(n)) {
    // targets[k] is the new index of the k-th non-identity element of rep
    std::vector<std::size_t> targets;
    for (std::size_t x = 0; x < n; ++x)
      if (x != identity)
        targets.push_back(x);
    do {
      std::vector<std::size_t> perm(n);
      perm[rep.identity()] = identity;
      std::size_t k = 0;
      for (std::size_t x = 0; x < n; ++x)
        if (x != rep.identity())
          perm[x] = targets[k++];
      seen.insert(rep.relabel(perm).with_label({}));
    } while (std::next_permutation(targets.begin(), targets.end()));
  }
  return {seen.begin(), seen.end()};
}

Enumeration enumerate_skew_braces(const CayleyTable &dot, const EnumerationOptions &opts) {
  if (dot.order() > 8)
    throw Error(ErrorKind::OrderTooLarge, "skew brace enumeration is limited to order 8");
  if (const auto report = check_group(dot); !report.all_passed())
    throw Error(ErrorKind::NotAGroup, "enumeration needs a group", report);
  std::vector<CayleyTable> candidates = labelled_groups(dot.order(), dot.identity());
  if (opts.shuffle_seed) {
    std::mt19937_64 rng(*opts.shuffle_seed);
    std::shuffle(candidates.begin(), candidates.end(), rng);
  }
  Enumeration out;
  out.candidates = candidates.size();
  for (const CayleyTable &c : candidates) {
    SkewBraceData s{dot, c};
    if (check_skew_brace(s).all_passed())
      out.braces.push_back(std::move(s));
  }
  std::sort(out.braces.begin(), out.braces.end(),
            [](const SkewBraceData &x, const SkewBraceData &y) { return x.circ < y.circ; });
  return out;
}

HopfBraceData linearize(const SkewBraceData &s, Field field) {
  AxiomReport report;
  try {
    report = check_skew_brace(s);
  } catch (const Error &e) {
    if (e.kind() != ErrorKind::PrereqFailed)
      throw;
    throw Error(ErrorKind::SkewBraceAxiomsFailed, e.detail(),
                e.report() ? *e.report() : AxiomReport{});
  }
  if (!report.all_passed())
    throw Error(ErrorKind::SkewBraceAxiomsFailed, "linearize needs a skew brace", report);
  return HopfBraceData::from_hopf(group_algebra(s.dot, field), group_algebra(s.circ, field));
}

std::vector<std::vector<std::size_t>> skew_brace_morphisms(const SkewBraceData &src,
                                                           const SkewBraceData &dst) {
  const std::size_t n = src.order();
  const std::size_t m = dst.order();
  if (n > 8 || m > 8)
    throw Error(ErrorKind::OrderTooLarge, "morphism search is limited to order 8");
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> f(n, 0);
  std::vector<bool> set(n, false);
  // Assign f in index order; after each assignment, check every relation
  // whose three elements are already assigned.
  const auto consistent = [&](std::size_t k) {
    for (std::size_t x = 0; x <= k; ++x)
      for (std::size_t y = 0; y <= k; ++y) {
        if (x != k && y != k)
          continue;
        const std::size_t d = src.dot(x, y);
        if (set[d] && f[d] != dst.dot(f[x], f[y]))
          return false;
        const std::size_t c = src.circ(x, y);
        if (set[c] && f[c] != dst.circ(f[x], f[y]))
          return false;
      }
    for (std::size_t x = 0; x < k; ++x)
      for (std::size_t y = 0; y < k; ++y) {
        const std::size_t d = src.dot(x, y);
        if (d == k && f[d] != dst.dot(f[x], f[y]))
          return false;
        const std::size_t c = src.circ(x, y);
        if (c == k && f[c] != dst.circ(f[x], f[y]))
          return false;
      }
    return true;
  };
  const auto search = [&](auto &&self, std::size_t k) -> void {
    if (k == n) {
      out.push_back(f);
      return;
    }
    for (std::size_t v = 0; v < m; ++v) {
      if (k == src.dot.identity() && v != dst.dot.identity())
        continue;
      f[k] = v;
      set[k] = true;
      if (consistent(k))
        self(self, k + 1);
      set[k] = false;
    }
  };
  search(search, 0);
  return out;
}

} // namespace brace_forge
