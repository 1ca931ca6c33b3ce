#include "fixtures.hpp"

#include <algorithm>

namespace brace_forge::fixtures {

namespace {

SparseVector single(std::size_t index, Scalar coeff) {
  if (coeff.is_zero())
    return {};
  return {Term{index, coeff}};
}

LinMap columns(Field f, std::size_t domain, std::size_t codomain,
               const std::vector<SparseVector> &cols) {
  return LinMap::from_columns(f, domain, codomain, cols);
}

} // namespace

HopfAlgebraData sweedler(Field f) {
  // basis 0 = 1, 1 = g, 2 = x, 3 = gx; g^i x^j has index 2j + i
  const auto one = Scalar::one(f);
  std::vector<SparseVector> mu(16);
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) {
      const std::size_t i1 = a % 2, j1 = a / 2, i2 = b % 2, j2 = b / 2;
      if (j1 + j2 > 1)
        continue;
      const Scalar sign = (j1 * i2) % 2 ? -one : one;
      mu[a * 4 + b] = single(2 * (j1 + j2) + (i1 + i2) % 2, sign);
    }
  std::vector<SparseVector> delta{
      {{0, one}},                 // 1 -> 1 (x) 1
      {{5, one}},                 // g -> g (x) g
      {{6, one}, {8, one}},       // x -> g (x) x + x (x) 1
      {{3, one}, {13, one}}};     // gx -> 1 (x) gx + gx (x) g
  std::vector<SparseVector> lambda{{{0, one}}, {{1, one}}, {{3, -one}}, {{2, one}}};
  return HopfAlgebraData::from_maps(columns(f, 1, 4, {{{0, one}}}), columns(f, 16, 4, mu),
                                    columns(f, 4, 1, {{{0, one}}, {{0, one}}, {}, {}}),
                                    columns(f, 4, 16, delta), columns(f, 4, 4, lambda), "H4");
}

HopfAlgebraData function_algebra(const CayleyTable &g, Field f) {
  const std::size_t n = g.order();
  const auto one = Scalar::one(f);
  SparseVector unit;
  for (std::size_t x = 0; x < n; ++x)
    unit.push_back({x, one});
  std::vector<SparseVector> mu(n * n), eps(n), delta(n), lambda(n);
  for (std::size_t x = 0; x < n; ++x) {
    mu[x * n + x] = {{x, one}};
    if (x == g.identity())
      eps[x] = {{0, one}};
    lambda[x] = {{*g.inverse(x), one}};
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      delta[g(a, b)].push_back({a * n + b, one});
  for (auto &col : delta)
    std::sort(col.begin(), col.end(), [](const Term &l, const Term &r) { return l.index < r.index; });
  return HopfAlgebraData::from_maps(columns(f, 1, n, {unit}), columns(f, n * n, n, mu),
                                    columns(f, n, 1, eps), columns(f, n, n * n, delta),
                                    columns(f, n, n, lambda), "K^" + g.label());
}

OppBraceTripleData set_triple(const CayleyTable &g, const Table &m,
                              const std::vector<std::size_t> &u, Field f) {
  const std::size_t n = g.order();
  std::vector<std::size_t> flat;
  for (const auto &row : m)
    flat.insert(flat.end(), row.begin(), row.end());
  return {group_algebra(g, f), linearize_map(flat, n, f), linearize_map(u, n, f)};
}

MatchedPairData set_pair(const CayleyTable &a, const CayleyTable &h, const Table &left,
                         const Table &right, Field f) {
  std::vector<std::size_t> l, r;
  for (std::size_t x = 0; x < h.order(); ++x)
    for (std::size_t y = 0; y < a.order(); ++y) {
      l.push_back(left[x][y]);
      r.push_back(right[x][y]);
    }
  return {group_algebra(a, f), group_algebra(h, f), linearize_map(l, a.order(), f),
          linearize_map(r, h.order(), f)};
}

ControlOutcome evaluate(const NegativeControl &control) {
  ControlOutcome out;
  const AxiomReport report = control.check();
  out.failed = report.failed_names();
  out.detected = !control.intended.empty();
  for (const auto &name : control.intended) {
    const AxiomEntry *e = report.find(name);
    if (!e || e->passed || !e->witness)
      out.detected = false;
  }
  out.isolated = out.detected && std::all_of(out.failed.begin(), out.failed.end(), [&](const auto &n) {
                   return std::find(control.intended.begin(), control.intended.end(), n) !=
                          control.intended.end();
                 });
  return out;
}

std::vector<NegativeControl> negative_controls() {
  const Field q = Field::rationals();
  const CayleyTable z2 = groups::cyclic(2), z3 = groups::cyclic(3), z4 = groups::cyclic(4);
  const CayleyTable z6 = groups::cyclic(6), v4 = groups::builtin("V4");
  std::vector<NegativeControl> out;

  out.push_back({"algebra", {"algebra.associativity"}, "Q[Z3] with g.g = g", true, [=] {
                   const HopfAlgebraData h = group_algebra(z3, q);
                   const LinMap mu =
                       h.mu().with_entry(2, 4, Scalar::zero(q)).with_entry(1, 4, Scalar::one(q));
                   return check_algebra({h.space(), h.eta(), mu});
                 }});
  out.push_back({"coalgebra", {"coalgebra.counit"}, "Q[Z3] with eps(g) = 0", true, [=] {
                   const HopfAlgebraData h = group_algebra(z3, q);
                   return check_coalgebra(
                       {h.space(), h.eps().with_entry(0, 1, Scalar::zero(q)), h.delta()});
                 }});
  out.push_back({"antipode", {"antipode.left", "antipode.right"}, "Q[Z3] with lambda = id", true,
                 [=] {
                   const HopfAlgebraData h = group_algebra(z3, q);
                   return check_hopf(HopfAlgebraData::from_maps(h.eta(), h.mu(), h.eps(), h.delta(),
                                                                LinMap::identity(q, 3)));
                 }});
  out.push_back({"brace", {"brace.compatibility"}, "Z4 with circ = Z4 relabelled by (1 2)", true,
                 [=] {
                   const CayleyTable circ = z4.relabel({0, 2, 1, 3});
                   return check_hopf_brace(
                       HopfBraceData::from_hopf(group_algebra(z4, q), group_algebra(circ, q)));
                 }});

  // obt (i): bicharacter twist of the trivial triple on Q[V4]
  out.push_back({"obt", {"obt.i"}, "Q[V4], m(x (x) y) = chi(x, y) y", true, [=] {
                   const HopfAlgebraData a = group_algebra(v4, q);
                   std::vector<SparseVector> cols(16);
                   for (std::size_t x = 0; x < 4; ++x)
                     for (std::size_t y = 0; y < 4; ++y) {
                       const bool odd = ((x / 2) * (y % 2) + (x % 2) * (y / 2)) % 2;
                       cols[x * 4 + y] = {{y, Scalar(q, odd ? -1L : 1L)}};
                     }
                   return check_obt({a, LinMap::from_columns(q, 16, 4, cols), a.lambda()});
                 }});
  out.push_back({"obt", {"obt.ii"}, "Q[Z3], m(x (x) y) = e, u = id", false, [=] {
                   return check_obt(set_triple(z3, {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}, {0, 1, 2}, q));
                 }});
  out.push_back({"obt", {"obt.iii"}, "Q[Z3], m(x (x) y) = xy, u = id", false, [=] {
                   return check_obt(set_triple(z3, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}, {0, 1, 2}, q));
                 }});
  out.push_back({"obt", {"obt.iv"}, "Q[Z3], m(x (x) y) = -y for x != e, u = id", true, [=] {
                   return check_obt(set_triple(z3, {{0, 1, 2}, {0, 2, 1}, {0, 2, 1}}, {0, 1, 2}, q));
                 }});
  out.push_back({"obt", {"obt.v"}, "Q[Z6], m(x (x) -) cycles {2, 3, 4} by x mod 3", true, [=] {
                   return check_obt(set_triple(z6,
                                               {{0, 1, 2, 3, 4, 5},
                                                {0, 1, 3, 4, 2, 5},
                                                {0, 1, 4, 2, 3, 5},
                                                {0, 1, 2, 3, 4, 5},
                                                {0, 1, 3, 4, 2, 5},
                                                {0, 1, 4, 2, 3, 5}},
                                               {0, 5, 2, 3, 4, 1}, q));
                 }});
  out.push_back({"obt", {"obt.vi"}, "trivial triple on Q^S3", true, [=] {
                   return check_obt(trivial_triple(function_algebra(groups::builtin("S3"), q)));
                 }});
  out.push_back({"obt", {"obt.vii"}, "Q[Z3], trivial m, u = e", false, [=] {
                   return check_obt(set_triple(z3, {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}}, {0, 0, 0}, q));
                 }});
  out.push_back({"obt", {"obt.viii"}, "Q[Z2], trivial m, u swaps e and g", true, [=] {
                   return check_obt(set_triple(z2, {{0, 1}, {0, 1}}, {1, 0}, q));
                 }});

  out.push_back({"mp", {"mp.i"}, "Z2 on Z2, both actions constant e", true, [=] {
                   return check_matched_pair(set_pair(z2, z2, {{0, 0}, {0, 0}}, {{0, 0}, {0, 0}}, q));
                 }});
  out.push_back({"mp", {"mp.ii"}, "Z2 on Z2, h |> a = h, h <| a = e", false, [=] {
                   return check_matched_pair(set_pair(z2, z2, {{0, 0}, {1, 1}}, {{0, 0}, {0, 0}}, q));
                 }});
  out.push_back({"mp", {"mp.iii"}, "Z2 on Z2, h |> a = e, h <| a = a", false, [=] {
                   return check_matched_pair(set_pair(z2, z2, {{0, 0}, {0, 0}}, {{0, 1}, {0, 1}}, q));
                 }});
  out.push_back({"mp", {"mp.iv"}, "V4 on V4", true, [=] {
                   return check_matched_pair(set_pair(v4, v4,
                                                      {{0, 1, 2, 3}, {0, 1, 2, 3}, {0, 1, 3, 2}, {0, 1, 3, 2}},
                                                      {{0, 0, 0, 0}, {1, 1, 2, 2}, {2, 2, 1, 1}, {3, 3, 3, 3}},
                                                      q));
                 }});
  out.push_back({"mp", {"mp.v"}, "A = Z2, H = Z4, trivial |>, g <| a swaps 2 and 3", true, [=] {
                   return check_matched_pair(set_pair(z2, z4, {{0, 1}, {0, 1}, {0, 1}, {0, 1}},
                                                      {{0, 0}, {1, 1}, {2, 3}, {3, 2}}, q));
                 }});
  out.push_back({"mp", {"mp.vi"}, "H4 on Q[Z3]: g inverts, x acts by 0, trivial <|", true, [=] {
                   const HopfAlgebraData a = group_algebra(z3, q), h = sweedler(q);
                   std::vector<SparseVector> left(12), right(12);
                   for (std::size_t y = 0; y < 3; ++y) {
                     left[0 * 3 + y] = {{y, Scalar::one(q)}};
                     left[1 * 3 + y] = {{*z3.inverse(y), Scalar::one(q)}};
                     for (std::size_t x = 0; x < 4; ++x)
                       right[x * 3 + y] = {{x, Scalar::one(q)}};
                   }
                   return check_matched_pair({a, h, LinMap::from_columns(q, 12, 3, left),
                                              LinMap::from_columns(q, 12, 4, right)});
                 }});
  return out;
}

} // namespace brace_forge::fixtures
