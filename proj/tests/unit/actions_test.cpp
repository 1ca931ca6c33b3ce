#include <doctest.h>

#include "brace_forge/actions.hpp"
#include "brace_forge/error.hpp"
#include "brace_forge/set_braces.hpp"

using namespace brace_forge;

namespace {

const Field Q = Field::rationals();

LinMap left_trivial(const HopfAlgebraData &h, std::size_t m) {
  return tensor(h.eps(), LinMap::identity(h.field(), m));
}

LinMap right_trivial(const HopfAlgebraData &h, std::size_t m) {
  return tensor(LinMap::identity(h.field(), m), h.eps());
}

bool fails(const AxiomReport &r, std::string_view name) {
  const AxiomEntry *e = r.find(name);
  return e && !e->passed && e->witness;
}

} // namespace

TEST_CASE("left modules") {
  const HopfAlgebraData z3 = group_algebra(groups::cyclic(3), Q);
  CHECK(check_left_module({z3, z3.space(), z3.mu()}).all_passed());
  CHECK(check_left_module({z3, Space(2), left_trivial(z3, 2)}).all_passed());
  const LinMap corrupted = z3.mu().with_entry(0, 4, Scalar::one(Q));
  CHECK_FALSE(check_left_module({z3, z3.space(), corrupted}).all_passed());
}

TEST_CASE("right modules") {
  const HopfAlgebraData z3 = group_algebra(groups::cyclic(3), Q);
  CHECK(check_right_module({z3, z3.space(), z3.mu()}).all_passed());
  CHECK(check_right_module({z3, Space(2), right_trivial(z3, 2)}).all_passed());
  const LinMap corrupted = z3.mu().with_entry(0, 4, Scalar::one(Q));
  CHECK_FALSE(check_right_module({z3, z3.space(), corrupted}).all_passed());

  // column g (x) e sent to 0
  const LinMap no_unit = z3.mu().with_entry(1, 3, Scalar::zero(Q));
  CHECK(fails(check_right_module({z3, z3.space(), no_unit}), "right_module.unit"));
}

TEST_CASE("module algebras") {
  const HopfAlgebraData s3 = group_algebra(groups::builtin("S3"), Q);
  CHECK(check_module_algebra(adjoint_action(s3), s3.algebra).all_passed());
  CHECK(check_module_algebra({s3, s3.space(), left_trivial(s3, 6)}, s3.algebra).all_passed());

  const AxiomReport regular = check_module_algebra({s3, s3.space(), s3.mu()}, s3.algebra);
  CHECK(fails(regular, "module_algebra.product"));

  const LinMap corrupted = s3.mu().with_entry(0, 7, Scalar::one(Q));
  CHECK_THROWS_AS(check_module_algebra({s3, s3.space(), corrupted}, s3.algebra), Error);
}

TEST_CASE("module coalgebras") {
  const HopfAlgebraData s3 = group_algebra(groups::builtin("S3"), Q);
  const LeftModuleData ad = adjoint_action(s3);
  const AxiomReport r = check_module_coalgebra(ad, s3.coalgebra);
  CHECK(r.all_passed());
  CHECK(r.find("module_coalgebra.formulations_agree"));
  CHECK(check_module_coalgebra({s3, s3.space(), left_trivial(s3, 6)}, s3.coalgebra).all_passed());

  // delta(r) = r (x) r + e (x) e; conjugating r by s moves it off r.
  const LinMap delta = s3.delta().with_entry(0, 1, Scalar::one(Q));
  const AxiomReport bad = check_module_coalgebra(ad, {s3.space(), s3.eps(), delta});
  CHECK(fails(bad, "module_coalgebra.coproduct"));
  CHECK(fails(bad, "module_coalgebra.coalgebra_morphism"));
  CHECK(bad.find("module_coalgebra.formulations_agree")->passed);
}

TEST_CASE("right module coalgebras") {
  const HopfAlgebraData s3 = group_algebra(groups::builtin("S3"), Q);
  CHECK(check_right_module_coalgebra({s3, s3.space(), right_trivial(s3, 6)}, s3.coalgebra)
            .all_passed());
  CHECK(check_right_module_coalgebra({s3, s3.space(), s3.mu()}, s3.coalgebra).all_passed());
}

TEST_CASE("adjoint action") {
  const HopfAlgebraData z6 = group_algebra(groups::cyclic(6), Q);
  CHECK(equal(adjoint_action(z6).action, left_trivial(z6, 6)));

  const CayleyTable s3 = groups::builtin("S3");
  const HopfAlgebraData h = group_algebra(s3, Q);
  const LeftModuleData ad = adjoint_action(h);
  CHECK(check_left_module(ad).all_passed());
  std::vector<std::size_t> conj;
  for (std::size_t g = 0; g < 6; ++g)
    for (std::size_t x = 0; x < 6; ++x)
      conj.push_back(s3(s3(g, x), *s3.inverse(g)));
  CHECK(equal(ad.action, linearize_map(conj, 6, Q)));
  CHECK_FALSE(equal(ad.action, left_trivial(h, 6)));

  const HopfAlgebraData k = group_algebra(groups::cyclic(1), Q);
  CHECK(equal(adjoint_action(k).action, left_trivial(k, 1)));

  const HopfAlgebraData broken =
      HopfAlgebraData::from_maps(h.eta(), h.mu(), h.eps(), h.delta(), LinMap::identity(Q, 6));
  CHECK_THROWS_AS(adjoint_action(broken), Error);
}
