#include "brace_forge/obt.hpp"

#include "brace_forge/actions.hpp"
#include "brace_forge/error.hpp"
#include "composites.hpp"

namespace brace_forge {

using detail::id;

void OppBraceTripleData::validate_shapes() const {
  hopf.validate_shapes();
  const std::size_t n = dim();
  if (m.cols() != n * n || m.rows() != n)
    throw Error(ErrorKind::DimensionMismatch, "m has shape " + m.shape() + ", expected " +
                                                  std::to_string(n * n) + "->" +
                                                  std::to_string(n));
  if (u.cols() != n || u.rows() != n)
    throw Error(ErrorKind::DimensionMismatch,
                "u has shape " + u.shape() + ", expected " + std::to_string(n) + "->" +
                    std::to_string(n));
  if (m.field() != field() || u.field() != field())
    throw Error(ErrorKind::FieldMismatch, "m and u must live over the field of A");
}

namespace {

Diagram mu_tilde_diagram(const OppBraceTripleData &t) {
  return circ(Diagram(t.hopf.mu()), otimes(id(t.hopf), t.m), otimes(t.hopf.delta(), id(t.hopf)));
}

void require_cocommutative(const HopfAlgebraData &a, const char *what) {
  if (!is_cocommutative(a))
    throw Error(ErrorKind::NotCocommutative, std::string(what) + " needs a cocommutative A");
}

void require_obt(const OppBraceTripleData &t, const char *what) {
  AxiomReport report;
  try {
    report = check_obt(t);
  } catch (const Error &e) {
    if (e.kind() != ErrorKind::PrereqFailed)
      throw;
    throw Error(ErrorKind::ObtAxiomsFailed, std::string(what) + ": A is not a Hopf algebra",
                e.report() ? *e.report() : AxiomReport{});
  }
  if (!report.all_passed())
    throw Error(ErrorKind::ObtAxiomsFailed,
                std::string(what) + " needs an opposite brace triple", report);
}

} // namespace

LinMap mu_tilde(const OppBraceTripleData &t) {
  t.validate_shapes();
  return mu_tilde_diagram(t).materialize();
}

AxiomReport check_obt(const OppBraceTripleData &t) {
  t.validate_shapes();
  if (const auto base = check_hopf(t.hopf); !base.all_passed())
    throw Error(ErrorKind::PrereqFailed, "opposite brace triple needs a Hopf algebra A", base);
  const HopfAlgebraData &a = t.hopf;
  const Field f = a.field();
  const std::size_t n = a.dim();
  const Diagram A = id(a);
  const Diagram c = braid(f, n, n);
  const Diagram m = t.m;
  const Diagram u = t.u;
  const Diagram mt = mu_tilde(t);

  AxiomReport report;
  report.add(verify("obt.i", "m is a coalgebra morphism A (x) A -> A",
                    detail::coalgebra_morphism(m, detail::tensor_counit(a.coalgebra, a.coalgebra),
                                               detail::tensor_coproduct(a.coalgebra, a.coalgebra),
                                               a.coalgebra)));
  report.add(verify("obt.ii", "m o (eta (x) A) = id", {{"left unit", circ(m, otimes(a.eta(), A)), A}}));
  report.add(verify("obt.iii", "m o (A (x) eta) = eps (x) eta",
                    {{"right unit", circ(m, otimes(A, a.eta())), otimes(a.eps(), a.eta())}}));
  report.add(verify("obt.iv", "m o (A (x) m) = m o (mu^op (x) A)",
                    {{"action of mu^op", circ(m, otimes(A, m)),
                      circ(m, otimes(circ(Diagram(a.mu()), c), A))}}));
  report.add(verify(
      "obt.v", "m o (A (x) mu~) = mu~ o (m (x) m) o (A (x) c (x) A) o (delta (x) A (x) A)",
      {{"m acts by mu~-algebra maps", circ(m, otimes(A, mt)),
        circ(mt, otimes(m, m), otimes(A, c, A), otimes(a.delta(), A, A))}}));
  report.add(verify("obt.vi", "u is a coalgebra morphism",
                    detail::coalgebra_morphism(u, a.coalgebra, a.coalgebra)));
  report.add(verify("obt.vii", "u o u = id", {{"involution", circ(u, u), A}}));
  report.add(verify("obt.viii", "m o (A (x) u) o delta = lambda",
                    {{"antipode recovery", circ(m, otimes(A, u), a.delta()), a.lambda()}}));
  return report;
}

HopfAlgebraData build_deformed_hopf(const OppBraceTripleData &t) {
  t.validate_shapes();
  require_cocommutative(t.hopf, "deformed Hopf algebra");
  require_obt(t, "deformed Hopf algebra");
  return HopfAlgebraData{AlgebraData{t.hopf.space(), t.hopf.eta(), mu_tilde(t)},
                         t.hopf.coalgebra, t.u};
}

HopfBraceData functor_P(const OppBraceTripleData &t) {
  const HopfAlgebraData deformed = build_deformed_hopf(t);
  return HopfBraceData::from_hopf(deformed, t.hopf);
}

OppBraceTripleData functor_Q(const HopfBraceData &b) {
  b.validate_shapes();
  if (!is_cocommutative(b))
    throw Error(ErrorKind::NotCocommutative, "Q needs a cocommutative Hopf brace");
  if (const auto report = check_hopf_brace(b); !report.all_passed())
    throw Error(ErrorKind::BraceAxiomsFailed, "Q needs a Hopf brace", report);
  const LinMap m =
      circ(Diagram(gamma(b)), otimes(b.antipode2, id(b.field(), b.dim()))).materialize();
  return OppBraceTripleData{b.second(), m, b.antipode1};
}

AxiomReport check_lemma_mu_recovery(const OppBraceTripleData &t) {
  t.validate_shapes();
  require_cocommutative(t.hopf, "mu recovery");
  AxiomReport report;
  report.merge(check_obt(t), "prereq.");
  const HopfAlgebraData &a = t.hopf;
  const Diagram A = id(a);
  const Diagram m_lambda = circ(Diagram(t.m), otimes(a.lambda(), A));
  report.add(verify("lemma.mu_recovery",
                    "mu = mu~ o (A (x) (m o (lambda (x) A))) o (delta (x) A)",
                    {{"mu", a.mu(),
                      circ(mu_tilde_diagram(t), otimes(A, m_lambda), otimes(a.delta(), A))}},
                    /*derived=*/true));
  return report;
}

AxiomReport check_obt_modules(const OppBraceTripleData &t) {
  const HopfAlgebraData deformed = build_deformed_hopf(t);
  const HopfAlgebraData &a = t.hopf;
  AxiomReport report;
  report.merge(check_left_module(LeftModuleData{opposite_hopf(a), a.space(), t.m}), "m.");
  const LinMap action = circ(Diagram(t.m), otimes(a.lambda(), id(a))).materialize();
  const LeftModuleData gamma_module{a, a.space(), action};
  const AxiomReport base = check_left_module(gamma_module);
  report.merge(base, "m_lambda.");
  if (base.all_passed()) {
    report.merge(check_module_algebra(gamma_module, deformed.algebra), "m_lambda.");
    report.merge(check_module_coalgebra(gamma_module, deformed.coalgebra), "m_lambda.");
  }
  return report;
}

AxiomReport check_obt_morphism(const LinMap &f, const OppBraceTripleData &src,
                               const OppBraceTripleData &dst) {
  src.validate_shapes();
  dst.validate_shapes();
  AxiomReport report = check_hopf_morphism(f, src.hopf, dst.hopf);
  report.add(verify("morphism.m", "f o m = m' o (f (x) f)",
                    {{"m compatibility", circ(Diagram(f), src.m),
                      circ(Diagram(dst.m), otimes(f, f))}}));
  report.add(verify("morphism.mu_tilde", "f o mu~ = mu~' o (f (x) f)",
                    {{"deformed product", circ(Diagram(f), mu_tilde(src)),
                      circ(Diagram(mu_tilde(dst)), otimes(f, f))}},
                    /*derived=*/true));
  report.add(verify("morphism.u", "u' o f = f o u",
                    {{"u compatibility", circ(Diagram(dst.u), f), circ(Diagram(f), src.u)}},
                    /*derived=*/true));
  return report;
}

AxiomReport roundtrip_PQ(const HopfBraceData &b) {
  const HopfBraceData back = functor_P(functor_Q(b));
  AxiomReport report;
  report.add(detail::component("roundtrip.", "eta", b.unit, back.unit));
  report.add(detail::component("roundtrip.", "eps", b.counit, back.counit));
  report.add(detail::component("roundtrip.", "delta", b.coproduct, back.coproduct));
  report.add(detail::component("roundtrip.", "mu1", b.product1, back.product1));
  report.add(detail::component("roundtrip.", "lambda1", b.antipode1, back.antipode1));
  report.add(detail::component("roundtrip.", "mu2", b.product2, back.product2));
  report.add(detail::component("roundtrip.", "lambda2", b.antipode2, back.antipode2));
  return report;
}

AxiomReport roundtrip_QP(const OppBraceTripleData &t) {
  const OppBraceTripleData back = functor_Q(functor_P(t));
  AxiomReport report;
  report.add(detail::component("roundtrip.", "eta", t.hopf.eta(), back.hopf.eta()));
  report.add(detail::component("roundtrip.", "mu", t.hopf.mu(), back.hopf.mu()));
  report.add(detail::component("roundtrip.", "eps", t.hopf.eps(), back.hopf.eps()));
  report.add(detail::component("roundtrip.", "delta", t.hopf.delta(), back.hopf.delta()));
  report.add(detail::component("roundtrip.", "lambda", t.hopf.lambda(), back.hopf.lambda()));
  report.add(detail::component("roundtrip.", "m", t.m, back.m));
  report.add(detail::component("roundtrip.", "u", t.u, back.u));
  return report;
}

OppBraceTripleData trivial_triple(const HopfAlgebraData &a) {
  a.validate_shapes();
  return OppBraceTripleData{a, tensor(a.eps(), LinMap::identity(a.field(), a.dim())),
                            a.lambda()};
}

} // namespace brace_forge
