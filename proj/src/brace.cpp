#include "brace_forge/brace.hpp"

#include "brace_forge/error.hpp"
#include "composites.hpp"

namespace brace_forge {

using detail::id;

HopfBraceData HopfBraceData::from_hopf(const HopfAlgebraData &h1, const HopfAlgebraData &h2) {
  h1.validate_shapes();
  h2.validate_shapes();
  if (h1.dim() != h2.dim())
    throw Error(ErrorKind::DimensionMismatch, "H1 and H2 have different dimensions");
  if (!equal(h1.eta(), h2.eta()))
    throw Error(ErrorKind::PrereqFailed, "H1 and H2 must share the unit");
  if (!equal(h1.eps(), h2.eps()) || !equal(h1.delta(), h2.delta()))
    throw Error(ErrorKind::PrereqFailed, "H1 and H2 must share the coalgebra");
  return HopfBraceData{h1.space(), h1.eta(), h1.eps(), h1.delta(),
                       h1.mu(),    h1.lambda(), h2.mu(), h2.lambda()};
}

HopfAlgebraData HopfBraceData::first() const {
  return HopfAlgebraData{AlgebraData{space, unit, product1}, coalgebra(), antipode1};
}

HopfAlgebraData HopfBraceData::second() const {
  return HopfAlgebraData{AlgebraData{space, unit, product2}, coalgebra(), antipode2};
}

void HopfBraceData::validate_shapes() const {
  first().validate_shapes();
  second().validate_shapes();
}

bool is_cocommutative(const HopfBraceData &b) { return is_cocommutative(b.coalgebra()); }

namespace {

Diagram gamma_diagram(const HopfBraceData &b) {
  const Diagram H = id(b.field(), b.dim());
  return circ(Diagram(b.product1), otimes(b.antipode1, b.product2), otimes(b.coproduct, H));
}

} // namespace

LinMap gamma(const HopfBraceData &b) {
  b.validate_shapes();
  return gamma_diagram(b).materialize();
}

LinMap phi(const HopfBraceData &b) {
  b.validate_shapes();
  if (!is_cocommutative(b))
    throw Error(ErrorKind::NotCocommutative, "Phi is only defined for cocommutative braces");
  const Field f = b.field();
  const std::size_t n = b.dim();
  const Diagram H = id(f, n);
  const Diagram lambda2_gamma = circ(Diagram(b.antipode2), gamma(b));
  return circ(Diagram(b.product2), otimes(lambda2_gamma, b.product2),
              otimes(H, braid(f, n, n), H), otimes(b.coproduct, b.coproduct))
      .materialize();
}

AxiomReport check_hopf_brace(const HopfBraceData &b) {
  b.validate_shapes();
  const Field f = b.field();
  const std::size_t n = b.dim();
  const Diagram H = id(f, n);
  AxiomReport report;
  report.merge(check_hopf(b.first()), "H1.");
  report.merge(check_hopf(b.second()), "H2.");
  const LinMap g = gamma(b);
  report.add(verify(
      "brace.compatibility",
      "mu2 o (H (x) mu1) = mu1 o (mu2 (x) Gamma) o (H (x) c (x) H) o (delta (x) H (x) H)",
      {{"compatibility", circ(Diagram(b.product2), otimes(H, b.product1)),
        circ(Diagram(b.product1), otimes(b.product2, g), otimes(H, braid(f, n, n), H),
             otimes(b.coproduct, H, H))}}));
  return report;
}

AxiomReport check_brace_identities(const HopfBraceData &b) {
  if (const auto base = check_hopf_brace(b); !base.all_passed())
    throw Error(ErrorKind::PrereqFailed, "brace identities need a Hopf brace", base);
  const Field f = b.field();
  const std::size_t n = b.dim();
  const Diagram H = id(f, n);
  const Diagram c = braid(f, n, n);
  const LinMap g = gamma(b);
  AxiomReport report;
  report.add(verify("identity.gamma_antipode",
                    "Gamma o (H (x) lambda1) = mu1 o ((lambda1 o mu2) (x) H) o (H (x) c) o "
                    "(delta (x) H)",
                    {{"Gamma o (H (x) lambda1)", circ(Diagram(g), otimes(H, b.antipode1)),
                      circ(Diagram(b.product1), otimes(circ(Diagram(b.antipode1), b.product2), H),
                           otimes(H, c), otimes(b.coproduct, H))}}));
  report.add(verify("identity.mu2_from_mu1", "mu2 = mu1 o (H (x) Gamma) o (delta (x) H)",
                    {{"mu2", b.product2,
                      circ(Diagram(b.product1), otimes(H, g), otimes(b.coproduct, H))}}));
  report.add(verify("identity.mu1_from_mu2",
                    "mu1 = mu2 o (H (x) (Gamma o (lambda2 (x) H))) o (delta (x) H)",
                    {{"mu1", b.product1,
                      circ(Diagram(b.product2), otimes(H, circ(Diagram(g), otimes(b.antipode2, H))),
                           otimes(b.coproduct, H))}}));
  return report;
}

HopfBraceData trivial_brace(const HopfAlgebraData &h) {
  if (const auto base = check_hopf(h); !base.all_passed())
    throw Error(ErrorKind::PrereqFailed, "trivial brace needs a Hopf algebra", base);
  return HopfBraceData::from_hopf(h, h);
}

AxiomReport check_brace_morphism(const LinMap &f, const HopfBraceData &src,
                                 const HopfBraceData &dst) {
  AxiomReport report;
  report.merge(check_hopf_morphism(f, src.first(), dst.first()), "H1.");
  report.merge(check_hopf_morphism(f, src.second(), dst.second()), "H2.");
  report.add(verify("morphism.gamma", "f o Gamma = Gamma' o (f (x) f)",
                    {{"Gamma compatibility", circ(Diagram(f), gamma(src)),
                      circ(Diagram(gamma(dst)), otimes(f, f))}},
                    /*derived=*/true));
  return report;
}

} // namespace brace_forge
