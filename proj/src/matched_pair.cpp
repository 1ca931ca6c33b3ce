#include "brace_forge/matched_pair.hpp"

#include "brace_forge/actions.hpp"
#include "brace_forge/error.hpp"
#include "composites.hpp"

namespace brace_forge {

using detail::id;

void MatchedPairData::validate_shapes() const {
  a.validate_shapes();
  h.validate_shapes();
  if (a.field() != h.field())
    throw Error(ErrorKind::FieldMismatch, "A and H live over different fields");
  const std::size_t na = a.dim();
  const std::size_t nh = h.dim();
  if (phi_a.cols() != nh * na || phi_a.rows() != na)
    throw Error(ErrorKind::DimensionMismatch, "phi_A has shape " + phi_a.shape() + ", expected " +
                                                  std::to_string(nh * na) + "->" +
                                                  std::to_string(na));
  if (phi_h.cols() != nh * na || phi_h.rows() != nh)
    throw Error(ErrorKind::DimensionMismatch, "phi_H has shape " + phi_h.shape() + ", expected " +
                                                  std::to_string(nh * na) + "->" +
                                                  std::to_string(nh));
}

bool MatchedPairData::is_diagonal() const {
  return a.dim() == h.dim() && equal(a.eta(), h.eta()) && equal(a.mu(), h.mu()) &&
         equal(a.eps(), h.eps()) && equal(a.delta(), h.delta()) &&
         equal(a.lambda(), h.lambda());
}

namespace {

Diagram psi_diagram(const MatchedPairData &m) {
  const Field f = m.field();
  const std::size_t na = m.a.dim();
  const std::size_t nh = m.h.dim();
  return circ(otimes(m.phi_a, m.phi_h), otimes(id(f, nh), braid(f, nh, na), id(f, na)),
              otimes(m.h.delta(), m.a.delta()));
}

/// Folds a sub-report into one entry whose witness comes from the first
/// failure.
AxiomEntry collapse(std::string name, std::string description, const AxiomReport &sub) {
  AxiomEntry entry{std::move(name), std::move(description), true, false, std::nullopt};
  for (const AxiomEntry &e : sub.entries()) {
    if (e.passed || e.derived)
      continue;
    entry.passed = false;
    Witness w = e.witness.value_or(Witness{});
    w.note = e.name + (w.note.empty() ? "" : ": " + w.note);
    entry.witness = std::move(w);
    break;
  }
  return entry;
}

AxiomReport module_coalgebra_part(const MatchedPairData &m) {
  AxiomReport sub;
  const LeftModuleData left{m.h, m.a.space(), m.phi_a};
  const AxiomReport left_module = check_left_module(left);
  sub.merge(left_module, "A.");
  if (left_module.all_passed())
    sub.merge(check_module_coalgebra(left, m.a.coalgebra), "A.");
  const RightModuleData right{m.a, m.h.space(), m.phi_h};
  const AxiomReport right_module = check_right_module(right);
  sub.merge(right_module, "H.");
  if (right_module.all_passed())
    sub.merge(check_right_module_coalgebra(right, m.h.coalgebra), "H.");
  return sub;
}

void require_mp_over_A(const MatchedPairData &m, const char *what) {
  AxiomReport report;
  try {
    report = check_mp_over_A(m);
  } catch (const Error &e) {
    if (e.kind() != ErrorKind::PrereqFailed)
      throw;
    throw Error(ErrorKind::MpAxiomsFailed, std::string(what) + ": A is not a Hopf algebra",
                e.report() ? *e.report() : AxiomReport{});
  }
  if (!report.all_passed())
    throw Error(ErrorKind::MpAxiomsFailed, std::string(what) + " needs an object of MP(A)",
                report);
}

} // namespace

LinMap psi(const MatchedPairData &m) {
  m.validate_shapes();
  return psi_diagram(m).materialize();
}

AxiomReport check_matched_pair(const MatchedPairData &m) {
  m.validate_shapes();
  if (const auto base = check_hopf(m.a); !base.all_passed())
    throw Error(ErrorKind::PrereqFailed, "matched pair needs A to be a Hopf algebra", base);
  if (const auto base = check_hopf(m.h); !base.all_passed())
    throw Error(ErrorKind::PrereqFailed, "matched pair needs H to be a Hopf algebra", base);
  const Field f = m.field();
  const std::size_t na = m.a.dim();
  const std::size_t nh = m.h.dim();
  const Diagram A = id(f, na);
  const Diagram H = id(f, nh);
  const Diagram phi_a = m.phi_a;
  const Diagram phi_h = m.phi_h;
  const Diagram ps = psi(m);

  AxiomReport report;
  report.add(collapse("mp.i",
                      "(A, phi_A) left H-module coalgebra and (H, phi_H) right A-module "
                      "coalgebra",
                      module_coalgebra_part(m)));
  report.add(verify("mp.ii", "phi_A o (H (x) eta_A) = eps_H (x) eta_A",
                    {{"unit of A", circ(phi_a, otimes(H, m.a.eta())),
                      otimes(m.h.eps(), m.a.eta())}}));
  report.add(verify("mp.iii", "phi_H o (eta_H (x) A) = eta_H (x) eps_A",
                    {{"unit of H", circ(phi_h, otimes(m.h.eta(), A)),
                      otimes(m.h.eta(), m.a.eps())}}));
  report.add(verify("mp.iv", "phi_A o (H (x) mu_A) = mu_A o (A (x) phi_A) o (Psi (x) A)",
                    {{"product of A", circ(phi_a, otimes(H, m.a.mu())),
                      circ(Diagram(m.a.mu()), otimes(A, phi_a), otimes(ps, A))}}));
  report.add(verify("mp.v", "phi_H o (mu_H (x) A) = mu_H o (phi_H (x) H) o (H (x) Psi)",
                    {{"product of H", circ(phi_h, otimes(m.h.mu(), A)),
                      circ(Diagram(m.h.mu()), otimes(phi_h, H), otimes(H, ps))}}));
  report.add(verify("mp.vi",
                    "c_{A,H} o Psi = (phi_H (x) phi_A) o (H (x) c_{H,A} (x) A) o "
                    "(delta_H (x) delta_A)",
                    {{"braided Psi", circ(braid(f, na, nh), ps),
                      circ(otimes(phi_h, phi_a), otimes(H, braid(f, nh, na), A),
                           otimes(m.h.delta(), m.a.delta()))}}));
  return report;
}

AxiomReport check_mp_over_A(const MatchedPairData &m) {
  m.validate_shapes();
  if (!m.is_diagonal())
    throw Error(ErrorKind::NotDiagonal, "MP(A) needs A = H");
  if (!is_cocommutative(m.a))
    throw Error(ErrorKind::NotCocommutative, "MP(A) needs a cocommutative A");
  AxiomReport report = check_matched_pair(m);
  report.add(verify("mp.interweaving", "mu_A = mu_A o Psi",
                    {{"interweaving", m.a.mu(), circ(Diagram(m.a.mu()), psi(m))}}));
  return report;
}

MatchedPairData functor_F(const HopfBraceData &b) {
  b.validate_shapes();
  if (!is_cocommutative(b))
    throw Error(ErrorKind::NotCocommutative, "F needs a cocommutative Hopf brace");
  if (const auto report = check_hopf_brace(b); !report.all_passed())
    throw Error(ErrorKind::BraceAxiomsFailed, "F needs a Hopf brace", report);
  const HopfAlgebraData a = b.second();
  return MatchedPairData{a, a, gamma(b), phi(b)};
}

HopfBraceData functor_G(const MatchedPairData &m) {
  require_mp_over_A(m, "G");
  const HopfAlgebraData &a = m.a;
  const Diagram A = id(a);
  const Diagram phi_a = m.phi_a;
  const LinMap mu_bar =
      circ(Diagram(a.mu()), otimes(A, circ(phi_a, otimes(a.lambda(), A))), otimes(a.delta(), A))
          .materialize();
  const LinMap lambda_bar = circ(phi_a, otimes(A, a.lambda()), a.delta()).materialize();
  const HopfAlgebraData bar{AlgebraData{a.space(), a.eta(), mu_bar}, a.coalgebra, lambda_bar};
  return HopfBraceData::from_hopf(bar, a);
}

AxiomReport roundtrip_FG(const MatchedPairData &m) {
  const MatchedPairData back = functor_F(functor_G(m));
  AxiomReport report;
  const auto add_hopf = [&](const std::string &p, const HopfAlgebraData &x,
                            const HopfAlgebraData &y) {
    report.add(detail::component("roundtrip.", p + "eta", x.eta(), y.eta()));
    report.add(detail::component("roundtrip.", p + "mu", x.mu(), y.mu()));
    report.add(detail::component("roundtrip.", p + "eps", x.eps(), y.eps()));
    report.add(detail::component("roundtrip.", p + "delta", x.delta(), y.delta()));
    report.add(detail::component("roundtrip.", p + "lambda", x.lambda(), y.lambda()));
  };
  add_hopf("A.", m.a, back.a);
  add_hopf("H.", m.h, back.h);
  report.add(detail::component("roundtrip.", "phi_A", m.phi_a, back.phi_a));
  report.add(detail::component("roundtrip.", "phi_H", m.phi_h, back.phi_h));
  return report;
}

AxiomReport roundtrip_GF(const HopfBraceData &b) {
  const HopfBraceData back = functor_G(functor_F(b));
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

OppBraceTripleData obt_from_matched_pair(const MatchedPairData &m) {
  require_mp_over_A(m, "obt-from-mp");
  const HopfAlgebraData &a = m.a;
  const Diagram A = id(a);
  const Diagram phi_a = m.phi_a;
  return OppBraceTripleData{a, circ(phi_a, otimes(a.lambda(), A)).materialize(),
                            circ(phi_a, otimes(A, a.lambda()), a.delta()).materialize()};
}

MatchedPairData trivial_pair(const HopfAlgebraData &a, const HopfAlgebraData &h) {
  a.validate_shapes();
  h.validate_shapes();
  const Field f = a.field();
  return MatchedPairData{a, h, tensor(h.eps(), LinMap::identity(f, a.dim())),
                         tensor(LinMap::identity(f, h.dim()), a.eps())};
}

AxiomReport check_mp_morphism(const LinMap &f, const LinMap &g, const MatchedPairData &src,
                              const MatchedPairData &dst) {
  src.validate_shapes();
  dst.validate_shapes();
  AxiomReport report;
  report.merge(check_hopf_morphism(f, src.a, dst.a), "A.");
  report.merge(check_hopf_morphism(g, src.h, dst.h), "H.");
  report.add(verify("morphism.phi_A", "f o phi_A = phi_A' o (g (x) f)",
                    {{"left action", circ(Diagram(f), src.phi_a),
                      circ(Diagram(dst.phi_a), otimes(g, f))}}));
  report.add(verify("morphism.phi_H", "g o phi_H = phi_H' o (g (x) f)",
                    {{"right action", circ(Diagram(g), src.phi_h),
                      circ(Diagram(dst.phi_h), otimes(g, f))}}));
  return report;
}

} // namespace brace_forge
