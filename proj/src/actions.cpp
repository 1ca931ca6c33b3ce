#include "brace_forge/actions.hpp"

#include "brace_forge/error.hpp"
#include "composites.hpp"

namespace brace_forge {

using detail::id;

namespace {

void require_action_shape(const LinMap &action, std::size_t h, std::size_t m) {
  if (action.cols() != h * m || action.rows() != m)
    throw Error(ErrorKind::DimensionMismatch,
                "action has shape " + action.shape() + ", expected " + std::to_string(h * m) +
                    "->" + std::to_string(m));
}

void require_carrier(const Space &carrier, std::size_t dim) {
  if (carrier.dim() != dim)
    throw Error(ErrorKind::DimensionMismatch, "carrier structure has dimension " +
                                                  std::to_string(dim) + ", carrier is " +
                                                  std::to_string(carrier.dim()));
}

} // namespace

AxiomReport check_left_module(const LeftModuleData &m) {
  m.hopf.validate_shapes();
  const std::size_t n = m.carrier.dim();
  require_action_shape(m.action, m.hopf.dim(), n);
  const Field f = m.hopf.field();
  const Diagram M = id(f, n);
  const Diagram H = id(m.hopf);
  const Diagram phi = m.action;
  AxiomReport report;
  report.add(verify("module.unit", "phi o (eta (x) M) = id",
                    {{"unit acts trivially", circ(phi, otimes(m.hopf.eta(), M)), M}}));
  report.add(verify("module.associativity", "phi o (H (x) phi) = phi o (mu (x) M)",
                    {{"associativity", circ(phi, otimes(H, phi)),
                      circ(phi, otimes(m.hopf.mu(), M))}}));
  return report;
}

AxiomReport check_right_module(const RightModuleData &m) {
  m.hopf.validate_shapes();
  const std::size_t n = m.carrier.dim();
  require_action_shape(m.action, m.hopf.dim(), n);
  const Field f = m.hopf.field();
  const Diagram M = id(f, n);
  const Diagram H = id(m.hopf);
  const Diagram phi = m.action;
  AxiomReport report;
  report.add(verify("right_module.unit", "phi o (M (x) eta) = id",
                    {{"unit acts trivially", circ(phi, otimes(M, m.hopf.eta())), M}}));
  report.add(verify("right_module.associativity", "phi o (phi (x) H) = phi o (M (x) mu)",
                    {{"associativity", circ(phi, otimes(phi, H)),
                      circ(phi, otimes(M, m.hopf.mu()))}}));
  return report;
}

AxiomReport check_module_algebra(const LeftModuleData &m, const AlgebraData &alg) {
  if (const auto base = check_left_module(m); !base.all_passed())
    throw Error(ErrorKind::PrereqFailed, "module algebra needs a left module", base);
  alg.validate_shapes();
  require_carrier(m.carrier, alg.dim());
  const Field f = m.hopf.field();
  const std::size_t h = m.hopf.dim();
  const std::size_t a = alg.dim();
  const Diagram H = id(f, h);
  const Diagram A = id(f, a);
  const Diagram phi = m.action;
  const Diagram diagonal =
      circ(otimes(phi, phi), otimes(H, braid(f, h, a), A), otimes(m.hopf.delta(), A, A));
  AxiomReport report;
  report.add(verify("module_algebra.unit", "phi o (H (x) eta_A) = eps_H (x) eta_A",
                    {{"unit is H-linear", circ(phi, otimes(H, alg.unit)),
                      otimes(m.hopf.eps(), alg.unit)}}));
  report.add(verify("module_algebra.product", "phi o (H (x) mu_A) = mu_A o phi_{A(x)A}",
                    {{"product is H-linear", circ(phi, otimes(H, alg.product)),
                      circ(Diagram(alg.product), diagonal)}}));
  return report;
}

AxiomReport check_module_coalgebra(const LeftModuleData &m, const CoalgebraData &coa) {
  if (const auto base = check_left_module(m); !base.all_passed())
    throw Error(ErrorKind::PrereqFailed, "module coalgebra needs a left module", base);
  coa.validate_shapes();
  require_carrier(m.carrier, coa.dim());
  const Field f = m.hopf.field();
  const std::size_t h = m.hopf.dim();
  const std::size_t n = coa.dim();
  const Diagram H = id(f, h);
  const Diagram C = id(f, n);
  const Diagram phi = m.action;
  const Diagram diagonal =
      circ(otimes(phi, phi), otimes(H, braid(f, h, n), C), otimes(m.hopf.delta(), C, C));

  AxiomReport report;
  const AxiomEntry counit =
      verify("module_coalgebra.counit", "eps_C o phi = eps_H (x) eps_C",
             {{"counit is H-linear", circ(Diagram(coa.counit), phi),
               otimes(m.hopf.eps(), coa.counit)}});
  const AxiomEntry coproduct =
      verify("module_coalgebra.coproduct", "delta_C o phi = phi_{C(x)C} o (H (x) delta_C)",
             {{"coproduct is H-linear", circ(Diagram(coa.coproduct), phi),
               circ(diagonal, otimes(H, coa.coproduct))}});
  const AxiomEntry morphism =
      verify("module_coalgebra.coalgebra_morphism", "phi: H (x) C -> C is a coalgebra morphism",
             detail::coalgebra_morphism(phi, detail::tensor_counit(m.hopf.coalgebra, coa),
                                        detail::tensor_coproduct(m.hopf.coalgebra, coa), coa));
  const bool agree = (counit.passed && coproduct.passed) == morphism.passed;
  report.add(counit);
  report.add(coproduct);
  report.add(morphism);
  if (agree)
    report.add_pass("module_coalgebra.formulations_agree",
                    "H-linearity of eps_C, delta_C iff phi is a coalgebra morphism", true);
  else
    report.add_fail("module_coalgebra.formulations_agree",
                    "H-linearity of eps_C, delta_C iff phi is a coalgebra morphism",
                    Witness::noted("formulations disagree"), true);
  return report;
}

AxiomReport check_right_module_coalgebra(const RightModuleData &m, const CoalgebraData &coa) {
  if (const auto base = check_right_module(m); !base.all_passed())
    throw Error(ErrorKind::PrereqFailed, "right module coalgebra needs a right module", base);
  coa.validate_shapes();
  require_carrier(m.carrier, coa.dim());
  const Field f = m.hopf.field();
  const std::size_t h = m.hopf.dim();
  const std::size_t n = coa.dim();
  const Diagram H = id(f, h);
  const Diagram C = id(f, n);
  const Diagram phi = m.action;
  const Diagram diagonal =
      circ(otimes(phi, phi), otimes(C, braid(f, n, h), H), otimes(C, C, m.hopf.delta()));

  AxiomReport report;
  const AxiomEntry counit =
      verify("right_module_coalgebra.counit", "eps_C o phi = eps_C (x) eps_H",
             {{"counit is H-linear", circ(Diagram(coa.counit), phi),
               otimes(coa.counit, m.hopf.eps())}});
  const AxiomEntry coproduct =
      verify("right_module_coalgebra.coproduct",
             "delta_C o phi = phi_{C(x)C} o (delta_C (x) H)",
             {{"coproduct is H-linear", circ(Diagram(coa.coproduct), phi),
               circ(diagonal, otimes(coa.coproduct, H))}});
  const AxiomEntry morphism = verify(
      "right_module_coalgebra.coalgebra_morphism", "phi: C (x) H -> C is a coalgebra morphism",
      detail::coalgebra_morphism(phi, detail::tensor_counit(coa, m.hopf.coalgebra),
                                 detail::tensor_coproduct(coa, m.hopf.coalgebra), coa));
  const bool agree = (counit.passed && coproduct.passed) == morphism.passed;
  report.add(counit);
  report.add(coproduct);
  report.add(morphism);
  if (agree)
    report.add_pass("right_module_coalgebra.formulations_agree",
                    "H-linearity of eps_C, delta_C iff phi is a coalgebra morphism", true);
  else
    report.add_fail("right_module_coalgebra.formulations_agree",
                    "H-linearity of eps_C, delta_C iff phi is a coalgebra morphism",
                    Witness::noted("formulations disagree"), true);
  return report;
}

LeftModuleData adjoint_action(const HopfAlgebraData &h) {
  if (const auto base = check_hopf(h); !base.all_passed())
    throw Error(ErrorKind::PrereqFailed, "adjoint action needs a Hopf algebra", base);
  const Diagram H = id(h);
  const LinMap action = circ(Diagram(h.mu()), otimes(h.mu(), h.lambda()),
                             otimes(H, detail::swap(h)), otimes(h.delta(), H))
                            .materialize();
  return LeftModuleData{h, h.space(), action};
}

} // namespace brace_forge
