#include "brace_forge/hopf.hpp"

#include "brace_forge/error.hpp"
#include "composites.hpp"

namespace brace_forge {

using detail::id;

namespace {

void require_shape(const LinMap &m, std::size_t dom, std::size_t cod, const char *name) {
  if (m.cols() != dom || m.rows() != cod)
    throw Error(ErrorKind::DimensionMismatch, std::string(name) + " has shape " + m.shape() +
                                                  ", expected " + std::to_string(dom) + "->" +
                                                  std::to_string(cod));
}

void require_field(const LinMap &m, Field f, const char *name) {
  if (m.field() != f)
    throw Error(ErrorKind::FieldMismatch,
                std::string(name) + " is over " + m.field().to_string() + ", expected " +
                    f.to_string());
}

} // namespace

void AlgebraData::validate_shapes() const {
  const std::size_t n = dim();
  require_shape(unit, 1, n, "unit");
  require_shape(product, n * n, n, "product");
  require_field(unit, field(), "unit");
}

void CoalgebraData::validate_shapes() const {
  const std::size_t n = dim();
  require_shape(counit, n, 1, "counit");
  require_shape(coproduct, n, n * n, "coproduct");
  require_field(counit, field(), "counit");
}

void HopfAlgebraData::validate_shapes() const {
  algebra.validate_shapes();
  coalgebra.validate_shapes();
  if (algebra.dim() != coalgebra.dim())
    throw Error(ErrorKind::DimensionMismatch, "algebra and coalgebra live on different spaces");
  require_field(coalgebra.coproduct, field(), "coproduct");
  require_shape(antipode, dim(), dim(), "antipode");
  require_field(antipode, field(), "antipode");
}

HopfAlgebraData HopfAlgebraData::from_maps(const LinMap &eta, const LinMap &mu, const LinMap &eps,
                                           const LinMap &delta, const LinMap &lambda,
                                           std::string label) {
  Space space(lambda.cols(), std::move(label));
  HopfAlgebraData h{AlgebraData{space, eta, mu}, CoalgebraData{space, eps, delta}, lambda};
  h.validate_shapes();
  return h;
}

AxiomReport check_algebra(const AlgebraData &a) {
  a.validate_shapes();
  const Field f = a.field();
  const Diagram A = id(f, a.dim());
  AxiomReport report;
  report.add(verify("algebra.unit", "mu o (eta (x) A) = id = mu o (A (x) eta)",
                    {{"left unit", circ(a.product, otimes(a.unit, A)), A},
                     {"right unit", circ(a.product, otimes(A, a.unit)), A}}));
  report.add(verify("algebra.associativity", "mu o (mu (x) A) = mu o (A (x) mu)",
                    {{"associativity", circ(a.product, otimes(a.product, A)),
                      circ(a.product, otimes(A, a.product))}}));
  return report;
}

AxiomReport check_coalgebra(const CoalgebraData &c) {
  c.validate_shapes();
  const Field f = c.field();
  const Diagram C = id(f, c.dim());
  AxiomReport report;
  report.add(verify("coalgebra.counit", "(eps (x) C) o delta = id = (C (x) eps) o delta",
                    {{"left counit", circ(otimes(c.counit, C), c.coproduct), C},
                     {"right counit", circ(otimes(C, c.counit), c.coproduct), C}}));
  report.add(verify("coalgebra.coassociativity", "(delta (x) C) o delta = (C (x) delta) o delta",
                    {{"coassociativity", circ(otimes(c.coproduct, C), c.coproduct),
                      circ(otimes(C, c.coproduct), c.coproduct)}}));
  return report;
}

LinMap convolve(const LinMap &f, const LinMap &g, const CoalgebraData &c, const AlgebraData &a) {
  if (f.cols() != c.dim() || g.cols() != c.dim() || f.rows() != a.dim() || g.rows() != a.dim())
    throw Error(ErrorKind::DimensionMismatch,
                "convolve: f is " + f.shape() + ", g is " + g.shape() + ", expected " +
                    std::to_string(c.dim()) + "->" + std::to_string(a.dim()));
  return circ(Diagram(a.product), otimes(f, g), c.coproduct).materialize();
}

AxiomReport check_hopf(const HopfAlgebraData &h) {
  h.validate_shapes();
  const Field f = h.field();
  AxiomReport report;
  report.merge(check_algebra(h.algebra));
  report.merge(check_coalgebra(h.coalgebra));

  // K is a coalgebra with eps_K = id_K, delta_K = id_K.
  const Diagram K = id(f, 1);
  const CoalgebraData &c = h.coalgebra;
  report.add(verify("bialgebra.unit_coalgebra_morphism", "eta is a coalgebra morphism",
                    detail::coalgebra_morphism(h.eta(), K, K, c)));
  report.add(verify("bialgebra.product_coalgebra_morphism", "mu is a coalgebra morphism",
                    detail::coalgebra_morphism(h.mu(), detail::tensor_counit(c, c),
                                               detail::tensor_coproduct(c, c), c)));

  const LinMap unit_counit = compose(h.eta(), h.eps());
  const LinMap identity = LinMap::identity(f, h.dim());
  report.add(verify("antipode.left", "lambda * id = eps (x) eta",
                    {{"lambda * id", convolve(h.lambda(), identity, c, h.algebra), unit_counit}}));
  report.add(verify("antipode.right", "id * lambda = eps (x) eta",
                    {{"id * lambda", convolve(identity, h.lambda(), c, h.algebra), unit_counit}}));
  return report;
}

bool is_commutative(const AlgebraData &a) {
  a.validate_shapes();
  return !first_mismatch(circ(Diagram(a.product), braid(a.field(), a.dim(), a.dim())),
                         a.product);
}

bool is_cocommutative(const CoalgebraData &c) {
  c.validate_shapes();
  return !first_mismatch(circ(braid(c.field(), c.dim(), c.dim()), c.coproduct), c.coproduct);
}

AxiomReport check_antipode_properties(const HopfAlgebraData &h) {
  if (const auto base = check_hopf(h); !base.all_passed())
    throw Error(ErrorKind::PrereqFailed, "antipode properties need a Hopf algebra", base);
  const Diagram c = detail::swap(h);
  const Diagram lambda = h.lambda();
  AxiomReport report;
  report.add(verify("antipode.antimultiplicative", "lambda o mu = mu o c o (lambda (x) lambda)",
                    {{"antimultiplicative", circ(lambda, h.mu()),
                      circ(Diagram(h.mu()), c, otimes(lambda, lambda))}}));
  report.add(verify("antipode.anticomultiplicative",
                    "delta o lambda = (lambda (x) lambda) o c o delta",
                    {{"anticomultiplicative", circ(Diagram(h.delta()), lambda),
                      circ(otimes(lambda, lambda), c, h.delta())}}));
  report.add(verify("antipode.preserves_unit", "lambda o eta = eta",
                    {{"unit", circ(lambda, h.eta()), h.eta()}}));
  report.add(verify("antipode.preserves_counit", "eps o lambda = eps",
                    {{"counit", circ(Diagram(h.eps()), lambda), h.eps()}}));
  if (is_commutative(h) || is_cocommutative(h))
    report.add(verify("antipode.involutive", "lambda o lambda = id",
                      {{"involutive", circ(lambda, lambda), id(h)}}));
  return report;
}

HopfAlgebraData opposite_hopf(const HopfAlgebraData &h) {
  h.validate_shapes();
  if (!is_cocommutative(h))
    throw Error(ErrorKind::NotCocommutative,
                "the opposite Hopf algebra with the same antipode needs a cocommutative input");
  HopfAlgebraData out = h;
  out.algebra.product = circ(Diagram(h.mu()), detail::swap(h)).materialize();
  return out;
}

LinMap linearize_map(const std::vector<std::size_t> &images, std::size_t codomain_dim,
                     Field field) {
  std::vector<SparseVector> columns;
  columns.reserve(images.size());
  for (std::size_t x : images)
    columns.push_back(SparseVector{Term{x, Scalar::one(field)}});
  return LinMap::from_columns(field, images.size(), codomain_dim, columns);
}

HopfAlgebraData group_algebra(const CayleyTable &g, Field field) {
  if (const auto report = check_group(g); !report.all_passed())
    throw Error(ErrorKind::NotAGroup, "table is not a group: " + report.failed_names().front(),
                report);
  const std::size_t n = g.order();
  const Scalar one = Scalar::one(field);
  std::vector<std::size_t> products(n * n);
  std::vector<std::size_t> diagonal(n);
  std::vector<std::size_t> inverses(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b)
      products[a * n + b] = g(a, b);
    diagonal[a] = a * n + a;
    inverses[a] = *g.inverse(a);
  }
  const Space space(n, g.label());
  const LinMap eta = LinMap::from_columns(field, 1, n, {SparseVector{Term{g.identity(), one}}});
  const LinMap eps = linearize_map(std::vector<std::size_t>(n, 0), 1, field);
  return HopfAlgebraData{
      AlgebraData{space, eta, linearize_map(products, n, field)},
      CoalgebraData{space, eps, linearize_map(diagonal, n * n, field)},
      linearize_map(inverses, n, field),
  };
}

AxiomReport check_hopf_morphism(const LinMap &f, const HopfAlgebraData &src,
                                const HopfAlgebraData &dst) {
  src.validate_shapes();
  dst.validate_shapes();
  if (f.cols() != src.dim() || f.rows() != dst.dim())
    throw Error(ErrorKind::DimensionMismatch, "morphism has shape " + f.shape() + ", expected " +
                                                  std::to_string(src.dim()) + "->" +
                                                  std::to_string(dst.dim()));
  AxiomReport report;
  report.add(verify("morphism.algebra", "f preserves unit and product",
                    detail::algebra_morphism(f, src.algebra, dst.algebra)));
  report.add(verify("morphism.coalgebra", "f preserves counit and coproduct",
                    detail::coalgebra_morphism(f, src.coalgebra, dst.coalgebra)));
  report.add(verify("morphism.antipode", "lambda_dst o f = f o lambda_src",
                    {{"commutes with antipodes", circ(Diagram(dst.lambda()), f),
                      circ(Diagram(f), src.lambda())}},
                    /*derived=*/true));
  return report;
}

} // namespace brace_forge
