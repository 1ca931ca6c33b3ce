#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "brace_forge/actions.hpp"
#include "brace_forge/error.hpp"
#include "brace_forge/io.hpp"
#include "brace_forge/matched_pair.hpp"
#include "brace_forge/obt.hpp"
#include "brace_forge/set_braces.hpp"
#include "brace_forge/suite.hpp"

namespace py = pybind11;
using namespace brace_forge;

namespace {

using Matrix = std::vector<std::vector<std::string>>;

Matrix to_rows(const LinMap &f) {
  Matrix out(f.rows(), std::vector<std::string>(f.cols()));
  for (std::size_t r = 0; r < f.rows(); ++r)
    for (std::size_t c = 0; c < f.cols(); ++c)
      out[r][c] = f.at(r, c).to_string();
  return out;
}

LinMap from_rows(const Matrix &rows, Field field) {
  if (rows.empty())
    throw Error(ErrorKind::ShapeError, "empty matrix");
  std::vector<Scalar> entries;
  for (const auto &row : rows) {
    if (row.size() != rows.front().size())
      throw Error(ErrorKind::ShapeError, "ragged matrix");
    for (const auto &s : row)
      entries.push_back(Scalar::parse(field, s));
  }
  return LinMap(field, Space(rows.front().size()), Space(rows.size()), std::move(entries));
}

CayleyTable group_from(const py::object &g) {
  if (py::isinstance<py::str>(g))
    return groups::builtin(g.cast<std::string>());
  return g.cast<CayleyTable>();
}

py::object to_python(const io::StructureFile &file) {
  return std::visit([](const auto &v) { return py::cast(v); }, file.value);
}

template <class T> void def_io(py::module_ &m) {
  m.def("serialize", [](const T &v) { return io::serialize({v, {}}); });
  m.def("save", [](const T &v, const std::filesystem::path &p) { io::save({v, {}}, p); });
}

} // namespace

PYBIND11_MODULE(_brace_forge, m) {
  m.doc() = "Exact Hopf algebra, Hopf brace, opposite brace triple and matched pair checker";

  static py::exception<Error> error(m, "BraceForgeError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p)
        std::rethrow_exception(p);
    } catch (const Error &e) {
      PyErr_SetString(error.ptr(), e.what());
    }
  });

  py::class_<Field>(m, "Field")
      .def_static("rationals", &Field::rationals)
      .def_static("prime", &Field::prime)
      .def_static("parse", &Field::parse)
      .def_property_readonly("characteristic", &Field::characteristic)
      .def("__eq__", [](Field a, Field b) { return a == b; })
      .def("__str__", &Field::to_string)
      .def("__repr__", [](Field f) { return "Field('" + f.to_string() + "')"; });

  py::class_<LinMap>(m, "LinMap")
      .def_static("from_rows", &from_rows, py::arg("rows"), py::arg("field"))
      .def_static("identity", &LinMap::identity)
      .def_property_readonly("rows", &LinMap::rows)
      .def_property_readonly("cols", &LinMap::cols)
      .def_property_readonly("field", &LinMap::field)
      .def("to_rows", &to_rows)
      .def("__eq__", [](const LinMap &a, const LinMap &b) { return equal(a, b).equal; })
      .def("__repr__", [](const LinMap &f) { return "LinMap(" + f.shape() + ")"; });
  m.def("compose", &compose);
  m.def("tensor", &tensor);
  m.def("braiding", [](Field f, std::size_t a, std::size_t b) {
    return braiding(f, Space(a), Space(b));
  });

  py::class_<AxiomReport>(m, "AxiomReport")
      .def("all_passed", &AxiomReport::all_passed)
      .def("failed_names", &AxiomReport::failed_names)
      .def("names", [](const AxiomReport &r) {
        std::vector<std::string> out;
        for (const auto &e : r.entries())
          out.push_back(e.name);
        return out;
      })
      .def("to_text", &AxiomReport::to_text)
      .def("to_json", [](const AxiomReport &r) { return r.to_json().dump(); })
      .def("__bool__", &AxiomReport::all_passed)
      .def("__len__", &AxiomReport::size);

  py::class_<CayleyTable>(m, "CayleyTable")
      .def(py::init([](std::vector<std::vector<std::size_t>> rows, std::size_t identity) {
             std::vector<std::size_t> flat;
             for (const auto &r : rows)
               flat.insert(flat.end(), r.begin(), r.end());
             return CayleyTable(rows.size(), flat, identity);
           }),
           py::arg("rows"), py::arg("identity") = 0)
      .def_property_readonly("order", &CayleyTable::order)
      .def_property_readonly("label", &CayleyTable::label)
      .def("__call__", &CayleyTable::operator())
      .def("__eq__", [](const CayleyTable &a, const CayleyTable &b) { return a == b; });
  m.def("builtin_group", &groups::builtin);
  m.def("groups_up_to", &groups::up_to);
  m.def("check_group", &check_group);

  py::class_<HopfAlgebraData>(m, "HopfAlgebra")
      .def_property_readonly("dim", &HopfAlgebraData::dim)
      .def_property_readonly("field", &HopfAlgebraData::field)
      .def_property_readonly("eta", &HopfAlgebraData::eta)
      .def_property_readonly("mu", &HopfAlgebraData::mu)
      .def_property_readonly("eps", &HopfAlgebraData::eps)
      .def_property_readonly("delta", &HopfAlgebraData::delta)
      .def_property_readonly("antipode", &HopfAlgebraData::lambda)
      .def_static("from_maps", &HopfAlgebraData::from_maps, py::arg("eta"), py::arg("mu"),
                  py::arg("eps"), py::arg("delta"), py::arg("antipode"), py::arg("label") = "");
  m.def("group_algebra", [](const py::object &g, Field f) { return group_algebra(group_from(g), f); },
        py::arg("group"), py::arg("field") = Field::rationals());
  m.def("check_hopf", &check_hopf);
  m.def("check_antipode_properties", &check_antipode_properties);
  m.def("is_commutative", py::overload_cast<const HopfAlgebraData &>(&is_commutative));
  m.def("is_cocommutative", py::overload_cast<const HopfAlgebraData &>(&is_cocommutative));
  m.def("opposite_hopf", &opposite_hopf);
  m.def("check_hopf_morphism", &check_hopf_morphism);
  m.def("adjoint_module_algebra", [](const HopfAlgebraData &h) {
    return check_module_algebra(adjoint_action(h), h.algebra);
  });

  py::class_<HopfBraceData>(m, "HopfBrace")
      .def_static("from_hopf", &HopfBraceData::from_hopf)
      .def_property_readonly("dim", &HopfBraceData::dim)
      .def_property_readonly("first", &HopfBraceData::first)
      .def_property_readonly("second", &HopfBraceData::second);
  m.def("check_hopf_brace", &check_hopf_brace);
  m.def("check_brace_identities", &check_brace_identities);
  m.def("trivial_brace", &trivial_brace);
  m.def("gamma", py::overload_cast<const HopfBraceData &>(&brace_forge::gamma));
  m.def("phi", &phi);

  py::class_<OppBraceTripleData>(m, "OppBraceTriple")
      .def(py::init<HopfAlgebraData, LinMap, LinMap>(), py::arg("hopf"), py::arg("m"),
           py::arg("u"))
      .def_readonly("hopf", &OppBraceTripleData::hopf)
      .def_readonly("m", &OppBraceTripleData::m)
      .def_readonly("u", &OppBraceTripleData::u);
  m.def("check_obt", &check_obt);
  m.def("trivial_triple", &trivial_triple);
  m.def("mu_tilde", &mu_tilde);
  m.def("build_deformed_hopf", &build_deformed_hopf);
  m.def("functor_P", &functor_P);
  m.def("functor_Q", &functor_Q);
  m.def("roundtrip_PQ", &roundtrip_PQ);
  m.def("roundtrip_QP", &roundtrip_QP);

  py::class_<MatchedPairData>(m, "MatchedPair")
      .def_readonly("a", &MatchedPairData::a)
      .def_readonly("h", &MatchedPairData::h)
      .def_readonly("phi_a", &MatchedPairData::phi_a)
      .def_readonly("phi_h", &MatchedPairData::phi_h);
  m.def("check_matched_pair", &check_matched_pair);
  m.def("check_mp_over_A", &check_mp_over_A);
  m.def("functor_F", &functor_F);
  m.def("functor_G", &functor_G);
  m.def("roundtrip_FG", &roundtrip_FG);
  m.def("roundtrip_GF", &roundtrip_GF);
  m.def("obt_from_matched_pair", &obt_from_matched_pair);
  m.def("trivial_pair", &trivial_pair);

  py::class_<SkewBraceData>(m, "SkewBrace")
      .def(py::init<CayleyTable, CayleyTable>(), py::arg("dot"), py::arg("circ"))
      .def_readonly("dot", &SkewBraceData::dot)
      .def_readonly("circ", &SkewBraceData::circ)
      .def_property_readonly("order", &SkewBraceData::order);
  m.def("check_skew_brace", &check_skew_brace);
  m.def("enumerate_skew_braces",
        [](const py::object &g) { return enumerate_skew_braces(group_from(g)).braces; });
  m.def("linearize", &linearize, py::arg("skew_brace"), py::arg("field") = Field::rationals());

  def_io<HopfAlgebraData>(m);
  def_io<HopfBraceData>(m);
  def_io<OppBraceTripleData>(m);
  def_io<MatchedPairData>(m);
  def_io<CayleyTable>(m);
  def_io<SkewBraceData>(m);
  m.def("parse", [](const std::string &text) { return to_python(io::parse(text)); });
  m.def("load", [](const std::filesystem::path &p) { return to_python(io::load(p)); });

  m.def(
      "run_suite",
      [](std::size_t max_order, const std::vector<std::string> &fields) {
        suite::Options opts;
        opts.max_order = max_order;
        opts.fields.clear();
        for (const auto &f : fields)
          opts.fields.push_back(Field::parse(f));
        py::gil_scoped_release release;
        const suite::Result r = suite::run(opts);
        return std::make_pair(r.passed(), r.to_text());
      },
      py::arg("max_order") = 6, py::arg("fields") = std::vector<std::string>{"Q"});
}
