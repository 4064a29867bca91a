#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hallskew/cli.hpp"
#include "hallskew/errors.hpp"
#include "hallskew/factorization.hpp"
#include "hallskew/maps.hpp"
#include "hallskew/numth.hpp"
#include "hallskew/skew.hpp"
#include "hallskew/suites.hpp"
#include "hallskew/zoo.hpp"

namespace py = pybind11;
using namespace hallskew;

namespace {

py::int_ to_py(const BigInt& x) { return py::int_(py::reinterpret_steal<py::object>(PyLong_FromString(x.str().c_str(), nullptr, 10))); }

PermGroup group_of(const std::string& desc) { return make_group(GroupDescriptor::parse(desc)); }

py::dict map_dict(const RotationMap& m) {
  py::dict d;
  d["kind"] = m.kind == RotationMap::Kind::Rotary ? "rotary" : "birotary";
  d["V"] = m.V;
  d["E"] = m.E;
  d["F"] = m.F;
  d["chi"] = m.chi;
  if (m.genus) d["genus"] = *m.genus;
  d["face_stabilizer_order"] = m.face_stabilizer_order;
  return d;
}

}  // namespace

PYBIND11_MODULE(_hallskew, m) {
  m.doc() = "Hall factorizations, skew-morphisms and rotary maps";

  py::register_exception<Error>(m, "Error");
  py::register_exception<BoundExceeded>(m, "BoundExceeded", PyExc_RuntimeError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<NotAFactorization>(m, "NotAFactorization", PyExc_ValueError);

  py::class_<Permutation>(m, "Permutation")
      .def(py::init([](const std::string& text, std::size_t degree) { return Permutation::parse(text, degree); }),
           py::arg("cycles"), py::arg("degree") = 0)
      .def_property_readonly("degree", &Permutation::degree)
      .def("order", &Permutation::order)
      .def("inverse", &Permutation::inverse)
      .def("images", [](const Permutation& p) { return std::vector<Point>(p.images().begin(), p.images().end()); })
      .def("__mul__", [](const Permutation& a, const Permutation& b) { return a * b; })
      .def("__eq__", [](const Permutation& a, const Permutation& b) { return a == b; })
      .def("__hash__", [](const Permutation& p) { return PermutationHash{}(p); })
      .def("__str__", &Permutation::to_string)
      .def("__repr__", [](const Permutation& p) { return "Permutation('" + p.to_string() + "')"; });

  py::class_<PermGroup>(m, "PermGroup")
      .def(py::init([](std::size_t degree, std::vector<Permutation> gens) { return PermGroup(degree, std::move(gens)); }),
           py::arg("degree"), py::arg("generators"))
      .def_property_readonly("degree", &PermGroup::degree)
      .def_property_readonly("generators", &PermGroup::generators)
      .def("order", [](const PermGroup& g) { return to_py(g.order()); })
      .def("__contains__", &PermGroup::contains)
      .def("stabilizer", &PermGroup::stabilizer)
      .def("is_subgroup_of", &PermGroup::is_subgroup_of)
      .def("is_normal_in", &PermGroup::is_normal_in);

  m.def("group", &group_of, py::arg("descriptor"), "Group from a descriptor such as 'psl:3,2'");
  m.def("count_involutions", [](const PermGroup& g) { return to_py(count_involutions(g)); });
  m.def("point_stabilizer", &point_stabilizer, py::arg("group"), py::arg("point"));
  m.def("singer_cycle", &singer_cycle, py::arg("d"), py::arg("q"));

  py::class_<Factorization>(m, "Factorization")
      .def_property_readonly("k_order", &Factorization::k_order)
      .def_property_readonly("is_hall", &Factorization::is_hall)
      .def_property_readonly("k_core_free", &Factorization::k_core_free)
      .def("decompose", &Factorization::decompose);
  m.def("certify_factorization",
        [](const PermGroup& g, const PermGroup& h, const Permutation& k) { return certify_factorization(g, h, k); },
        py::arg("group"), py::arg("subgroup"), py::arg("k"));
  m.def("table1_factorization", [](const std::string& desc) {
    const Table1Triple t = table1_triple(GroupDescriptor::parse(desc));
    return certify_factorization(t.G, t.H, t.k);
  });

  py::class_<SkewMorphism>(m, "SkewMorphism")
      .def_property_readonly("size", &SkewMorphism::size)
      .def_property_readonly("order", &SkewMorphism::order)
      .def_property_readonly("rho", &SkewMorphism::rho)
      .def_property_readonly("pi", &SkewMorphism::pi)
      .def("trivial", &SkewMorphism::trivial)
      .def("element", &SkewMorphism::element)
      .def("index_of", &SkewMorphism::index_of);
  m.def("skew_morphism", [](const Factorization& f) { return skew_from_factorization(f).skew; });
  m.def("verify_axioms", [](const SkewMorphism& s) { return verify_axioms(s).ok; });
  m.def("is_hall_skew", &is_hall_skew);
  m.def("brute_enumerate", [](const PermGroup& g) { return brute_enumerate(g); });

  m.def(
      "rotary_map",
      [](const std::string& desc, bool outer, bool birotary) {
        const RotaryPair p = example_rotary_pair(GroupDescriptor::parse(desc), outer);
        return map_dict(build_map(p, birotary ? RotationMap::Kind::Birotary : RotationMap::Kind::Rotary));
      },
      py::arg("descriptor"), py::arg("outer") = false, py::arg("birotary") = false);

  m.def("e_value", [](const std::string& desc) { return to_py(e_value(GroupDescriptor::parse(desc))); });
  m.def("gcd_identity", [](std::uint32_t d, std::uint64_t q) { return gcd_identity(d, q).ok; });
  m.def("prime_family", [](std::uint64_t p, std::uint64_t d) { return prime_family(p, d).family; });
  m.def("solvable_f_ok", &solvable_f_ok);
  m.def("psl2_pair_infeasible", &psl2_pair_infeasible);

  m.def("run_suite", [](const std::string& name) {
    const SuiteReport r = run_suite(name);
    py::list items;
    for (const auto& item : r.items) items.append(py::make_tuple(item.name, item.ok, item.detail));
    return py::make_tuple(r.ok(), items);
  });
  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command-line interface; returns (exit code, stdout, stderr)");
}
