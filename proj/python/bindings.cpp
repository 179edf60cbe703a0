#include "cellcat/driver.hpp"
#include "cellcat/json_io.hpp"
#include "cellcat/laurent_poly.hpp"
#include "cellcat/sl2.hpp"
#include "cellcat/sl2_hom.hpp"
#include "cellcat/tl_diagram.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>

namespace py = pybind11;
using namespace cellcat;
using json = nlohmann::ordered_json;

namespace {

// JSON values cross the boundary through the standard json module.
py::object to_py(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

json from_py(const py::handle& obj) {
  const auto text = py::module_::import("json").attr("dumps")(obj).cast<std::string>();
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw io::FormatError(e.what());
  }
}

LaurentPoly laurent_from_dict(const std::map<int, py::int_>& terms) {
  std::map<int, Integer> coeffs;
  for (const auto& [e, c] : terms) coeffs[e] = Integer(py::str(c).cast<std::string>());
  return LaurentPoly::from_map(coeffs);
}

py::dict laurent_to_dict(const LaurentPoly& p) {
  py::dict out;
  py::object to_int = py::module_::import("builtins").attr("int");
  for (const auto& [e, c] : p.terms()) out[py::int_(e)] = to_int(c.get_str());
  return out;
}

sl2::TensorVector vector_from_dict(const py::dict& d, int n) {
  sl2::TensorVector x(n);
  for (const auto& [k, c] : d) {
    const auto a = sl2::WeightString::parse(k.cast<std::string>());
    if (a.size() != n) throw io::FormatError("weight strings of different lengths");
    x.add_term(a, laurent_from_dict(c.cast<std::map<int, py::int_>>()));
  }
  return x;
}

py::dict vector_to_dict(const sl2::TensorVector& x) {
  py::dict out;
  for (const auto& [a, c] : x.terms()) out[py::str(a.to_string())] = laurent_to_dict(c);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Temperley-Lieb diagrams, cellular verification and sl2 canonical bases";

  py::register_exception<sl2::Sl2Error>(m, "Sl2Error", PyExc_RuntimeError);

  py::class_<LaurentPoly>(m, "LaurentPoly")
      .def(py::init([](const std::map<int, py::int_>& terms) { return laurent_from_dict(terms); }),
           py::arg("terms") = std::map<int, py::int_>{})
      .def_static("v", &LaurentPoly::v)
      .def("terms", &laurent_to_dict, "Exponent -> integer coefficient")
      .def("bar", &LaurentPoly::bar)
      .def("is_unit", &LaurentPoly::is_unit)
      .def("is_zero", &LaurentPoly::is_zero)
      .def("__add__", [](const LaurentPoly& a, const LaurentPoly& b) { return a + b; })
      .def("__sub__", [](const LaurentPoly& a, const LaurentPoly& b) { return a - b; })
      .def("__mul__", [](const LaurentPoly& a, const LaurentPoly& b) { return a * b; })
      .def("__neg__", [](const LaurentPoly& a) { return -a; })
      .def("__eq__", [](const LaurentPoly& a, const LaurentPoly& b) { return a == b; })
      .def("__str__", &LaurentPoly::to_string)
      .def("__repr__", [](const LaurentPoly& a) { return "LaurentPoly(" + a.to_string() + ")"; });

  py::class_<driver::Report>(m, "Report")
      .def_readonly("passed", &driver::Report::pass)
      .def_readonly("text", &driver::Report::text)
      .def_property_readonly("body", [](const driver::Report& r) { return to_py(r.body); });

  // Temperley-Lieb
  m.def("tl_dim", &driver::tl_dim, py::arg("n"), py::arg("m"));
  m.def("tl_relations", &driver::tl_relations, py::arg("max_n"), py::arg("seed") = driver::kDefaultSeed);
  m.def("tl_gram", &driver::tl_gram, py::arg("n"), py::arg("t"));
  m.def(
      "enumerate_diagrams",
      [](int n, int mm) {
        py::list out;
        for (const auto& d : tl::enumerate_diagrams(n, mm)) out.append(to_py(io::to_json(d)));
        return out;
      },
      py::arg("n"), py::arg("m"));
  m.def(
      "compose",
      [](const py::object& f, const py::object& g) {
        const auto a = io::morphism_from_json(from_py(f));
        const auto b = io::morphism_from_json(from_py(g));
        if (a.m() != b.n()) throw driver::InputError("morphisms are not composable");
        return to_py(io::to_json(tl::compose(a, b)));
      },
      py::arg("first"), py::arg("second"), "Diagram or morphism JSON objects; first is applied first");
  m.def(
      "tensor",
      [](const py::object& f, const py::object& g) {
        return to_py(io::to_json(tl::tensor(io::morphism_from_json(from_py(f)), io::morphism_from_json(from_py(g)))));
      },
      py::arg("left"), py::arg("right"));
  m.def(
      "star", [](const py::object& f) { return to_py(io::to_json(tl::star(io::morphism_from_json(from_py(f))))); },
      py::arg("f"));

  // cellularity
  m.def("verify", &driver::verify, py::arg("datum"), py::arg("max_n"), py::arg("order") = "declared",
        py::call_guard<py::gil_scoped_release>());

  // sl2
  m.def("canonical_basis", &driver::qgrp_canon, py::arg("n"), py::call_guard<py::gil_scoped_release>());
  m.def("compare_bases", &driver::qgrp_compare, py::arg("n"), py::call_guard<py::gil_scoped_release>());
  m.def("conventions", &driver::qgrp_conventions, py::arg("max_n") = 6);
  m.def(
      "bar_involution",
      [](const py::dict& x, int n) { return vector_to_dict(sl2::bar_involution(vector_from_dict(x, n))); },
      py::arg("x"), py::arg("n"), "x maps weight strings to {exponent: coefficient}");
  m.def(
      "act",
      [](const std::string& generator, const py::dict& x, int n) {
        const auto y = vector_from_dict(x, n);
        if (generator == "E") return vector_to_dict(sl2::act_E(y));
        if (generator == "F") return vector_to_dict(sl2::act_F(y));
        if (generator == "K") return vector_to_dict(sl2::act_K(y));
        throw driver::InputError("generator must be E, F or K");
      },
      py::arg("generator"), py::arg("x"), py::arg("n"));
  m.def(
      "coinvariants",
      [](int n) {
        const auto c = sl2::coinvariants(n);
        py::dict out;
        out["n"] = c.n;
        out["dimension"] = c.dimension;
        out["b0_count"] = c.b0_count;
        out["b0_basis"] = c.b0_basis;
        return out;
      },
      py::arg("n"));
  m.def(
      "invariants",
      [](int n) {
        py::list out;
        for (const auto& x : sl2::invariants_basis(n)) out.append(vector_to_dict(x));
        return out;
      },
      py::arg("n"));
}
