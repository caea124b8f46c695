#include <sstream>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cartcoh/cli.h"
#include "cartcoh/coherence.h"
#include "cartcoh/collapse.h"
#include "cartcoh/graph.h"
#include "cartcoh/json_io.h"
#include "cartcoh/rewrite.h"
#include "cartcoh/syntax.h"

namespace py = pybind11;
using namespace cartcoh;

namespace {

py::int_ to_py(const Measure& m) {
  return py::int_(py::reinterpret_steal<py::object>(
      PyLong_FromString(m.str().c_str(), nullptr, 10)));
}

py::tuple degree_tuple(const Degree& d) {
  return py::make_tuple(to_py(d.alpha), to_py(d.beta), to_py(d.gamma));
}

py::dict graph_dict(const Graph& g) {
  py::dict d;
  d["source_letters"] = g.source_letters;
  d["target_letters"] = g.target_letters;
  d["map"] = g.map;
  return d;
}

Graph graph_from(const py::handle& h) {
  Graph g;
  if (py::isinstance<py::dict>(h)) {
    py::dict d = py::reinterpret_borrow<py::dict>(h);
    g.source_letters = d["source_letters"].cast<std::size_t>();
    g.target_letters = d["target_letters"].cast<std::size_t>();
    g.map = d["map"].cast<std::vector<std::size_t>>();
  } else {
    g.map = h.cast<std::vector<std::size_t>>();
    g.target_letters = g.map.size();
  }
  return g;
}

py::dict step_dict(const ReductionStep& s) {
  py::dict d;
  d["kind"] = std::string(redex_kind_name(s.redex.kind));
  d["location"] = format_location(s.redex);
  d["before"] = s.before;
  d["after"] = s.after;
  d["degree_before"] = degree_tuple(s.degree_before);
  d["degree_after"] = degree_tuple(s.degree_after);
  return d;
}

}  // namespace

PYBIND11_MODULE(_cartcoh, m) {
  m.doc() = "Terms, graphs and normal forms of the free cartesian category";

  static py::exception<Error> error(m, "CartcohError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      // args: (code, message, path)
      py::tuple args = py::make_tuple(std::string(errc_name(e.code())), e.what(),
                                      format_address(e.path()));
      PyErr_SetObject(error.ptr(), args.ptr());
    }
  });

  py::enum_<Mode>(m, "Mode")
      .value("CARTESIAN", Mode::kCartesian)
      .value("BINARY_PRODUCTS", Mode::kBinaryProducts);

  py::class_<Object>(m, "Object")
      .def_property_readonly("letter_length", &Object::letter_length)
      .def_property_readonly("symbol_length", &Object::symbol_length)
      .def("letters", [](const Object& o) {
        std::vector<std::string> out;
        for (const Letter& l : o.letters()) out.push_back(l.name());
        return out;
      })
      .def("__eq__", [](const Object& a, const Object& b) { return a == b; })
      .def("__str__", [](const Object& o) { return to_string(o); })
      .def("__repr__", [](const Object& o) { return "Object('" + to_compact_string(o) + "')"; });

  py::class_<Arrow>(m, "Arrow")
      .def_property_readonly("domain", &Arrow::domain)
      .def_property_readonly("codomain", &Arrow::codomain)
      .def_property_readonly("size", &Arrow::size)
      .def("__eq__", [](const Arrow& a, const Arrow& b) { return a == b; })
      .def("__str__", &print_arrow)
      .def("__repr__", [](const Arrow& t) { return "Arrow('" + print_arrow(t) + "')"; });

  m.def("parse_object", [](const std::string& text, Mode mode) {
    return parse_object(text, mode);
  }, py::arg("text"), py::arg("mode") = Mode::kCartesian);
  m.def("parse_arrow", [](const std::string& text, Mode mode) {
    return parse_arrow(text, mode);
  }, py::arg("text"), py::arg("mode") = Mode::kCartesian);
  m.def("print_arrow", &print_arrow);
  m.def("typecheck", [](const Arrow& t, Mode mode) {
    const ArrowType type = typecheck(t, mode);
    return py::make_tuple(type.domain, type.codomain);
  }, py::arg("t"), py::arg("mode") = Mode::kCartesian);

  m.def("graph_of", [](const Arrow& t) { return graph_dict(graph_of(t)); });

  m.def("degree", [](const Arrow& t) { return degree_tuple(degree(t)); });
  m.def("is_normal_form", &is_normal_form, py::arg("t"),
        py::arg("mode") = Mode::kCartesian);
  m.def("normal_form", &normal_form, py::arg("t"), py::arg("mode") = Mode::kCartesian);
  m.def("normalize", [](const Arrow& t, Mode mode) {
    const ReductionTrace tr = normalize(t, mode);
    py::list steps;
    for (const ReductionStep& s : tr.steps) steps.append(step_dict(s));
    py::dict d;
    d["steps"] = steps;
    d["result"] = tr.result;
    return d;
  }, py::arg("t"), py::arg("mode") = Mode::kCartesian);

  m.def("equal_in_cart", &equal_in_cart, py::arg("f"), py::arg("g"),
        py::arg("mode") = Mode::kCartesian);
  m.def("equal_via_normal_forms", &equal_via_normal_forms, py::arg("f"),
        py::arg("g"), py::arg("mode") = Mode::kCartesian);
  m.def("synth_from_graph", [](const Object& dom, const Object& cod,
                               const py::object& graph, Mode mode) {
    Graph g = graph_from(graph);
    if (!py::isinstance<py::dict>(graph)) g.source_letters = dom.letter_length();
    return synth_from_graph(dom, cod, g, mode);
  }, py::arg("dom"), py::arg("cod"), py::arg("graph"),
     py::arg("mode") = Mode::kCartesian);

  m.def("collapse_witness", [](const Arrow& f, const Arrow& g, Mode mode) {
    const CollapseWitness w = collapse_witness(f, g, mode);
    py::dict d;
    d["letter"] = w.letter.name();
    d["position"] = w.position;
    d["f_subst"] = w.f_subst;
    d["g_subst"] = w.g_subst;
    d["h"] = w.h;
    d["j"] = w.j;
    d["lhs_normal"] = w.lhs_normal;
    d["rhs_normal"] = w.rhs_normal;
    d["verified"] = verify_witness(w);
    return d;
  }, py::arg("f"), py::arg("g"), py::arg("mode") = Mode::kCartesian);

  m.def("run_cli", [](std::vector<std::string> args) {
    args.insert(args.begin(), "cartcoh");
    std::ostringstream out, err;
    const int code = run_cli(args, out, err, false);
    return py::make_tuple(code, out.str(), err.str());
  }, "Runs the command-line tool; returns (exit code, stdout, stderr).");
}
