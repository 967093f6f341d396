#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "packcert/exactnum/roots.hpp"
#include "packcert/packing/geometry.hpp"
#include "packcert/shell/cli.hpp"
#include "packcert/shell/scene.hpp"
#include "packcert/shell/svg.hpp"
#include "packcert/verifier/predicates.hpp"

namespace py = pybind11;
namespace ex = packcert::exactnum;
namespace pk = packcert::packing;
namespace sh = packcert::shell;
namespace vf = packcert::verifier;

namespace {

py::object fraction(const ex::Rational& q) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(ex::to_string(q));
}

py::tuple pair(const ex::Interval& iv) { return py::make_tuple(fraction(iv.lo()), fraction(iv.hi())); }

ex::Rational rational(const py::object& v) {
  return ex::parse_rational(py::str(v).cast<std::string>());
}

struct PyScene {
  sh::BuiltScene built;
  sh::Scene scene;
};

PyScene make_scene(sh::Scene scene, int max_depth) {
  auto built = sh::build_scene(scene, max_depth);
  return {std::move(built), std::move(scene)};
}

py::dict verify(const PyScene& s, const std::optional<std::string>& probe) {
  const auto& p = s.built.packing;
  py::dict out;
  auto overlap = pk::check_no_overlap(p, s.built.options);
  out["overlap"] = overlap.pass;
  if (!overlap.pass) return out;
  auto g = vf::contact_graph(p, s.built.options);
  out["vertices"] = g.vertices().size();
  out["edges"] = g.edges().size();
  out["faces"] = g.faces().size();
  out["compact"] = vf::to_string(vf::check_compact(g).compact);
  ex::Expression e = probe ? sh::resolve_expression(s.built, *probe)
                           : vf::smallest_radius(p, s.built.options.max_depth);
  out["saturated"] = vf::to_string(vf::check_saturated(p, g, e, s.built.options).saturated);
  return out;
}

}  // namespace

PYBIND11_MODULE(packcert, m) {
  m.doc() = "Certified arithmetic and checks for periodic disc packings";

  py::register_exception<sh::SceneError>(m, "SceneError", PyExc_ValueError);
  py::register_exception<vf::GraphError>(m, "GraphError", PyExc_RuntimeError);

  m.def(
      "isolate",
      [](const std::vector<long>& coeffs, const py::object& lo, const py::object& hi,
         const py::object& width) {
        std::vector<ex::Integer> c(coeffs.begin(), coeffs.end());
        py::list out;
        for (const auto& a : ex::isolate_roots(ex::IntegerPolynomial(c),
                                               ex::Interval(rational(lo), rational(hi)))) {
          out.append(pair(ex::refine(a, rational(width)).isolating()));
        }
        return out;
      },
      py::arg("coeffs"), py::arg("lo"), py::arg("hi"), py::arg("width") = "1e-12",
      "Isolating intervals (as Fraction pairs) of the real roots in [lo, hi]; "
      "coefficients in ascending order.");

  m.def(
      "descartes_inner",
      [](const py::object& a, const py::object& b, const py::object& c, const py::object& width) {
        auto iv = [](const py::object& v) { return ex::Interval(rational(v)); };
        return pair(pk::descartes_inner(iv(a), iv(b), iv(c), rational(width)));
      },
      py::arg("r1"), py::arg("r2"), py::arg("r3"), py::arg("width") = "1e-15");

  py::class_<PyScene>(m, "Scene")
      .def_static(
          "load", [](const std::string& path, int max_depth) {
            return make_scene(sh::load_scene(path), max_depth);
          },
          py::arg("path"), py::arg("max_depth") = ex::kDefaultMaxDepth)
      .def_static(
          "parse", [](const std::string& text, int max_depth) {
            return make_scene(sh::parse_scene(text), max_depth);
          },
          py::arg("text"), py::arg("max_depth") = ex::kDefaultMaxDepth)
      .def_property_readonly("name", [](const PyScene& s) { return s.scene.name; })
      .def_property_readonly("disc_ids",
                             [](const PyScene& s) {
                               std::vector<int> ids;
                               for (const auto& d : s.built.packing.discs()) ids.push_back(d.id);
                               return ids;
                             })
      .def("serialize", [](const PyScene& s) { return sh::serialize_scene(s.scene); })
      .def(
          "density",
          [](const PyScene& s, const py::object& width) {
            return pair(pk::density(s.built.packing, rational(width),
                                    s.built.options.max_depth).density);
          },
          py::arg("width") = "1e-12")
      .def(
          "certify",
          [](const PyScene& s, const std::string& expr, std::optional<py::object> above,
             std::optional<py::object> below) {
            if (above.has_value() == below.has_value()) {
              throw py::value_error("give exactly one of above and below");
            }
            auto e = expr == "density" ? pk::density_expression(s.built.packing)
                                       : sh::resolve_expression(s.built, expr);
            auto v = ex::certify_compare(e, rational(above ? *above : *below),
                                         above ? ex::Direction::Above : ex::Direction::Below,
                                         s.built.packing.bindings(), s.built.options.max_depth);
            return std::string(ex::to_string(v.status));
          },
          py::arg("expr"), py::arg("above") = py::none(), py::arg("below") = py::none(),
          "Proved, Disproved or Inconclusive; expr 'density' targets the packing density.")
      .def("verify", &verify, py::arg("probe") = py::none())
      .def(
          "render_svg",
          [](const PyScene& s, int rows, int cols) {
            sh::SvgOptions o;
            o.rows = rows;
            o.cols = cols;
            return sh::render_svg(s.built.packing, o);
          },
          py::arg("rows") = 1, py::arg("cols") = 1);

  m.def(
      "compare",
      [](const PyScene& a, const PyScene& b, int max_depth) {
        return std::string(
            vf::to_string(vf::compare_densities(a.built.packing, b.built.packing, max_depth).order));
      },
      py::arg("first"), py::arg("second"), py::arg("max_depth") = ex::kDefaultMaxDepth);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = sh::run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line tool in-process: (exit code, stdout, stderr).");
}
