#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "pcoh/errors.hpp"
#include "pcoh/report.hpp"

namespace py = pybind11;
using namespace pcoh;

namespace {

std::optional<Rational> opt_rational(const std::optional<std::string>& s) {
  if (!s) return std::nullopt;
  return parse_rational(*s);
}

PoissonStructure from_type(const std::string& sel, const std::optional<std::string>& lambda,
                           const std::optional<std::string>& mu) {
  return instantiate(parse_type(sel, opt_rational(lambda), opt_rational(mu)));
}

PoissonStructure from_polys(const std::string& f, const std::string& h, std::pair<int, int> w) {
  return make_structure(parse_poly(f), parse_poly(h), WeightSystem{w.first, w.second});
}

int jet(const PoissonStructure& P, int order) { return order > 0 ? order : P.default_jet_order(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<NotCocycleError>(m, "NotCocycleError", PyExc_ValueError);
  py::register_exception<JetInstabilityError>(m, "JetInstabilityError", PyExc_RuntimeError);

  py::class_<PoissonStructure>(m, "Structure")
      .def_static("from_type", &from_type, py::arg("selector"), py::arg("lam") = py::none(),
                  py::arg("mu") = py::none())
      .def_static("from_polys", &from_polys, py::arg("f"), py::arg("h") = "0",
                  py::arg("weights") = std::pair<int, int>{1, 1})
      .def_property_readonly("f", [](const PoissonStructure& P) { return render(P.f); })
      .def_property_readonly("h", [](const PoissonStructure& P) { return render(P.h); })
      .def_property_readonly("d", [](const PoissonStructure& P) { return P.d; })
      .def_property_readonly("c", &PoissonStructure::c)
      .def_property_readonly("r", &PoissonStructure::r)
      .def("dimensions", [](const PoissonStructure& P) { return hp_dimensions(P); })
      .def("summary_json", [](const PoissonStructure& P) { return structure_json(P).dump(); })
      .def("basis_names", &hp_basis_names, py::arg("degree"))
      .def(
          "normalize_json",
          [](const PoissonStructure& P, const std::string& bivector) {
            return to_json(normalize_hp2_traced(Bivector{parse_poly(bivector)}, P), P).dump();
          },
          py::arg("coefficient"))
      .def(
          "table_json",
          [](const PoissonStructure& P, int order) {
            return to_json(gerstenhaber_table(P, jet(P, order)), P, true, true).dump();
          },
          py::arg("jet_order") = 0)
      .def(
          "oracle_json",
          [](const PoissonStructure& P, int order) {
            return to_json(P.h.is_zero() && order == 0 ? graded_dims(P, 2 * P.d) : jet_dims(P, jet(P, order)))
                .dump();
          },
          py::arg("jet_order") = 0)
      .def("__repr__", [](const PoissonStructure& P) {
        return "Structure(f=" + render(P.f) + ", h=" + render(P.h) + ")";
      });

  m.def(
      "verify_json",
      [](const std::string& sel, const std::optional<std::string>& lambda, const std::optional<std::string>& mu) {
        return to_json(verify(parse_type(sel, opt_rational(lambda), opt_rational(mu)))).dump();
      },
      py::arg("selector"), py::arg("lam") = py::none(), py::arg("mu") = py::none());

  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::vector<const char*> argv{"pcoh"};
        for (const auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out, err;
        int code = cli::run(int(argv.size()), argv.data(), out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
