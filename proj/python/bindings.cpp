#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "edm/cli.hpp"
#include "edm/elliptic.hpp"
#include "edm/moduli.hpp"
#include "edm/space.hpp"
#include "edm/spin.hpp"

namespace py = pybind11;

namespace {

edm::ModuliParams params(double K, double L, double M) { return {K, L, M}; }

py::tuple mat2(const edm::Mat2C& m) { return py::make_tuple(m(0, 0), m(0, 1), m(1, 0), m(1, 1)); }

}  // namespace

PYBIND11_MODULE(_edmoduli, m) {
  m.doc() = "Einstein-Dirac moduli of left-invariant metrics on S^3";
  m.attr("__version__") = "0.1.0";

  py::register_exception<edm::Error>(m, "Error");

  py::enum_<edm::Branch>(m, "Branch").value("plus", edm::Branch::plus).value("minus", edm::Branch::minus);

  py::class_<edm::RicciData>(m, "RicciData")
      .def_readonly("A", &edm::RicciData::A)
      .def_readonly("B", &edm::RicciData::B)
      .def_readonly("C", &edm::RicciData::C)
      .def_readonly("S", &edm::RicciData::S)
      .def_readonly("ric_norm_sq", &edm::RicciData::ric_norm_sq);

  py::class_<edm::WKNumber>(m, "WKNumber")
      .def_readonly("lambda_", &edm::WKNumber::lambda)
      .def_readonly("sign", &edm::WKNumber::sign);

  py::class_<edm::BranchSample>(m, "BranchSample")
      .def_readonly("M", &edm::BranchSample::M)
      .def_readonly("L", &edm::BranchSample::L)
      .def_readonly("A", &edm::BranchSample::A)
      .def_readonly("B", &edm::BranchSample::B)
      .def_readonly("C", &edm::BranchSample::C)
      .def_readonly("S", &edm::BranchSample::S)
      .def_readonly("lambda_", &edm::BranchSample::lambda)
      .def_readonly("vol", &edm::BranchSample::vol)
      .def_readonly("invariant", &edm::BranchSample::invariant)
      .def_property_readonly("error", [](const edm::BranchSample& s) -> std::optional<std::string> {
        if (!s.error) return std::nullopt;
        return std::string(edm::to_string(*s.error));
      });

  py::class_<edm::CriticalPoint>(m, "CriticalPoint")
      .def_readonly("z", &edm::CriticalPoint::z)
      .def_readonly("w", &edm::CriticalPoint::w)
      .def_property_readonly("L", [](const edm::CriticalPoint& c) { return c.lm.L; })
      .def_property_readonly("M", [](const edm::CriticalPoint& c) { return c.lm.M; })
      .def_readonly("psi", &edm::CriticalPoint::psi)
      .def_readonly("d1_abs", &edm::CriticalPoint::d1_abs)
      .def_readonly("d2_abs", &edm::CriticalPoint::d2_abs)
      .def_readonly("order", &edm::CriticalPoint::order);

  m.def("q_poly", &edm::q_poly, py::arg("K"), py::arg("L"), py::arg("M"));
  m.def("q_via_symmetric", &edm::q_via_symmetric, py::arg("K"), py::arg("L"), py::arg("M"));
  m.def(
      "p_polys",
      [](double K, double L, double M) {
        const auto p = edm::p_polys(K, L, M);
        return py::make_tuple(p.p1, p.p2, p.p3);
      },
      py::arg("K"), py::arg("L"), py::arg("M"));
  m.def("solve_L_given_M", &edm::solve_L_given_M, py::arg("M"), py::arg("branch"));
  m.def(
      "trace_branch",
      [](double m_min, double m_max, int n, edm::Branch b) { return edm::trace_branch(m_min, m_max, n, b).samples; },
      py::arg("m_min"), py::arg("m_max"), py::arg("n"), py::arg("branch"));
  m.def("ab_coords", &edm::ab_coords, py::arg("L"), py::arg("M"));

  m.def(
      "ricci_from_params", [](double K, double L, double M) { return edm::ricci_from_params(params(K, L, M)); },
      py::arg("K"), py::arg("L"), py::arg("M"));
  m.def(
      "volume", [](double K, double L, double M) { return edm::volume(params(K, L, M)); }, py::arg("K"), py::arg("L"),
      py::arg("M"));
  m.def(
      "wk_number", [](double K, double L, double M) { return edm::wk_number(params(K, L, M)); }, py::arg("K"),
      py::arg("L"), py::arg("M"));
  m.def(
      "theorem1_residuals",
      [](double K, double L, double M, double lam) {
        const auto r = edm::theorem1_residuals(params(K, L, M), lam);
        return py::dict(py::arg("r1") = r.r1, py::arg("r2") = r.r2_max(), py::arg("r3") = r.r3_max());
      },
      py::arg("K"), py::arg("L"), py::arg("M"), py::arg("lam"));
  m.def(
      "curvature_omega",
      [](double K, double L, double M, double lam) {
        const auto c = edm::curvature_omega(params(K, L, M), lam);
        return py::dict(py::arg("omega12") = mat2(c.omega12), py::arg("omega13") = mat2(c.omega13),
                        py::arg("omega23") = mat2(c.omega23), py::arg("max_norm") = c.max_norm,
                        py::arg("tolerance") = c.tolerance, py::arg("flat") = c.flat);
      },
      py::arg("K"), py::arg("L"), py::arg("M"), py::arg("lam"));
  m.def(
      "verify_einstein_from_wk",
      [](double K, double L, double M, double lam, std::complex<double> s1, std::complex<double> s2) {
        const auto e = edm::verify_einstein_from_wk(params(K, L, M), lam, edm::Spinor{s1, s2});
        return py::make_tuple(e.residual, e.sign);
      },
      py::arg("K"), py::arg("L"), py::arg("M"), py::arg("lam"), py::arg("s1") = std::complex<double>(1.0),
      py::arg("s2") = std::complex<double>(0.0));
  m.def(
      "homothety_invariant",
      [](double K, double L, double M, double lam) { return edm::homothety_invariant(params(K, L, M), lam).value(); },
      py::arg("K"), py::arg("L"), py::arg("M"), py::arg("lam"));

  m.def("radicand", &edm::radicand, py::arg("z"));
  m.def(
      "lm_from_z",
      [](std::complex<double> z, int sheet) {
        const auto lm = edm::lm_from_z({z, sheet});
        return py::make_tuple(lm.L, lm.M);
      },
      py::arg("z"), py::arg("sheet") = 1);
  m.def(
      "identity_residuals",
      [](std::complex<double> z, int sheet) {
        const auto r = edm::identity_residuals({z, sheet});
        return py::make_tuple(r.difference, r.product);
      },
      py::arg("z"), py::arg("sheet") = 1);
  m.def(
      "psi", [](double K, double L, double M) { return edm::psi(params(K, L, M)); }, py::arg("K"), py::arg("L"),
      py::arg("M"));
  m.def(
      "psi_ramification_scan",
      [](std::complex<double> lo, std::complex<double> hi, int nx, int ny) {
        return edm::psi_ramification_scan({lo, hi, nx, ny}).points;
      },
      py::arg("lo"), py::arg("hi"), py::arg("nx") = 16, py::arg("ny") = 16);

  m.def(
      "check",
      [](double K, double L, double M) {
        const auto r = edm::cli::make_check_report(params(K, L, M));
        return py::make_tuple(r.exit_code(), edm::cli::to_json(r).dump());
      },
      py::arg("K"), py::arg("L"), py::arg("M"),
      "Returns (exit_code, json_report) exactly as the command line check would.");
}
