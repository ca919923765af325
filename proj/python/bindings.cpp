// SPDX-License-Identifier: Apache-2.0
#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polyharm/boundary.hpp"
#include "polyharm/classes.hpp"
#include "polyharm/config.hpp"
#include "polyharm/errors.hpp"
#include "polyharm/io.hpp"
#include "polyharm/render.hpp"
#include "polyharm/univalence.hpp"

namespace py = pybind11;
using namespace polyharm;

namespace {

std::string dump_json(const Json& j) { return j.dump(2); }

}  // namespace

PYBIND11_MODULE(_polyharm, m) {
    m.doc() = "Univalence, boundary-behavior, and convexity-class analysis of "
              "planar polyharmonic mappings given as truncated power series.";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<SpecParseError>(m, "SpecParseError", PyExc_ValueError);
    py::register_exception<CurveTooCoarseError>(m, "CurveTooCoarseError",
                                                PyExc_RuntimeError);
    py::register_exception<PointOnCurveError>(m, "PointOnCurveError",
                                              PyExc_RuntimeError);
    py::register_exception<DegeneratePointError>(m, "DegeneratePointError",
                                                 PyExc_ArithmeticError);

    py::class_<AnalyticSeries>(m, "AnalyticSeries")
        .def(py::init<std::vector<Complex>>(), py::arg("coeffs"))
        .def_readonly("coeffs", &AnalyticSeries::coeffs)
        .def_property_readonly("degree", &AnalyticSeries::degree)
        .def("derivative", &AnalyticSeries::derivative);

    py::class_<HarmonicMap>(m, "HarmonicMap")
        .def(py::init<AnalyticSeries, AnalyticSeries>(), py::arg("h"),
             py::arg("g"))
        .def_readwrite("h", &HarmonicMap::h)
        .def_readwrite("g", &HarmonicMap::g);

    py::class_<PolyharmonicMap>(m, "PolyharmonicMap")
        .def(py::init<std::vector<HarmonicMap>>(), py::arg("components"))
        .def_readonly("components", &PolyharmonicMap::components)
        .def_property_readonly("p", &PolyharmonicMap::order);

    py::class_<GridSpec>(m, "GridSpec")
        .def(py::init([](int radial, int angular, double max_radius) {
                 GridSpec g{radial, angular, max_radius};
                 g.validate();
                 return g;
             }),
             py::arg("radial") = 64, py::arg("angular") = 256,
             py::arg("max_radius") = 0.995)
        .def_readonly("radial", &GridSpec::radial_count)
        .def_readonly("angular", &GridSpec::angular_count)
        .def_readonly("max_radius", &GridSpec::max_radius)
        .def("points", &GridSpec::points, py::arg("scale") = 1.0);

    py::class_<WirtingerDerivatives>(m, "WirtingerDerivatives")
        .def_readonly("df_dz", &WirtingerDerivatives::df_dz)
        .def_readonly("df_dzbar", &WirtingerDerivatives::df_dzbar);

    py::class_<Witness>(m, "Witness")
        .def_readonly("z", &Witness::z)
        .def_readonly("value", &Witness::value);

    py::class_<Verdict>(m, "Verdict")
        .def_property_readonly(
            "status", [](const Verdict& v) { return std::string(to_string(v.status)); })
        .def_readonly("witnesses", &Verdict::witnesses)
        .def_readonly("notes", &Verdict::notes)
        .def("passed", &Verdict::passed)
        .def("failed", &Verdict::failed)
        .def("to_json", [](const Verdict& v) { return dump_json(to_json(v)); });

    py::class_<Curve>(m, "Curve")
        .def_readonly("params", &Curve::params)
        .def_readonly("points", &Curve::points)
        .def_readonly("closed", &Curve::closed)
        .def_static("closed_loop", &Curve::closed_loop, py::arg("params"),
                    py::arg("points"))
        .def_static("open_path", &Curve::open_path, py::arg("params"),
                    py::arg("points"));

    // series operations
    m.def("eval_analytic", &eval_analytic, py::arg("series"), py::arg("z"));
    m.def("eval_analytic_derivative", &eval_analytic_derivative,
          py::arg("series"), py::arg("z"));
    m.def("eval_harmonic", &eval_harmonic, py::arg("map"), py::arg("z"));
    m.def("eval_polyharmonic", &eval_polyharmonic, py::arg("map"), py::arg("z"));
    m.def("slice", &slice, py::arg("map"), py::arg("r"));
    m.def(
        "wirtinger",
        [](const PolyharmonicMap& f, Complex z) {
            const auto d = wirtinger(f, z);
            return py::make_tuple(d.df_dz, d.df_dzbar);
        },
        py::arg("map"), py::arg("z"));
    m.def("jacobian",
          py::overload_cast<const PolyharmonicMap&, Complex>(&jacobian),
          py::arg("map"), py::arg("z"));
    m.def("dilatation", &dilatation, py::arg("map"), py::arg("z"));
    m.def("laplacian_power_probe", &laplacian_power_probe, py::arg("map"),
          py::arg("q"), py::arg("z"), py::arg("step"));
    m.def("truncated_log", &truncated_log, py::arg("degree"));
    m.def("truncated_geometric", &truncated_geometric, py::arg("degree"));

    // curves and univalence
    m.def("winding_number", &winding_number, py::arg("curve"), py::arg("w0"));
    m.def(
        "curve_self_intersects",
        [](const Curve& c) -> py::object {
            const auto w = curve_self_intersection(c);
            if (!w) return py::none();
            return py::make_tuple(w->seg_a, w->seg_b, w->point);
        },
        py::arg("curve"));
    m.def("is_univalent_harmonic", &is_univalent_harmonic, py::arg("map"),
          py::arg("r"), py::arg("grid") = GridSpec{},
          py::arg("curve_samples") = 1024);
    m.def("lemma1_slice_test", &lemma1_slice_test, py::arg("map"),
          py::arg("radii"), py::arg("grid") = GridSpec{},
          py::arg("curve_samples") = 1024);

    py::class_<RadoReport>(m, "RadoReport")
        .def_readonly("radii", &RadoReport::radii)
        .def_readonly("max_modulus", &RadoReport::max_modulus)
        .def_readonly("bounded", &RadoReport::bounded)
        .def_readonly("notes", &RadoReport::notes)
        .def("to_json", [](const RadoReport& r) { return dump_json(to_json(r)); });
    m.def("rado_consistency_probe", &rado_consistency_probe, py::arg("map"),
          py::arg("radii"), py::arg("samples") = 1024);

    // boundary behavior
    py::class_<RadialLimit>(m, "RadialLimit")
        .def_readonly("value", &RadialLimit::value)
        .def_readonly("cauchy_diagnostic", &RadialLimit::cauchy_diagnostic)
        .def_readonly("trace", &RadialLimit::trace);
    m.def("boundary_function_radial", &boundary_function_radial, py::arg("map"),
          py::arg("t"), py::arg("radii"));

    py::class_<JumpReport>(m, "JumpReport")
        .def_readonly("theta0", &JumpReport::theta0)
        .def_readonly("c_estimate", &JumpReport::c_estimate)
        .def_readonly("r_sequence", &JumpReport::r_sequence)
        .def_readonly("values", &JumpReport::values)
        .def_property_readonly(
            "verdict",
            [](const JumpReport& r) { return std::string(to_string(r.verdict)); })
        .def("to_json", [](const JumpReport& r) { return dump_json(to_json(r)); });
    m.def("jump_indicator", &jump_indicator, py::arg("H1"), py::arg("H2"),
          py::arg("theta0"), py::arg("radii"));

    py::class_<SmallOReport>(m, "SmallOReport")
        .def_readonly("holds", &SmallOReport::holds)
        .def_readonly("trace", &SmallOReport::trace);
    m.def("small_o_probe", &small_o_probe, py::arg("F2"), py::arg("theta0"),
          py::arg("radii"));

    py::class_<GammaCurve>(m, "GammaCurve")
        .def_readonly("m", &GammaCurve::m)
        .def_readonly("theta0", &GammaCurve::theta0)
        .def_readonly("samples", &GammaCurve::samples);
    m.def("gamma_curve", &gamma_curve, py::arg("m"), py::arg("theta0"),
          py::arg("n"));

    m.def("phi_quotient", &phi_quotient, py::arg("F1"), py::arg("F2"),
          py::arg("z"));

    py::class_<DivergenceReport>(m, "DivergenceReport")
        .def_readonly("cutoffs", &DivergenceReport::cutoffs)
        .def_readonly("partial_integrals", &DivergenceReport::partial_integrals)
        .def_readonly("slope", &DivergenceReport::slope)
        .def_readonly("residual", &DivergenceReport::residual)
        .def_readonly("phi_exceeds_one", &DivergenceReport::phi_exceeds_one)
        .def_property_readonly(
            "verdict",
            [](const DivergenceReport& r) {
                return std::string(to_string(r.verdict));
            })
        .def("to_json",
             [](const DivergenceReport& r) { return dump_json(to_json(r)); });
    m.def(
        "continuity_integral",
        [](const HarmonicMap& F1, const HarmonicMap& F2, const GammaCurve& g,
           const std::vector<double>& cutoffs) {
            return continuity_integral(F1, F2, g, cutoffs);
        },
        py::arg("F1"), py::arg("F2"), py::arg("gamma"), py::arg("cutoffs"));

    // class tests and the close-to-convex construction
    py::class_<KhReport>(m, "KhReport")
        .def_readonly("sum_value", &KhReport::sum_value)
        .def_readonly("normalized", &KhReport::normalized)
        .def_readonly("passes", &KhReport::passes);
    m.def("kh_coefficient_test", &kh_coefficient_test, py::arg("map"));
    m.def("build_ctc_biharmonic", &build_ctc_biharmonic, py::arg("map"));

    py::class_<CtcCertificate>(m, "CtcCertificate")
        .def_readonly("kh", &CtcCertificate::kh)
        .def_readonly("local_univalence", &CtcCertificate::local_univalence)
        .def_readonly("slice", &CtcCertificate::slice)
        .def_readonly("sup_dilatation", &CtcCertificate::sup_dilatation)
        .def_property_readonly(
            "conclusion",
            [](const CtcCertificate& c) {
                return std::string(to_string(c.conclusion));
            })
        .def("to_json",
             [](const CtcCertificate& c) { return dump_json(to_json(c)); });
    m.def("certify_ctc", &certify_ctc, py::arg("map"),
          py::arg("grid") = GridSpec{}, py::arg("radii"),
          py::arg("curve_samples") = 1024);
    m.def("epsilon_family_probe", &epsilon_family_probe, py::arg("H"),
          py::arg("G"), py::arg("eps_samples"), py::arg("r"),
          py::arg("grid") = GridSpec{});
    m.def("default_eps_samples", &default_eps_samples);

    // spec ingestion
    m.def("parse_map_spec", &parse_map_spec_string, py::arg("text"));
    m.def("load_map_spec", &load_map_spec, py::arg("path"));
    m.def(
        "map_spec_json",
        [](const PolyharmonicMap& f) { return map_spec_to_json(f).dump(2); },
        py::arg("map"));

    m.attr("__version__") = "0.1.0";
}
