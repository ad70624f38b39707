#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "parres/floquet.hpp"
#include "parres/rtbp.hpp"
#include "parres/zones.hpp"

namespace py = pybind11;
using namespace parres;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Parametric-resonance zones of the planar circular restricted three-body problem";

    py::register_exception<NumericsError>(m, "NumericsError", PyExc_RuntimeError);

    py::class_<SystemConfig>(m, "SystemConfig")
        .def(py::init<>())
        .def_static("normalized", &SystemConfig::normalized, py::arg("mass_ratio"))
        .def_static("physical", &SystemConfig::physical, py::arg("grav"),
                    py::arg("primary_mass"), py::arg("perturber_mass"),
                    py::arg("perturber_radius"), py::arg("omega_s") = 0.0)
        .def_readwrite("grav", &SystemConfig::grav)
        .def_readwrite("primary_mass", &SystemConfig::primary_mass)
        .def_readwrite("perturber_mass", &SystemConfig::perturber_mass)
        .def_readwrite("perturber_radius", &SystemConfig::perturber_radius)
        .def_readwrite("omega_s", &SystemConfig::omega_s)
        .def("mass_ratio", &SystemConfig::mass_ratio)
        .def("two_body_rate", &SystemConfig::two_body_rate);

    py::class_<ProbeOrbit>(m, "ProbeOrbit")
        .def(py::init<double, double, double>(), py::arg("a"), py::arg("e") = 0.0,
             py::arg("phase") = 0.0)
        .def_readwrite("a", &ProbeOrbit::a)
        .def_readwrite("e", &ProbeOrbit::e)
        .def_readwrite("phase", &ProbeOrbit::phase);

    m.def("legendre_p", &legendre_p, py::arg("p"), py::arg("x"));
    m.def("mutual_distance", &mutual_distance, py::arg("R"), py::arg("r"), py::arg("S"));
    m.def("perturbing_potential", &perturbing_potential, py::arg("cfg"), py::arg("R"),
          py::arg("S"), py::arg("pmax"));
    m.def("mean_radius", &mean_radius, py::arg("orbit"));
    m.def("angular_momentum", &angular_momentum, py::arg("cfg"), py::arg("orbit"));

    py::class_<HillOptions>(m, "HillOptions")
        .def(py::init<>())
        .def_readwrite("pmax", &HillOptions::pmax)
        .def_readwrite("quad_n", &HillOptions::quad_n)
        .def_readwrite("e4_coeff", &HillOptions::e4_coeff);

    py::class_<HillCoefficients>(m, "HillCoefficients")
        .def_readonly("omega0_sq", &HillCoefficients::omega0_sq)
        .def_readonly("b", &HillCoefficients::b)
        .def_readonly("h", &HillCoefficients::h)
        .def_readonly("drive_freq", &HillCoefficients::drive_freq)
        .def_readonly("e_used", &HillCoefficients::e_used)
        .def("omega_sq", &HillCoefficients::omega_sq, py::arg("t"), py::arg("phase") = 0.0)
        .def_static("single_harmonic", &HillCoefficients::single_harmonic,
                    py::arg("omega0_sq"), py::arg("harmonic"), py::arg("amplitude"),
                    py::arg("drive"));

    m.def("omega_sq_exact", &omega_sq_exact, py::arg("cfg"), py::arg("R0"), py::arg("t"),
          py::arg("phase"));
    m.def("omega_sq_zero_order", &omega_sq_zero_order, py::arg("cfg"), py::arg("R0"),
          py::arg("t"));
    m.def("omega_sq_series", &omega_sq_series, py::arg("cfg"), py::arg("orbit"), py::arg("S"),
          py::arg("pmax"));
    m.def("fourier_b", &fourier_b, py::arg("cfg"), py::arg("orbit"), py::arg("pmax"),
          py::arg("quad_n") = 4096);
    m.def("base_frequency_sq", &base_frequency_sq, py::arg("cfg"), py::arg("orbit"),
          py::arg("e4_coeff") = 0.75);
    m.def("hill_amplitudes", &hill_amplitudes, py::arg("cfg"), py::arg("orbit"), py::arg("b"),
          py::arg("e4_coeff") = 0.75);
    m.def("build_hill_coefficients", &build_hill_coefficients, py::arg("cfg"),
          py::arg("orbit"), py::arg("opts") = HillOptions{});

    py::class_<ForcingSpec>(m, "ForcingSpec")
        .def_readonly("constant", &ForcingSpec::constant)
        .def_readonly("harmonic", &ForcingSpec::harmonic)
        .def_readonly("drive_freq", &ForcingSpec::drive_freq)
        .def("eval", &ForcingSpec::eval, py::arg("t"), py::arg("phase") = 0.0);
    m.def("forcing", &forcing, py::arg("cfg"), py::arg("orbit"), py::arg("pmax"),
          py::arg("quad_n") = 4096);

    m.def("zone_center", &zone_center, py::arg("n"), py::arg("e"), py::arg("alpha") = 0.0,
          py::arg("e4_coeff") = 0.75);
    m.def("center_semimajor_axis", &center_semimajor_axis, py::arg("cfg"), py::arg("ratio"));
    m.def("zone_width", &zone_width, py::arg("omega0"), py::arg("n"), py::arg("h_n"));
    m.def("width_semimajor_axis", &width_semimajor_axis, py::arg("eps1"), py::arg("omega0"),
          py::arg("a"));

    py::class_<OverlapReport>(m, "OverlapReport")
        .def_readonly("n", &OverlapReport::n)
        .def_readonly("gap", &OverlapReport::gap)
        .def_readonly("width_term", &OverlapReport::width_term)
        .def_readonly("margin", &OverlapReport::margin)
        .def_readonly("overlapped", &OverlapReport::overlapped);
    m.def("overlap_margin", &overlap_margin, py::arg("cfg"), py::arg("n"), py::arg("e"),
          py::arg("b_n"), py::arg("c1") = 0.75, py::arg("c2") = 0.375);
    m.def("critical_order", &critical_order, py::arg("cfg"), py::arg("b"));

    py::class_<InstabilityZone>(m, "InstabilityZone")
        .def_readonly("n", &InstabilityZone::n)
        .def_readonly("center_ratio", &InstabilityZone::center_ratio)
        .def_readonly("center_a", &InstabilityZone::center_a)
        .def_readonly("width_eps1", &InstabilityZone::width_eps1)
        .def_readonly("width_eps2", &InstabilityZone::width_eps2)
        .def_readonly("width_a", &InstabilityZone::width_a)
        .def_readonly("e", &InstabilityZone::e);
    m.def("build_zone", &build_zone, py::arg("cfg"), py::arg("n"), py::arg("e"),
          py::arg("opts") = HillOptions{}, py::arg("alpha") = 0.0);

    py::class_<VariationalState>(m, "VariationalState")
        .def(py::init<double, double, double>(), py::arg("x"), py::arg("v") = 0.0,
             py::arg("t") = 0.0)
        .def_readwrite("x", &VariationalState::x)
        .def_readwrite("v", &VariationalState::v)
        .def_readwrite("t", &VariationalState::t);
    m.def("propagate_variation", &propagate_variation, py::arg("coeffs"), py::arg("state"),
          py::arg("t_end"), py::arg("tol"));

    py::class_<MonodromyResult>(m, "MonodromyResult")
        .def_readonly("trace", &MonodromyResult::trace)
        .def_readonly("multiplier_mags", &MonodromyResult::multiplier_mags)
        .def_readonly("unstable", &MonodromyResult::unstable)
        .def_readonly("period_used", &MonodromyResult::period_used)
        .def_readonly("det", &MonodromyResult::det);
    m.def("monodromy", &monodromy, py::arg("coeffs"), py::arg("period"), py::arg("tol"));
    m.def("monodromy_fixed", &monodromy_fixed, py::arg("coeffs"), py::arg("period"),
          py::arg("steps") = 4096);

    py::class_<TongueEdges>(m, "TongueEdges")
        .def_readonly("lo", &TongueEdges::lo)
        .def_readonly("hi", &TongueEdges::hi)
        .def("width", &TongueEdges::width);
    m.def("tongue_boundaries", &tongue_boundaries, py::arg("at_ratio"), py::arg("n"),
          py::arg("window_lo"), py::arg("window_hi"), py::arg("tol"));

    py::class_<ScanPoint>(m, "ScanPoint")
        .def_readonly("ratio", &ScanPoint::ratio)
        .def_readonly("trace", &ScanPoint::trace)
        .def_readonly("unstable", &ScanPoint::unstable)
        .def_readonly("failed", &ScanPoint::failed);
    m.def(
        "stability_scan",
        [](const SystemConfig& cfg, const ProbeOrbit& tmpl, const std::vector<double>& grid,
           const HillOptions& opts, double tol) {
            return stability_scan(cfg, tmpl, grid, opts, tol);
        },
        py::arg("cfg"), py::arg("tmpl"), py::arg("ratios"), py::arg("opts") = HillOptions{},
        py::arg("tol") = 1e-10);
    m.def("ratio_to_semimajor_axis", &ratio_to_semimajor_axis, py::arg("cfg"),
          py::arg("ratio"));

    py::class_<TrajectoryState>(m, "TrajectoryState")
        .def(py::init<>())
        .def_readwrite("R", &TrajectoryState::R)
        .def_readwrite("lam", &TrajectoryState::lambda)
        .def_readwrite("vR", &TrajectoryState::vR)
        .def_readwrite("L", &TrajectoryState::L)
        .def_readwrite("t", &TrajectoryState::t);
    py::class_<TrajectorySample>(m, "TrajectorySample")
        .def_readonly("t", &TrajectorySample::t)
        .def_readonly("R", &TrajectorySample::R)
        .def_readonly("lam", &TrajectorySample::lambda)
        .def_readonly("vR", &TrajectorySample::vR)
        .def_readonly("L", &TrajectorySample::L)
        .def_readonly("a_osc", &TrajectorySample::a_osc)
        .def_readonly("e_osc", &TrajectorySample::e_osc)
        .def_readonly("jacobi", &TrajectorySample::jacobi);
    py::class_<IntegrationReport>(m, "IntegrationReport")
        .def_readonly("samples", &IntegrationReport::samples)
        .def_readonly("jacobi_drift", &IntegrationReport::jacobi_drift)
        .def_readonly("jacobi_warning", &IntegrationReport::jacobi_warning);
    py::class_<DivergenceResult>(m, "DivergenceResult")
        .def_readonly("ftle", &DivergenceResult::ftle)
        .def_readonly("renormalizations", &DivergenceResult::renormalizations)
        .def_readonly("horizon", &DivergenceResult::horizon);

    m.def("pericenter_start", &pericenter_start, py::arg("cfg"), py::arg("orbit"));
    m.def("jacobi_constant", &jacobi_constant, py::arg("cfg"), py::arg("state"));
    m.def(
        "integrate",
        [](const SystemConfig& cfg, const TrajectoryState& s0, double t_end, double tol,
           int n_samples) { return integrate(cfg, s0, t_end, tol, n_samples); },
        py::arg("cfg"), py::arg("start"), py::arg("t_end"), py::arg("tol"),
        py::arg("n_samples"));
    m.def(
        "divergence",
        [](const SystemConfig& cfg, const TrajectoryState& s0, double delta0, double horizon,
           double tol) { return divergence(cfg, s0, delta0, horizon, tol); },
        py::arg("cfg"), py::arg("start"), py::arg("delta0"), py::arg("horizon"),
        py::arg("tol"));

#ifdef PARRES_VERSION
    m.attr("__version__") = PARRES_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
