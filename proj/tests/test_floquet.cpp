#include "parres/floquet.hpp"

#include "parres/zones.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace parres;

namespace {
constexpr double kPi = 3.14159265358979323846;

CoeffBuilder mathieu_family(double omega0, double h) {
    // scan coordinate: drive-to-natural frequency ratio x = nu/omega0
    return [omega0, h](double x) {
        return HillCoefficients::single_harmonic(omega0 * omega0, 1, h, x * omega0);
    };
}
} // namespace

TEST_CASE("variational propagation matches the constant-frequency solution") {
    const double w0 = 1.3;
    const HillCoefficients c = HillCoefficients::single_harmonic(w0 * w0, 1, 0.0, 1.0);
    const VariationalState s0{0.7, -0.2, 0.0};
    const double t1 = 2.9;
    const VariationalState s1 = propagate_variation(c, s0, t1, 1e-12);
    CHECK(s1.x == doctest::Approx(s0.x * std::cos(w0 * t1) + s0.v / w0 * std::sin(w0 * t1))
                      .epsilon(1e-10));
    CHECK(s1.v == doctest::Approx(-s0.x * w0 * std::sin(w0 * t1) + s0.v * std::cos(w0 * t1))
                      .epsilon(1e-10));
    CHECK(s1.t == t1);
}

TEST_CASE("constant-frequency monodromy matches the closed form") {
    // h = 0: trace = 2 cos(omega0 T)
    for (double w0T : {0.5, kPi / 2, 1.9, 3.7}) {
        const HillCoefficients c = HillCoefficients::single_harmonic(1.0, 1, 0.0, 1.0);
        const MonodromyResult res = monodromy(c, w0T, 1e-11);
        CHECK(res.trace == doctest::Approx(2.0 * std::cos(w0T)).epsilon(1e-9));
        CHECK(!res.unstable);
        CHECK(res.det == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("principal tongue center is unstable, off-tongue drive is stable") {
    const double w0 = 1.0, h = 0.05;
    const HillCoefficients on = HillCoefficients::single_harmonic(w0 * w0, 1, h, 2.0 * w0);
    const MonodromyResult r_on = monodromy(on, 2.0 * kPi / (2.0 * w0), 1e-11);
    CHECK(r_on.unstable);
    CHECK(std::abs(r_on.trace) > 2.0);
    CHECK(r_on.multiplier_mags[0] * r_on.multiplier_mags[1] == doctest::Approx(1.0).epsilon(1e-8));

    const HillCoefficients off = HillCoefficients::single_harmonic(w0 * w0, 1, h, 3.5 * w0);
    const MonodromyResult r_off = monodromy(off, 2.0 * kPi / (3.5 * w0), 1e-11);
    CHECK(!r_off.unstable);
    CHECK(std::abs(r_off.trace) < 2.0);
}

TEST_CASE("monodromy determinant stays at one") {
    SystemConfig cfg = SystemConfig::normalized(0.1);
    for (double rho : {1.45, 1.8, 2.3, 3.05}) {
        const HillCoefficients c = coefficients_at_ratio(cfg, {1.0, 0.0, 0.0}, rho, {48, 4096, 0.75});
        const MonodromyResult res = monodromy(c, 2.0 * kPi / std::abs(c.drive_freq), 1e-10);
        CHECK(std::abs(res.det - 1.0) <= 1e-8);
        CHECK(res.multiplier_mags[0] * res.multiplier_mags[1] ==
              doctest::Approx(1.0).epsilon(1e-8));
    }
}

TEST_CASE("fixed-step and adaptive paths agree") {
    const HillCoefficients c = HillCoefficients::single_harmonic(1.0, 1, 0.03, 2.02);
    const double T = 2.0 * kPi / 2.02;
    const MonodromyResult adaptive = monodromy(c, T, 1e-12);
    const MonodromyResult fixed = monodromy_fixed(c, T, 4096);
    CHECK(fixed.trace == doctest::Approx(adaptive.trace).epsilon(1e-9));
    CHECK(fixed.unstable == adaptive.unstable);
    // bit-reproducibility of repeated runs
    const MonodromyResult again = monodromy(c, T, 1e-12);
    CHECK(again.trace == adaptive.trace);
}

TEST_CASE("classification does not flip under tolerance tightening") {
    const double w0 = 1.0, h = 0.04;
    for (double x : {1.90, 1.96, 2.0, 2.04, 2.10, 3.0}) {
        const HillCoefficients c = HillCoefficients::single_harmonic(w0 * w0, 1, h, x * w0);
        const double T = 2.0 * kPi / (x * w0);
        const MonodromyResult loose = monodromy(c, T, 1e-8);
        const MonodromyResult tight = monodromy(c, T, 1e-9);
        if (std::abs(std::abs(loose.trace) - 2.0) > 1e-4)
            CHECK(loose.unstable == tight.unstable);
    }
}

TEST_CASE("tongue boundaries on the pure single-harmonic equation") {
    const double w0 = 1.0;
    SUBCASE("no instability in the window is an error") {
        CHECK_THROWS_AS(
            tongue_boundaries(mathieu_family(w0, 0.0), 1, 1.9, 2.1, 1e-10),
            NumericsError);
    }
    SUBCASE("measured width tracks the amplitude linearly") {
        const double h1 = 0.02, h2 = 0.04;
        const TongueEdges e1 =
            tongue_boundaries(mathieu_family(w0, h1), 1, 2.0 - 5 * h1, 2.0 + 5 * h1, 1e-11);
        const TongueEdges e2 =
            tongue_boundaries(mathieu_family(w0, h2), 1, 2.0 - 5 * h2, 2.0 + 5 * h2, 1e-11);
        CHECK(e1.lo < 2.0);
        CHECK(e1.hi > 2.0);
        // first-order width in the drive coordinate equals h
        CHECK(e1.width() == doctest::Approx(h1).epsilon(0.05));
        CHECK(e2.width() == doctest::Approx(2.0 * e1.width()).epsilon(0.1));
        // tongue is centered on the resonant drive to second order
        CHECK(std::abs(0.5 * (e1.lo + e1.hi) - 2.0) <= 4.0 * h1 * h1);
    }
}

TEST_CASE("full-system tongue contains the analytic center") {
    SystemConfig cfg = SystemConfig::normalized(1e-3);
    const HillOptions opts{48, 4096, 0.75};
    const int n = 3;
    const InstabilityZone zone = build_zone(cfg, n, 0.0, opts);
    const double w_ratio = zone.width_eps1 / cfg.omega_s;
    const CoeffBuilder family = [&](double rho) {
        return coefficients_at_ratio(cfg, {1.0, 0.0, 0.0}, rho, opts);
    };
    const TongueEdges edges = tongue_boundaries(family, n, zone.center_ratio - 5.0 * w_ratio,
                                                zone.center_ratio + 5.0 * w_ratio, 1e-11);
    CHECK(edges.lo <= zone.center_ratio);
    CHECK(edges.hi >= zone.center_ratio);
    // measured center sits within one analytic width of the analytic center
    CHECK(std::abs(0.5 * (edges.lo + edges.hi) - zone.center_ratio) <= w_ratio);
}

TEST_CASE("stability scan marks failures and stays stable for m = 0") {
    SystemConfig cfg0 = SystemConfig::normalized(0.0);
    std::vector<double> grid;
    for (int k = 0; k < 12; ++k) grid.push_back(1.4 + 0.15 * k);
    const auto points = stability_scan(cfg0, {1.0, 0.0, 0.0}, grid, {16, 4096, 0.75});
    for (const ScanPoint& p : points) {
        CHECK(!p.failed);
        CHECK(!p.unstable);
    }

    std::vector<double> bad{0.5, 2.0};
    const auto marked = stability_scan(cfg0, {1.0, 0.0, 0.0}, bad);
    CHECK(marked[0].failed);
    CHECK(!marked[1].failed);

    std::vector<double> unsorted{2.0, 1.5};
    CHECK_THROWS_AS(stability_scan(cfg0, {1.0, 0.0, 0.0}, unsorted), std::invalid_argument);
}

TEST_CASE("scan results are reproducible bit for bit") {
    SystemConfig cfg = SystemConfig::normalized(0.01);
    std::vector<double> grid;
    for (int k = 0; k < 9; ++k) grid.push_back(2.9 + 0.025 * k);
    const auto first = stability_scan(cfg, {1.0, 0.0, 0.0}, grid, {24, 2048, 0.75}, 1e-9);
    const auto second = stability_scan(cfg, {1.0, 0.0, 0.0}, grid, {24, 2048, 0.75}, 1e-9);
    REQUIRE(first.size() == second.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
        CHECK(first[i].trace == second[i].trace);
        CHECK(first[i].unstable == second[i].unstable);
    }
}
