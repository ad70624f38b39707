#include "parres/zones.hpp"

#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>
#include <vector>

using namespace parres;

TEST_CASE("zone centers generate the unstable family") {
    CHECK(zone_center(3, 0.0) == doctest::Approx(3.0));
    CHECK(zone_center(4, 0.0) == doctest::Approx(2.0));
    CHECK(zone_center(5, 0.0) == doctest::Approx(5.0 / 3.0).epsilon(1e-15));
    CHECK(zone_center(6, 0.0) == doctest::Approx(1.5));
    CHECK(zone_center(7, 0.0) == doctest::Approx(7.0 / 5.0).epsilon(1e-15));
    for (int n = 3; n <= 40; ++n)
        CHECK(zone_center(n, 0.0) == doctest::Approx(double(n) / (n - 2)).epsilon(1e-15));
    CHECK(zone_center(13, 0.2) == doctest::Approx(1.181689270261426).epsilon(1e-14));
    CHECK(zone_center(13, 0.2) < 13.0 / 11.0);
    CHECK_THROWS_AS(zone_center(2, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(zone_center(3, 1.0), std::invalid_argument);
}

TEST_CASE("zone center knobs shift the family as stated") {
    // alpha folds into the denominator as n - 2(1 - alpha/2)
    CHECK(zone_center(5, 0.0, 1.0) == doctest::Approx(5.0 / 4.0).epsilon(1e-15));
    CHECK(zone_center(4, 0.0, 2.0) == doctest::Approx(1.0).epsilon(1e-15));
    // the e^4 coefficient is selectable
    const double e = 0.4;
    CHECK(zone_center(6, e, 0.0, 0.375) ==
          doctest::Approx(6.0 / (4.0 + 0.375 * std::pow(e, 4))).epsilon(1e-15));
}

TEST_CASE("zone centers drift toward the perturber with eccentricity") {
    SystemConfig cfg = SystemConfig::normalized(1e-3);
    for (int n : {3, 4, 13}) {
        double prev_ratio = 1e300, prev_a = 0.0;
        for (int k = 0; k <= 25; ++k) {
            const double e = 0.5 * k / 25;
            const double ratio = zone_center(n, e);
            const double a = center_semimajor_axis(cfg, ratio);
            if (k > 0) {
                CHECK(ratio < prev_ratio);
                CHECK(a > prev_a);
            }
            prev_ratio = ratio;
            prev_a = a;
        }
    }
}

TEST_CASE("resonance labels of the family") {
    CHECK(Resonance::from_order(3).label() == "3:1");
    CHECK(Resonance::from_order(4).label() == "2:1");
    CHECK(Resonance::from_order(5).label() == "5:3");
    CHECK(Resonance::from_order(6).label() == "3:2");
    CHECK(Resonance::from_order(7).label() == "7:5");
    const Resonance r = Resonance::from_order(6);
    CHECK(r.n == 6);
    CHECK(std::gcd(r.p, r.q) == 1);
    CHECK_THROWS_AS(Resonance::from_order(2), std::invalid_argument);
}

TEST_CASE("commensurability distances at the reference radius") {
    SystemConfig cfg = SystemConfig::physical(1.0, 1.0, 1e-3, 5.2025);
    CHECK(center_semimajor_axis(cfg, 3.0) == doctest::Approx(2.5011011298414307).epsilon(1e-12));
    CHECK(center_semimajor_axis(cfg, 2.0) == doctest::Approx(3.2773696310390386).epsilon(1e-12));
    CHECK(center_semimajor_axis(cfg, 5.0 / 3.0) ==
          doctest::Approx(3.7009474833219103).epsilon(1e-12));
    SystemConfig unit = SystemConfig::normalized(1e-3);
    CHECK(center_semimajor_axis(unit, 1.0) == doctest::Approx(1.0));
}

TEST_CASE("zone widths: closed values, pair ratio, order scaling") {
    CHECK(zone_width(1.0, 4, 0.0) == std::pair<double, double>{0.0, 0.0});
    const auto [eps1, eps2] = zone_width(1.0, 4, 2.6912e-3);
    CHECK(eps1 == doctest::Approx(2.6912e-3).epsilon(1e-14));
    CHECK(eps2 / eps1 == doctest::Approx(2.6912e-3 / 4.0).epsilon(1e-12));

    std::mt19937 rng(11);
    std::uniform_real_distribution<double> uh(1e-6, 0.3);
    std::uniform_int_distribution<int> un(3, 50);
    for (int trial = 0; trial < 100; ++trial) {
        const double h = uh(rng);
        const int n = un(rng);
        const auto [w1, w2] = zone_width(2.0, n, h);
        CHECK(w2 / w1 == doctest::Approx(h / 4.0).epsilon(1e-12));
    }

    // eps1/(omega0 h) = n/(2(n-2)) decreases toward 1/2
    double prev = 1e300;
    for (int n = 3; n <= 60; ++n) {
        const double scaled = zone_width(1.0, n, 1.0).first;
        CHECK(scaled < prev);
        CHECK(scaled > 0.5);
        prev = scaled;
    }
    CHECK_THROWS_AS(zone_width(1.0, 2, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(zone_width(1.0, 4, -0.1), std::invalid_argument);
}

TEST_CASE("overlap margin: closed cases and eccentricity trend") {
    SystemConfig cfg0 = SystemConfig::normalized(0.0);
    const OverlapReport quiet = overlap_margin(cfg0, 6, 0.0, 0.25);
    CHECK(quiet.width_term == 0.0);
    CHECK(!quiet.overlapped);
    CHECK(quiet.gap > 0.0);

    SystemConfig cfg = SystemConfig::normalized(0.1);
    // e = 0 closed forms
    const OverlapReport rep = overlap_margin(cfg, 13, 0.0, 0.1);
    CHECK(rep.gap == doctest::Approx(13.0 / 11.0 - 14.0 / 12.0).epsilon(1e-13));
    CHECK(rep.width_term == doctest::Approx(13.0 * 0.1 * 0.1 / 22.0).epsilon(1e-13));

    double prev_margin = 1e300;
    for (int k = 0; k <= 20; ++k) {
        const double e = 0.5 * k / 20;
        const OverlapReport r = overlap_margin(cfg, 13, e, 0.1);
        CHECK(r.margin < prev_margin);
        prev_margin = r.margin;
    }
}

TEST_CASE("critical order: closed form, error paths, brute-force agreement") {
    SystemConfig cfg = SystemConfig::normalized(0.1);
    // raw value (0.01 + sqrt(0.0001 + 0.16))/0.02 = 20.50625
    CHECK(critical_order(cfg, 0.1) == 21);
    CHECK(overlap_margin(cfg, 20, 0.0, 0.1).margin > 0.0);
    CHECK(overlap_margin(cfg, 21, 0.0, 0.1).margin <= 0.0);
    CHECK(overlap_margin(cfg, 25, 0.0, 0.1).overlapped);

    SystemConfig cfg0 = SystemConfig::normalized(0.0);
    CHECK_THROWS_AS(critical_order(cfg0, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(critical_order(cfg, 0.0), std::invalid_argument);

    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> um(1e-4, 0.2);
    std::uniform_real_distribution<double> ub(0.01, 0.5);
    for (int trial = 0; trial < 5; ++trial) {
        SystemConfig sys = SystemConfig::normalized(um(rng));
        const double b = ub(rng);
        const int closed = critical_order(sys, b);
        int brute = -1;
        for (int n = 3; n <= 4000; ++n) {
            if (overlap_margin(sys, n, 0.0, b).overlapped) {
                brute = n;
                break;
            }
        }
        CHECK(closed == brute);
    }
}

TEST_CASE("eccentricity scan rows match the overlap report") {
    SystemConfig cfg = SystemConfig::normalized(0.1);
    std::vector<double> grid;
    for (int k = 0; k <= 10; ++k) grid.push_back(0.05 * k);
    const auto rows = eccentricity_scan(cfg, 13, grid, 0.1);
    REQUIRE(rows.size() == grid.size());

    // e = 0 row reduces to the e-independent closed forms
    CHECK(rows[0].width == doctest::Approx(13.0 * 0.1 * 0.1 / 22.0).epsilon(1e-13));
    CHECK(rows[0].gap == doctest::Approx(13.0 / 11.0 - 14.0 / 12.0).epsilon(1e-13));

    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(rows[i].width > rows[i - 1].width);
        CHECK(rows[i].gap < rows[i - 1].gap);
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const OverlapReport rep = overlap_margin(cfg, 13, rows[i].e, 0.1);
        CHECK(rows[i].margin == doctest::Approx(rep.margin).epsilon(1e-15));
        CHECK((rows[i].width >= rows[i].gap) == rep.overlapped);
    }
    std::vector<double> bad{0.95};
    CHECK_THROWS_AS(eccentricity_scan(cfg, 13, bad, 0.1), std::invalid_argument);
}

TEST_CASE("zone catalog entries") {
    SystemConfig cfg = SystemConfig::normalized(1e-3);
    const InstabilityZone z = build_zone(cfg, 3, 0.0, {32, 4096, 0.75});
    CHECK(z.center_ratio == doctest::Approx(3.0));
    CHECK(z.center_a == doctest::Approx(std::pow(3.0, -2.0 / 3.0)).epsilon(1e-13));
    CHECK(z.width_eps1 > 0.0);
    CHECK(z.width_eps2 > 0.0);
    CHECK(z.width_eps2 < z.width_eps1);
    CHECK(z.width_a == doctest::Approx(2.0 / 3.0 * z.width_eps1 /
                                       std::sqrt(base_frequency_sq(cfg, {z.center_a, 0.0, 0.0})) *
                                       z.center_a)
                           .epsilon(1e-12));

    SystemConfig cfg0 = SystemConfig::normalized(0.0);
    const InstabilityZone quiet = build_zone(cfg0, 4, 0.0);
    CHECK(quiet.width_eps1 == 0.0);
    CHECK(quiet.width_a == 0.0);
}
