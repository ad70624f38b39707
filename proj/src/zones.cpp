#include "parres/zones.hpp"

#include <cmath>
#include <numeric>

namespace parres {

Resonance Resonance::from_order(int n) {
    if (n < 3) throw std::invalid_argument("Resonance: order must be >= 3");
    Resonance r;
    r.n = n;
    const int g = std::gcd(n, n - 2);
    r.p = n / g;
    r.q = (n - 2) / g;
    return r;
}

std::string Resonance::label() const {
    return std::to_string(p) + ":" + std::to_string(q);
}

double zone_center(int n, double e, double alpha, double e4_coeff) {
    if (n < 3) throw std::invalid_argument("zone_center: n must be >= 3");
    if (!(e >= 0.0 && e < 1.0)) throw std::invalid_argument("zone_center: e must be in [0, 1)");
    const double e2 = e * e;
    const double den = n - 2.0 * (1.0 - 0.5 * alpha) + e4_coeff * e2 * e2;
    if (!(den > 0.0)) throw std::invalid_argument("zone_center: nonpositive denominator");
    return n / den;
}

double center_semimajor_axis(const SystemConfig& cfg, double ratio) {
    cfg.validate();
    if (!(ratio >= 1.0)) throw std::invalid_argument("center_semimajor_axis: ratio must be >= 1");
    return cfg.perturber_radius * std::pow(ratio, -2.0 / 3.0);
}

std::pair<double, double> zone_width(double omega0, int n, double h_n) {
    if (n < 3) throw std::invalid_argument("zone_width: n must be >= 3");
    if (!(h_n >= 0.0)) throw std::invalid_argument("zone_width: h_n must be >= 0");
    if (!(omega0 > 0.0)) throw std::invalid_argument("zone_width: omega0 must be > 0");
    const double eps1 = omega0 * n * h_n / (2.0 * (n - 2));
    const double eps2 = omega0 * n * h_n * h_n / (8.0 * (n - 2));
    return {eps1, eps2};
}

double width_semimajor_axis(double eps1, double omega0, double a) {
    return 2.0 / 3.0 * (eps1 / omega0) * a;
}

OverlapReport overlap_margin(const SystemConfig& cfg, int n, double e, double b_n,
                             double c1, double c2) {
    cfg.validate();
    if (n < 3) throw std::invalid_argument("overlap_margin: n must be >= 3");
    if (!(e >= 0.0 && e < 1.0)) throw std::invalid_argument("overlap_margin: e must be in [0, 1)");
    const double e4 = e * e * e * e;
    const double den_n = n - (2.0 - c1 * e4);
    const double den_np1 = n - (1.0 - c1 * e4);
    const double den_w = 2.0 * (n - 2) * (1.0 - c2 * e4);
    if (!(den_n > 0.0) || !(den_np1 > 0.0) || !(den_w > 0.0))
        throw std::invalid_argument("overlap_margin: nonpositive denominator");

    OverlapReport rep;
    rep.n = n;
    rep.gap = n / den_n - (n + 1) / den_np1;
    rep.width_term = n * cfg.mass_ratio() * b_n / den_w;
    rep.margin = rep.gap - rep.width_term;
    rep.overlapped = rep.margin <= 0.0;
    return rep;
}

int critical_order(const SystemConfig& cfg, double b) {
    cfg.validate();
    if (!(cfg.perturber_mass > 0.0))
        throw std::invalid_argument("critical_order: m = 0 never overlaps (n -> infinity)");
    if (!(b > 0.0))
        throw std::invalid_argument("critical_order: b must be > 0");
    const double m = cfg.perturber_mass;
    const double M = cfg.primary_mass;
    const double mb = m * b;
    const double raw = (mb + std::sqrt(mb * mb + 16.0 * M * mb)) / (2.0 * mb);
    const int n = static_cast<int>(std::ceil(raw));
    return n < 3 ? 3 : n;
}

std::vector<EccScanRow> eccentricity_scan(const SystemConfig& cfg, int n,
                                          std::span<const double> e_grid, double b_n,
                                          double c1, double c2) {
    std::vector<EccScanRow> rows;
    rows.reserve(e_grid.size());
    for (double e : e_grid) {
        if (!(e >= 0.0 && e <= 0.9))
            throw std::invalid_argument("eccentricity_scan: e grid must lie in [0, 0.9]");
        const OverlapReport rep = overlap_margin(cfg, n, e, b_n, c1, c2);
        rows.push_back({e, rep.width_term, rep.gap, rep.margin});
    }
    return rows;
}

InstabilityZone build_zone(const SystemConfig& cfg, int n, double e, const HillOptions& opts,
                           double alpha) {
    InstabilityZone z;
    z.n = n;
    z.e = e;
    z.center_ratio = zone_center(n, e, alpha, opts.e4_coeff);
    z.center_a = center_semimajor_axis(cfg, z.center_ratio);
    const ProbeOrbit orbit{z.center_a, e, 0.0};
    HillOptions local = opts;
    if (local.pmax < n + 2) local.pmax = n + 2; // b_n needs harmonics past n
    const HillCoefficients coeffs = build_hill_coefficients(cfg, orbit, local);
    const double omega0 = std::sqrt(base_frequency_sq(cfg, orbit, opts.e4_coeff));
    const double h_n = n < static_cast<int>(coeffs.h.size()) ? std::abs(coeffs.h[n]) : 0.0;
    auto [eps1, eps2] = zone_width(omega0, n, h_n);
    z.width_eps1 = eps1;
    z.width_eps2 = eps2;
    z.width_a = width_semimajor_axis(eps1, omega0, z.center_a);
    return z;
}

} // namespace parres
