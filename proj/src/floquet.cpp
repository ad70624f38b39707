#include "parres/floquet.hpp"

#include "parres/ode.hpp"

#include <cmath>
#include <complex>

namespace parres {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTraceMargin = 1e-10; // |trace| > 2 + margin classifies unstable

MonodromyResult summarize(const ode::State<4>& s, double period) {
    const double x1 = s[0], v1 = s[1], x2 = s[2], v2 = s[3];
    MonodromyResult res;
    res.trace = x1 + v2;
    res.det = x1 * v2 - x2 * v1;
    res.period_used = period;
    if (std::abs(res.det - 1.0) > 1e-6)
        throw NumericsError("monodromy: determinant drifted beyond 1e-6");
    const double disc = res.trace * res.trace - 4.0 * res.det;
    if (disc >= 0.0) {
        const double root = std::sqrt(disc);
        res.multiplier_mags = {std::abs(0.5 * (res.trace + root)),
                               std::abs(0.5 * (res.trace - root))};
    } else {
        const double mag = std::sqrt(0.25 * res.trace * res.trace - 0.25 * disc);
        res.multiplier_mags = {mag, mag};
    }
    res.unstable = std::abs(res.trace) > 2.0 + kTraceMargin;
    return res;
}

} // namespace

VariationalState propagate_variation(const HillCoefficients& coeffs, VariationalState state,
                                     double t_end, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("propagate_variation: tol must be > 0");
    if (!std::isfinite(state.x) || !std::isfinite(state.v))
        throw std::invalid_argument("propagate_variation: state must be finite");
    auto rhs = [&coeffs](double t, const ode::State<2>& s, ode::State<2>& ds) {
        ds[0] = s[1];
        ds[1] = -coeffs.omega_sq(t) * s[0];
    };
    ode::State<2> s{state.x, state.v};
    ode::dopri5_integrate(rhs, s, state.t, t_end, tol, tol * 1e-3);
    return {s[0], s[1], t_end};
}

MonodromyResult monodromy(const HillCoefficients& coeffs, double period, double tol) {
    if (!(period > 0.0)) throw std::invalid_argument("monodromy: period must be > 0");
    if (!(tol > 0.0)) throw std::invalid_argument("monodromy: tol must be > 0");
    if (!std::isfinite(coeffs.omega0_sq) || !(coeffs.omega0_sq > 0.0))
        throw std::invalid_argument("monodromy: omega0_sq must be positive and finite");

    auto rhs = [&coeffs](double t, const ode::State<4>& s, ode::State<4>& ds) {
        const double w2 = coeffs.omega_sq(t);
        ds[0] = s[1];
        ds[1] = -w2 * s[0];
        ds[2] = s[3];
        ds[3] = -w2 * s[2];
    };
    ode::State<4> s{1.0, 0.0, 0.0, 1.0};
    ode::dopri5_integrate(rhs, s, 0.0, period, tol, tol * 1e-3);
    return summarize(s, period);
}

MonodromyResult monodromy_fixed(const HillCoefficients& coeffs, double period, long steps) {
    if (!(period > 0.0)) throw std::invalid_argument("monodromy_fixed: period must be > 0");
    if (steps < 16) throw std::invalid_argument("monodromy_fixed: steps must be >= 16");
    auto rhs = [&coeffs](double t, const ode::State<4>& s, ode::State<4>& ds) {
        const double w2 = coeffs.omega_sq(t);
        ds[0] = s[1];
        ds[1] = -w2 * s[0];
        ds[2] = s[3];
        ds[3] = -w2 * s[2];
    };
    ode::State<4> s{1.0, 0.0, 0.0, 1.0};
    ode::rk4_integrate(rhs, s, 0.0, period, steps);
    return summarize(s, period);
}

double ratio_to_semimajor_axis(const SystemConfig& cfg, double ratio) {
    cfg.validate();
    if (!(ratio > 1.0)) throw std::invalid_argument("ratio_to_semimajor_axis: ratio must be > 1");
    return std::cbrt(cfg.mu_primary() / (ratio * ratio * cfg.omega_s * cfg.omega_s));
}

HillCoefficients coefficients_at_ratio(const SystemConfig& cfg, const ProbeOrbit& tmpl,
                                       double ratio, const HillOptions& opts) {
    ProbeOrbit orbit = tmpl;
    orbit.a = ratio_to_semimajor_axis(cfg, ratio);
    return build_hill_coefficients(cfg, orbit, opts);
}

TongueEdges tongue_boundaries(const CoeffBuilder& at_ratio, int n, double window_lo,
                              double window_hi, double tol) {
    if (!(window_lo < window_hi))
        throw std::invalid_argument("tongue_boundaries: empty window");

    auto excess = [&](double ratio) {
        const HillCoefficients c = at_ratio(ratio);
        const double period = 2.0 * kPi / std::abs(c.drive_freq);
        return std::abs(monodromy(c, period, tol).trace) - 2.0;
    };

    const double g_lo = excess(window_lo);
    const double g_hi = excess(window_hi);
    if (g_lo >= 0.0 || g_hi >= 0.0)
        throw NumericsError("tongue_boundaries: window endpoints are not stable");

    // Coarse sweep for an unstable interior point; start near the expected
    // order-n center when it falls inside the window.
    const int coarse = 33;
    double peak_ratio = 0.0, peak = -1.0;
    const double guess = n > 2 ? static_cast<double>(n) / (n - 2) : 0.5 * (window_lo + window_hi);
    for (int k = 0; k <= coarse; ++k) {
        double rho = window_lo + (window_hi - window_lo) * k / coarse;
        if (k == 0) rho = std::clamp(guess, window_lo, window_hi);
        const double g = excess(rho);
        if (g > peak) {
            peak = g;
            peak_ratio = rho;
        }
        if (g > 0.0) break;
    }
    if (!(peak > 0.0))
        throw NumericsError("tongue_boundaries: no instability found in window");

    auto bisect = [&](double stable, double unstable) {
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (stable + unstable);
            if (std::abs(unstable - stable) <= 1e-8 * std::abs(mid)) break;
            if (excess(mid) > 0.0)
                unstable = mid;
            else
                stable = mid;
        }
        return 0.5 * (stable + unstable);
    };
    TongueEdges edges;
    edges.lo = bisect(window_lo, peak_ratio);
    edges.hi = bisect(window_hi, peak_ratio);
    return edges;
}

std::vector<ScanPoint> stability_scan(const SystemConfig& cfg, const ProbeOrbit& tmpl,
                                      std::span<const double> ratios, const HillOptions& opts,
                                      double tol) {
    for (std::size_t i = 1; i < ratios.size(); ++i)
        if (!(ratios[i] > ratios[i - 1]))
            throw std::invalid_argument("stability_scan: grid must be strictly increasing");
    std::vector<ScanPoint> out;
    out.reserve(ratios.size());
    for (double rho : ratios) {
        ScanPoint pt;
        pt.ratio = rho;
        try {
            if (!(rho > 1.0)) throw std::invalid_argument("ratio must be > 1");
            const HillCoefficients c = coefficients_at_ratio(cfg, tmpl, rho, opts);
            const double period = 2.0 * kPi / std::abs(c.drive_freq);
            const MonodromyResult res = monodromy(c, period, tol);
            pt.trace = res.trace;
            pt.unstable = res.unstable;
        } catch (const std::exception&) {
            pt.failed = true;
        }
        out.push_back(pt);
    }
    return out;
}

} // namespace parres
