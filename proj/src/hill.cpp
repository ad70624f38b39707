#include "parres/hill.hpp"

#include <cmath>

namespace parres {

namespace {

constexpr double kPi = 3.14159265358979323846;

// sum_p coeff[p] * cos(p*theta) by the Chebyshev recurrence.
double cosine_series(const std::vector<double>& coeff, double theta) {
    if (coeff.empty()) return 0.0;
    const double c = std::cos(theta);
    double acc = coeff[0];
    if (coeff.size() > 1) acc += coeff[1] * c;
    double ckm1 = 1.0; // cos(0)
    double ck = c;     // cos(theta)
    for (std::size_t p = 2; p < coeff.size(); ++p) {
        const double ckp1 = 2.0 * c * ck - ckm1;
        acc += coeff[p] * ckp1;
        ckm1 = ck;
        ck = ckp1;
    }
    return acc;
}

// W(S) = sum_{q=2..pmax} q(q-1) y^(q-2) P_q(cos S), all degrees off one
// Bonnet recurrence pass.
double legendre_curvature_sum(double y, double cosS, int pmax) {
    double pm2 = 1.0;  // P_0
    double pm1 = cosS; // P_1
    double acc = 0.0;
    double yq = 1.0; // y^(q-2) starting at q = 2
    for (int q = 2; q <= pmax; ++q) {
        const double pq = ((2 * q - 1) * cosS * pm1 - (q - 1) * pm2) / q;
        pm2 = pm1;
        pm1 = pq;
        acc += q * (q - 1) * yq * pq;
        yq *= y;
    }
    return acc;
}

// Cosine coefficients of a 2pi-periodic function sampled on a uniform grid:
// out[0] = mean, out[p] = (1/pi) integral f cos(pS) dS for p >= 1.
std::vector<double> cosine_coefficients(const std::vector<double>& samples, int pmax) {
    const int n = static_cast<int>(samples.size());
    std::vector<double> out(pmax + 1, 0.0);
    for (int p = 0; p <= pmax; ++p) {
        double acc = 0.0;
        for (int k = 0; k < n; ++k)
            acc += samples[k] * std::cos(p * (2.0 * kPi * k / n));
        out[p] = (p == 0 ? 1.0 : 2.0) * acc / n;
    }
    return out;
}

double eccentricity_factor(double e, double e4_coeff) {
    const double e2 = e * e;
    return 1.0 - e4_coeff * e2 * e2;
}

void require_inner(double radius, const SystemConfig& cfg, const char* who) {
    if (!(radius < cfg.perturber_radius))
        throw std::invalid_argument(std::string(who) + ": requires mean radius < perturber radius");
}

} // namespace

double HillCoefficients::omega_sq(double t, double phase) const {
    return omega0_sq * (1.0 + cosine_series(h, drive_freq * t + phase));
}

HillCoefficients HillCoefficients::single_harmonic(double omega0_sq, int harmonic,
                                                   double amplitude, double drive) {
    if (harmonic < 1) throw std::invalid_argument("single_harmonic: harmonic must be >= 1");
    HillCoefficients c;
    c.omega0_sq = omega0_sq;
    c.h.assign(harmonic + 1, 0.0);
    c.h[harmonic] = amplitude;
    c.b = c.h;
    c.drive_freq = drive;
    c.e_used = 0.0;
    return c;
}

HillCoefficients HillCoefficients::reduced_to(int n) const {
    HillCoefficients c = *this;
    for (std::size_t p = 1; p < c.h.size(); ++p)
        if (static_cast<int>(p) != n) c.h[p] = 0.0;
    for (std::size_t p = 1; p < c.b.size(); ++p)
        if (static_cast<int>(p) != n) c.b[p] = 0.0;
    return c;
}

double ForcingSpec::eval(double t, double phase) const {
    return constant + cosine_series(harmonic, drive_freq * t + phase);
}

double omega_sq_exact(const SystemConfig& cfg, double R0, double t, double phase) {
    cfg.validate();
    if (!(R0 > 0.0) || !(R0 < cfg.perturber_radius))
        throw std::invalid_argument("omega_sq_exact: requires 0 < R0 < r");
    const double dw = std::sqrt(cfg.mu_primary() / (R0 * R0 * R0)) - cfg.omega_s;
    const double S = dw * t + phase;
    const double r = cfg.perturber_radius;
    const double delta = mutual_distance(R0, r, S);
    if (!(delta > 1e-12 * r))
        throw std::invalid_argument("omega_sq_exact: collision geometry (Delta ~ 0)");
    const double d2 = delta * delta;
    const double q = R0 - r * std::cos(S);
    return cfg.mu_primary() / (R0 * R0 * R0) -
           cfg.grav * cfg.perturber_mass / (d2 * delta) * (1.0 - 3.0 * q * q / d2);
}

double omega_sq_zero_order(const SystemConfig& cfg, double R0, double t) {
    cfg.validate();
    if (!(R0 > 0.0) || !(R0 < cfg.perturber_radius))
        throw std::invalid_argument("omega_sq_zero_order: requires 0 < R0 < r");
    const double r3 = std::pow(cfg.perturber_radius, 3);
    const double gm = cfg.grav * cfg.perturber_mass;
    const double dw = std::sqrt(cfg.mu_primary() / (R0 * R0 * R0)) - cfg.omega_s;
    return cfg.mu_primary() / (R0 * R0 * R0) + 0.5 * gm / r3 +
           1.5 * gm / r3 * std::cos(2.0 * dw * t);
}

double omega_sq_series(const SystemConfig& cfg, const ProbeOrbit& orbit, double S, int pmax) {
    cfg.validate();
    orbit.validate();
    if (pmax < 2) throw std::invalid_argument("omega_sq_series: pmax must be >= 2");
    const double rbar = mean_radius(orbit);
    require_inner(rbar, cfg, "omega_sq_series");
    const double y = rbar / cfg.perturber_radius;
    const double r3 = std::pow(cfg.perturber_radius, 3);
    return base_frequency_sq(cfg, orbit) +
           cfg.grav * cfg.perturber_mass / r3 * legendre_curvature_sum(y, std::cos(S), pmax);
}

std::vector<double> fourier_b(const SystemConfig& cfg, const ProbeOrbit& orbit, int pmax,
                              int quad_n) {
    cfg.validate();
    orbit.validate();
    if (pmax < 2) throw std::invalid_argument("fourier_b: pmax must be >= 2");
    if (quad_n < 4) throw std::invalid_argument("fourier_b: quad_n must be >= 4");
    const double rbar = mean_radius(orbit);
    require_inner(rbar, cfg, "fourier_b");
    const double y = rbar / cfg.perturber_radius;

    auto coeffs_at = [&](int n) {
        std::vector<double> w(n);
        for (int k = 0; k < n; ++k)
            w[k] = legendre_curvature_sum(y, std::cos(2.0 * kPi * k / n), pmax);
        return cosine_coefficients(w, pmax);
    };
    std::vector<double> b = coeffs_at(quad_n);
    std::vector<double> b2 = coeffs_at(2 * quad_n);
    for (int p = 0; p <= pmax; ++p) {
        const double scale = std::max({std::abs(b[p]), std::abs(b2[p]), 1.0});
        if (std::abs(b[p] - b2[p]) > 1e-10 * scale)
            throw NumericsError("fourier_b: quadrature did not converge at harmonic " +
                                std::to_string(p) + " (increase quad_n)");
    }
    return b2;
}

double base_frequency_sq(const SystemConfig& cfg, const ProbeOrbit& orbit, double e4_coeff) {
    cfg.validate();
    orbit.validate();
    return cfg.mu_primary() / (orbit.a * orbit.a * orbit.a) *
           eccentricity_factor(orbit.e, e4_coeff);
}

std::vector<double> hill_amplitudes(const SystemConfig& cfg, const ProbeOrbit& orbit,
                                    const std::vector<double>& b, double e4_coeff) {
    cfg.validate();
    orbit.validate();
    const double rbar = mean_radius(orbit);
    const double y = rbar / cfg.perturber_radius;
    const double scale = cfg.mass_ratio() * y * y * y / eccentricity_factor(orbit.e, e4_coeff);
    std::vector<double> h(b.size());
    for (std::size_t p = 0; p < b.size(); ++p) h[p] = scale * b[p];
    return h;
}

ForcingSpec forcing(const SystemConfig& cfg, const ProbeOrbit& orbit, int pmax, int quad_n) {
    cfg.validate();
    orbit.validate();
    if (pmax < 2) throw std::invalid_argument("forcing: pmax must be >= 2");
    const double rbar = mean_radius(orbit);
    require_inner(rbar, cfg, "forcing");
    const double y = rbar / cfg.perturber_radius;
    const double L0 = angular_momentum(cfg, orbit);

    ForcingSpec spec;
    spec.constant = L0 * L0 / (rbar * rbar * rbar) - cfg.mu_primary() / (rbar * rbar);
    spec.drive_freq = std::sqrt(cfg.mu_primary() / (orbit.a * orbit.a * orbit.a)) - cfg.omega_s;

    std::vector<double> w(quad_n);
    for (int k = 0; k < quad_n; ++k) {
        const double cS = std::cos(2.0 * kPi * k / quad_n);
        double acc = 0.0;
        double yp = y; // y^(p-1) starting at p = 2
        for (int p = 2; p <= pmax; ++p) {
            acc += p * yp * legendre_p(p, cS);
            yp *= y;
        }
        w[k] = acc;
    }
    spec.harmonic = cosine_coefficients(w, pmax);
    const double front = -cfg.grav * cfg.perturber_mass /
                         (cfg.perturber_radius * cfg.perturber_radius);
    for (double& c : spec.harmonic) c *= front;
    return spec;
}

HillCoefficients build_hill_coefficients(const SystemConfig& cfg, const ProbeOrbit& orbit,
                                         const HillOptions& opts) {
    HillCoefficients c;
    c.b = fourier_b(cfg, orbit, opts.pmax, opts.quad_n);
    c.h = hill_amplitudes(cfg, orbit, c.b, opts.e4_coeff);
    const double rbar = mean_radius(orbit);
    c.omega0_sq = cfg.mu_primary() / (rbar * rbar * rbar) *
                  eccentricity_factor(orbit.e, opts.e4_coeff);
    c.drive_freq = std::sqrt(cfg.mu_primary() / (orbit.a * orbit.a * orbit.a)) - cfg.omega_s;
    c.e_used = orbit.e;
    return c;
}

} // namespace parres
