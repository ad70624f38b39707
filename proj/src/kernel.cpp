#include "parres/kernel.hpp"

#include <cmath>

namespace parres {

SystemConfig SystemConfig::normalized(double mass_ratio) {
    SystemConfig cfg;
    cfg.grav = 1.0;
    cfg.primary_mass = 1.0;
    cfg.perturber_mass = mass_ratio;
    cfg.perturber_radius = 1.0;
    cfg.omega_s = cfg.two_body_rate();
    cfg.validate();
    return cfg;
}

SystemConfig SystemConfig::physical(double grav, double primary_mass,
                                    double perturber_mass, double perturber_radius,
                                    double omega_s) {
    SystemConfig cfg;
    cfg.units = UnitSystem::physical;
    cfg.grav = grav;
    cfg.primary_mass = primary_mass;
    cfg.perturber_mass = perturber_mass;
    cfg.perturber_radius = perturber_radius;
    cfg.omega_s = omega_s > 0.0 ? omega_s : cfg.two_body_rate();
    cfg.validate();
    return cfg;
}

double SystemConfig::two_body_rate() const {
    return std::sqrt(grav * (primary_mass + perturber_mass) /
                     (perturber_radius * perturber_radius * perturber_radius));
}

void SystemConfig::validate() const {
    if (!(grav > 0.0)) throw std::invalid_argument("SystemConfig: grav must be > 0");
    if (!(primary_mass > 0.0)) throw std::invalid_argument("SystemConfig: primary_mass must be > 0");
    if (!(perturber_mass >= 0.0)) throw std::invalid_argument("SystemConfig: perturber_mass must be >= 0");
    if (!(perturber_mass < primary_mass))
        throw std::invalid_argument("SystemConfig: perturber_mass must be < primary_mass");
    if (!(perturber_radius > 0.0)) throw std::invalid_argument("SystemConfig: perturber_radius must be > 0");
    if (!(omega_s > 0.0)) throw std::invalid_argument("SystemConfig: omega_s must be > 0");
}

void ProbeOrbit::validate() const {
    if (!(a > 0.0)) throw std::invalid_argument("ProbeOrbit: a must be > 0");
    if (!(e >= 0.0 && e < 1.0)) throw std::invalid_argument("ProbeOrbit: e must be in [0, 1)");
    if (!std::isfinite(phase)) throw std::invalid_argument("ProbeOrbit: phase must be finite");
}

double legendre_p(int p, double x) {
    if (p < 0) throw std::invalid_argument("legendre_p: degree must be >= 0");
    if (!(x >= -1.0 && x <= 1.0)) throw std::invalid_argument("legendre_p: x must be in [-1, 1]");
    if (p == 0) return 1.0;
    if (p == 1) return x;
    double pm2 = 1.0;
    double pm1 = x;
    double pn = x;
    for (int n = 2; n <= p; ++n) {
        pn = ((2 * n - 1) * x * pm1 - (n - 1) * pm2) / n;
        pm2 = pm1;
        pm1 = pn;
    }
    return pn;
}

double mutual_distance(double R, double r, double S) {
    if (!(R > 0.0) || !(r > 0.0))
        throw std::invalid_argument("mutual_distance: radii must be > 0");
    const double d2 = R * R + r * r - 2.0 * R * r * std::cos(S);
    return std::sqrt(std::max(d2, 0.0));
}

double perturbing_potential(const SystemConfig& cfg, double R, double S, int pmax) {
    cfg.validate();
    if (!(R > 0.0)) throw std::invalid_argument("perturbing_potential: R must be > 0");
    if (!(R < cfg.perturber_radius))
        throw std::invalid_argument("perturbing_potential: requires R < r (outer perturber)");
    if (pmax < 2) throw std::invalid_argument("perturbing_potential: pmax must be >= 2");

    const double y = R / cfg.perturber_radius;
    const double c = std::cos(S);
    double series = 0.0;
    double yp = y * y; // y^p starting at p = 2
    for (int p = 2; p <= pmax; ++p) {
        series += yp * legendre_p(p, c);
        yp *= y;
    }
    return -cfg.mu_primary() / R -
           cfg.grav * cfg.perturber_mass / cfg.perturber_radius * series;
}

double perturbing_potential_bound(const SystemConfig& cfg, double R, int pmax) {
    const double y = R / cfg.perturber_radius;
    return cfg.grav * cfg.perturber_mass / cfg.perturber_radius *
           std::pow(y, pmax + 1) / (1.0 - y);
}

double mean_radius(const ProbeOrbit& orbit) {
    orbit.validate();
    return orbit.a * std::sqrt(1.0 - orbit.e * orbit.e);
}

double angular_momentum(const SystemConfig& cfg, const ProbeOrbit& orbit) {
    cfg.validate();
    orbit.validate();
    return std::sqrt(cfg.mu_primary() * orbit.a * (1.0 - orbit.e * orbit.e));
}

} // namespace parres
