#pragma once

#include <stdexcept>
#include <string>

namespace parres {

/// Raised when an iterative numerical procedure fails to converge or an
/// integration cannot continue (step underflow, determinant drift, ...).
class NumericsError : public std::runtime_error {
public:
    explicit NumericsError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a trajectory enters the collision region around either mass.
class CollisionError : public NumericsError {
public:
    explicit CollisionError(const std::string& what) : NumericsError(what) {}
};

/// Unit convention tag. The normalized convention fixes grav = 1, M = 1,
/// r = 1 and forces omega_s to the two-body mean motion sqrt(grav*(M+m)/r^3);
/// the physical convention takes user-supplied values.
enum class UnitSystem { normalized, physical };

/// Fixed parameters of the system: a primary of mass M, a perturber of mass m
/// on a circular orbit of radius r about the primary, revolving at rate
/// omega_s. All downstream modules take the configuration by value.
struct SystemConfig {
    double grav = 1.0;             // gravitational constant
    double primary_mass = 1.0;     // M
    double perturber_mass = 1e-3;  // m
    double perturber_radius = 1.0; // r
    double omega_s = 0.0;          // perturber mean motion
    UnitSystem units = UnitSystem::normalized;

    /// Normalized convention with a given perturber-to-primary mass ratio.
    static SystemConfig normalized(double mass_ratio);

    /// Physical convention; omega_s defaults to the two-body mean motion.
    static SystemConfig physical(double grav, double primary_mass,
                                 double perturber_mass, double perturber_radius,
                                 double omega_s = 0.0);

    double mu_primary() const { return grav * primary_mass; }
    double mass_ratio() const { return perturber_mass / primary_mass; }
    double two_body_rate() const;

    /// Throws std::invalid_argument on a violated invariant.
    void validate() const;
};

/// Osculating elements of the massless probe: semimajor axis a, eccentricity
/// e in [0,1), and initial phase (radians) of the probe-perturber angle.
struct ProbeOrbit {
    double a = 1.0;
    double e = 0.0;
    double phase = 0.0;

    void validate() const;
};

/// Legendre polynomial P_p(x) by the Bonnet three-term recurrence.
/// Requires p >= 0 and |x| <= 1.
double legendre_p(int p, double x);

/// Distance between two points at radii R and r separated by angle S.
double mutual_distance(double R, double r, double S);

/// Legendre-series perturbing potential for an inner probe (R < r), truncated
/// at pmax:  -grav*M/R - (grav*m/r) * sum_{p=2..pmax} (R/r)^p P_p(cos S).
/// The p = 0,1 terms are absent; the p = 1 term of the direct expansion is
/// cancelled by the indirect term in the primary-centered frame.
double perturbing_potential(const SystemConfig& cfg, double R, double S, int pmax);

/// Truncation bound of the series tail: (grav*m/r) * y^(pmax+1)/(1-y).
double perturbing_potential_bound(const SystemConfig& cfg, double R, int pmax);

/// Phase-averaged orbital radius a*sqrt(1-e^2).
double mean_radius(const ProbeOrbit& orbit);

/// Specific angular momentum sqrt(grav*M*a*(1-e^2)) of the osculating orbit.
double angular_momentum(const SystemConfig& cfg, const ProbeOrbit& orbit);

} // namespace parres
