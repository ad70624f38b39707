#pragma once

#include "parres/kernel.hpp"

#include <vector>

namespace parres {

/// Knobs for building the time-dependent frequency of the variational
/// equation. e4_coeff is the coefficient of e^4 in the eccentricity factor
/// (1 - e4_coeff * e^4); default 3/4.
struct HillOptions {
    int pmax = 16;
    int quad_n = 4096;
    double e4_coeff = 0.75;
};

/// The Hill equation x'' + w2(t) x = f(t) in assembled form:
///   w2(t) = omega0_sq * (1 + sum_p h[p] * cos(p * (drive_freq * t + phase))).
/// b[p] are the dimensionless cosine coefficients of the Legendre sum; the
/// amplitudes satisfy h[p] = (m/M) (Rbar/r)^3 b[p] / (1 - e4_coeff e^4), so
/// omega0_sq * h[p] reconstructs (grav m / r^3) b[p] exactly.
struct HillCoefficients {
    double omega0_sq = 0.0;
    std::vector<double> b;
    std::vector<double> h;
    double drive_freq = 0.0; // synodic rate, probe mean motion minus omega_s
    double e_used = 0.0;

    /// w2 at time t for a given initial phase of the probe-perturber angle.
    double omega_sq(double t, double phase = 0.0) const;

    /// Single-harmonic (Mathieu) coefficients for oracle tests: w2(t) =
    /// omega0_sq * (1 + amplitude * cos(harmonic * drive * t)).
    static HillCoefficients single_harmonic(double omega0_sq, int harmonic,
                                            double amplitude, double drive);

    /// Copy keeping only the constant term and harmonic n.
    HillCoefficients reduced_to(int n) const;
};

/// Forcing term of the variational equation: a constant two-body imbalance
/// plus the harmonic decomposition of the Legendre force series, stored as
/// cosine coefficients over multiples of the synodic angle.
struct ForcingSpec {
    double constant = 0.0;
    std::vector<double> harmonic; // coefficient of cos(p S), p = 0..pmax
    double drive_freq = 0.0;

    double eval(double t, double phase = 0.0) const;
};

/// Pointwise w2(t) from the closed-form second radial derivative, with
/// S = drive * t + phase and Delta the probe-perturber distance:
///   grav M / R0^3 - grav m / Delta^3 * (1 - 3 (R0 - r cos S)^2 / Delta^2).
double omega_sq_exact(const SystemConfig& cfg, double R0, double t, double phase);

/// Lowest order in y = R0/r:
///   grav M / R0^3 + grav m/(2 r^3) + (3/2) grav m / r^3 cos(2 dw t).
double omega_sq_zero_order(const SystemConfig& cfg, double R0, double t);

/// Legendre-series w2 at probe-perturber angle S:
///   (grav M / a^3)(1 - (3/4) e^4)
///     + (grav m / r^3) sum_{p=2..pmax} p(p-1) y^(p-2) P_p(cos S),
/// with y = mean_radius / r.
double omega_sq_series(const SystemConfig& cfg, const ProbeOrbit& orbit, double S, int pmax);

/// Cosine-Fourier coefficients b_p of W(S) = sum_{q=2..pmax} q(q-1) y^(q-2)
/// P_q(cos S), by composite trapezoid on a uniform S grid (exact for this
/// periodic integrand once quad_n exceeds twice the top harmonic). b_0 is the
/// mean; b_p = (1/pi) integral W cos(pS) dS. One grid refinement is checked;
/// disagreement beyond 1e-10 relative raises NumericsError.
std::vector<double> fourier_b(const SystemConfig& cfg, const ProbeOrbit& orbit, int pmax,
                              int quad_n = 4096);

/// Base frequency squared (grav M / a^3)(1 - e4_coeff * e^4).
double base_frequency_sq(const SystemConfig& cfg, const ProbeOrbit& orbit,
                         double e4_coeff = 0.75);

/// Relative amplitudes h_p = (m/M) (Rbar/r)^3 b_p / (1 - e4_coeff e^4).
std::vector<double> hill_amplitudes(const SystemConfig& cfg, const ProbeOrbit& orbit,
                                    const std::vector<double>& b, double e4_coeff = 0.75);

/// Forcing decomposition: constant L0^2/Rbar^3 - grav M / Rbar^2 plus the
/// cosine coefficients of -(grav m / r^2) sum_{p=2..pmax} p y^(p-1) P_p(cos S).
ForcingSpec forcing(const SystemConfig& cfg, const ProbeOrbit& orbit, int pmax,
                    int quad_n = 4096);

/// Assemble coefficients for the orbit. The stored omega0_sq uses the
/// phase-averaged radius, (grav M / Rbar^3)(1 - e4_coeff e^4), which makes
/// omega0_sq * h_p == (grav m / r^3) b_p an identity.
HillCoefficients build_hill_coefficients(const SystemConfig& cfg, const ProbeOrbit& orbit,
                                         const HillOptions& opts = {});

} // namespace parres
