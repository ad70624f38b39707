#pragma once

#include "parres/hill.hpp"
#include "parres/kernel.hpp"

#include <array>
#include <functional>
#include <span>
#include <vector>

namespace parres {

/// State of the variational equation: normal displacement from the reference
/// orbit and its rate.
struct VariationalState {
    double x = 0.0;
    double v = 0.0;
    double t = 0.0;
};

/// Advance a variational state under x'' + w2(t) x = 0 to time t_end with
/// the adaptive 5(4) pair.
VariationalState propagate_variation(const HillCoefficients& coeffs, VariationalState state,
                                     double t_end, double tol);

/// One-period state-transition summary of x'' + w2(t) x = 0. The two
/// multipliers are reciprocal (unit determinant, no damping), so instability
/// is |trace| > 2.
struct MonodromyResult {
    double trace = 0.0;
    std::array<double, 2> multiplier_mags{1.0, 1.0};
    bool unstable = false;
    double period_used = 0.0;
    double det = 1.0;
};

/// Propagate the two fundamental solutions over one drive period with the
/// adaptive 5(4) pair at tolerance tol. Throws NumericsError on step
/// underflow or determinant drift beyond 1e-6.
MonodromyResult monodromy(const HillCoefficients& coeffs, double period, double tol);

/// Fixed-step variant (classical RK4, steps per period), for determinism and
/// cross-checks against the adaptive path.
MonodromyResult monodromy_fixed(const HillCoefficients& coeffs, double period, long steps);

/// Measured edges of one instability tongue in the scan coordinate.
struct TongueEdges {
    double lo = 0.0;
    double hi = 0.0;
    double width() const { return hi - lo; }
};

using CoeffBuilder = std::function<HillCoefficients(double ratio)>;

/// Locate the order-n tongue inside [window_lo, window_hi] by bisection on
/// |trace(ratio)| = 2 to 1e-8 relative. The window endpoints must be stable
/// and the window must contain an unstable stretch; otherwise NumericsError.
TongueEdges tongue_boundaries(const CoeffBuilder& at_ratio, int n, double window_lo,
                              double window_hi, double tol);

struct ScanPoint {
    double ratio = 0.0;
    double trace = 0.0;
    bool unstable = false;
    bool failed = false; // monodromy error at this grid point
};

/// Mean-motion-consistent map from a frequency ratio to the probe semimajor
/// axis: sqrt(grav M / a^3) = ratio * omega_s.
double ratio_to_semimajor_axis(const SystemConfig& cfg, double ratio);

/// Hill coefficients for the orbit implied by a frequency ratio, with e and
/// phase taken from the template orbit.
HillCoefficients coefficients_at_ratio(const SystemConfig& cfg, const ProbeOrbit& tmpl,
                                       double ratio, const HillOptions& opts = {});

/// Classify every grid ratio by one-period monodromy of the full Hill
/// equation. Per-point failures are marked and the scan continues.
std::vector<ScanPoint> stability_scan(const SystemConfig& cfg, const ProbeOrbit& tmpl,
                                      std::span<const double> ratios,
                                      const HillOptions& opts = {}, double tol = 1e-10);

} // namespace parres
