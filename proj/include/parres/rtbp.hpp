#pragma once

#include "parres/kernel.hpp"

#include <array>
#include <vector>

namespace parres {

/// Polar state of the probe about the primary: radius R, longitude lambda,
/// radial rate vR, and specific angular momentum L = R^2 dlambda/dt.
struct TrajectoryState {
    double R = 1.0;
    double lambda = 0.0;
    double vR = 0.0;
    double L = 1.0;
    double t = 0.0;
};

struct RtbpOptions {
    /// Include the frame (indirect) acceleration of the primary-centered
    /// potential. The literal direct-only variant is kept for fidelity
    /// comparisons.
    bool include_indirect = true;
    /// Abort radius as a fraction of the perturber distance.
    double collision_factor = 1e-9;
};

/// Time derivatives (dR, dlambda, dvR, dL) of the state. Throws
/// CollisionError when R or the mutual distance falls below the collision
/// threshold.
std::array<double, 4> rtbp_rhs(const SystemConfig& cfg, const TrajectoryState& state,
                               const RtbpOptions& opts = {});

/// Initial state at pericenter of the osculating orbit, with the probe
/// placed at longitude orbit.phase (the perturber starts at longitude 0).
TrajectoryState pericenter_start(const SystemConfig& cfg, const ProbeOrbit& orbit);

/// Osculating (a, e) from the polar state with mu = grav * M.
std::pair<double, double> osculating_elements(const SystemConfig& cfg, double R, double vR,
                                              double L);

/// Jacobi constant 2*Omega_rot - v_rot^2 evaluated in the barycentric
/// rotating frame implied by the configuration.
double jacobi_constant(const SystemConfig& cfg, const TrajectoryState& state);

struct TrajectorySample {
    double t = 0.0;
    double R = 0.0;
    double lambda = 0.0;
    double vR = 0.0;
    double L = 0.0;
    double a_osc = 0.0;
    double e_osc = 0.0;
    double jacobi = 0.0;
};

struct IntegrationReport {
    std::vector<TrajectorySample> samples;
    double jacobi_drift = 0.0; // max |C - C0| / |C0| over the samples
    bool jacobi_warning = false;
};

/// Propagate with the adaptive 8(5,3) pair and record n_samples states at
/// uniformly spaced times over (0, t_end]. jacobi_bound > 0 flags (does not
/// abort) relative drift beyond the bound.
IntegrationReport integrate(const SystemConfig& cfg, const TrajectoryState& start,
                            double t_end, double tol, int n_samples,
                            const RtbpOptions& opts = {}, double jacobi_bound = 0.0);

/// Propagate to a single final time; t_end may be smaller than start.t
/// (backward integration).
TrajectoryState integrate_to(const SystemConfig& cfg, const TrajectoryState& start,
                             double t_end, double tol, const RtbpOptions& opts = {});

struct DivergenceResult {
    double ftle = 0.0; // finite-time Lyapunov estimate, 1/time
    int renormalizations = 0;
    double horizon = 0.0;
};

/// Two-trajectory separation with renormalization whenever the separation
/// exceeds 1e3 * delta0; ftle = sum(log growth) / horizon.
DivergenceResult divergence(const SystemConfig& cfg, const TrajectoryState& start,
                            double delta0, double horizon, double tol,
                            const RtbpOptions& opts = {});

} // namespace parres
