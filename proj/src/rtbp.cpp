#include "parres/rtbp.hpp"

#include "parres/ode.hpp"

#include <cmath>

namespace parres {

namespace {

struct PolarRhs {
    const SystemConfig& cfg;
    const RtbpOptions& opts;

    void operator()(double t, const ode::State<4>& s, ode::State<4>& ds) const {
        const double R = s[0], lambda = s[1], vR = s[2], L = s[3];
        const double r = cfg.perturber_radius;
        const double S = lambda - cfg.omega_s * t;
        const double cS = std::cos(S), sS = std::sin(S);
        const double d2 = R * R + r * r - 2.0 * R * r * cS;
        const double delta = std::sqrt(d2);
        const double floor_r = opts.collision_factor * r;
        if (R < floor_r || delta < floor_r)
            throw CollisionError("rtbp: collision region reached (R or Delta below threshold)");
        const double d3 = d2 * delta;
        const double gm = cfg.grav * cfg.perturber_mass;

        double aR = -cfg.mu_primary() / (R * R) + gm * (r * cS - R) / d3;
        double torque = -gm * R * r * sS / d3;
        if (opts.include_indirect) {
            aR -= gm * cS / (r * r);
            torque += gm * R * sS / (r * r);
        }
        ds[0] = vR;
        ds[1] = L / (R * R);
        ds[2] = L * L / (R * R * R) + aR;
        ds[3] = torque;
    }
};

ode::State<4> pack(const TrajectoryState& s) { return {s.R, s.lambda, s.vR, s.L}; }

TrajectoryState unpack(const ode::State<4>& y, double t) {
    return {y[0], y[1], y[2], y[3], t};
}

} // namespace

std::array<double, 4> rtbp_rhs(const SystemConfig& cfg, const TrajectoryState& state,
                               const RtbpOptions& opts) {
    cfg.validate();
    ode::State<4> y = pack(state), dy{};
    PolarRhs{cfg, opts}(state.t, y, dy);
    return {dy[0], dy[1], dy[2], dy[3]};
}

TrajectoryState pericenter_start(const SystemConfig& cfg, const ProbeOrbit& orbit) {
    cfg.validate();
    orbit.validate();
    TrajectoryState s;
    s.R = orbit.a * (1.0 - orbit.e);
    s.lambda = orbit.phase;
    s.vR = 0.0;
    s.L = angular_momentum(cfg, orbit);
    s.t = 0.0;
    return s;
}

std::pair<double, double> osculating_elements(const SystemConfig& cfg, double R, double vR,
                                              double L) {
    const double mu = cfg.mu_primary();
    const double energy = 0.5 * (vR * vR + L * L / (R * R)) - mu / R;
    if (!(energy < 0.0))
        throw NumericsError("osculating_elements: orbit is unbound (nonnegative energy)");
    const double a = -mu / (2.0 * energy);
    const double e2 = 1.0 - L * L / (mu * a);
    return {a, std::sqrt(std::max(e2, 0.0))};
}

double jacobi_constant(const SystemConfig& cfg, const TrajectoryState& state) {
    const double r = cfg.perturber_radius;
    const double theta = cfg.omega_s * state.t;
    const double beta = cfg.perturber_mass / (cfg.primary_mass + cfg.perturber_mass);

    // inertial primary-centered cartesian state
    const double cl = std::cos(state.lambda), sl = std::sin(state.lambda);
    const double x = state.R * cl, y = state.R * sl;
    const double vt = state.L / state.R;
    const double vx = state.vR * cl - vt * sl;
    const double vy = state.vR * sl + vt * cl;

    // shift to the barycenter; the primary rides at -beta * r * rhat(theta)
    const double xb = x - beta * r * std::cos(theta);
    const double yb = y - beta * r * std::sin(theta);
    const double vxb = vx + beta * r * cfg.omega_s * std::sin(theta);
    const double vyb = vy - beta * r * cfg.omega_s * std::cos(theta);

    // rotating-frame velocity expressed in inertial axes
    const double ux = vxb + cfg.omega_s * yb;
    const double uy = vyb - cfg.omega_s * xb;

    const double delta = mutual_distance(state.R, r, state.lambda - theta);
    return cfg.omega_s * cfg.omega_s * (xb * xb + yb * yb) +
           2.0 * cfg.mu_primary() / state.R +
           2.0 * cfg.grav * cfg.perturber_mass / delta - (ux * ux + uy * uy);
}

IntegrationReport integrate(const SystemConfig& cfg, const TrajectoryState& start,
                            double t_end, double tol, int n_samples, const RtbpOptions& opts,
                            double jacobi_bound) {
    cfg.validate();
    if (!(t_end > start.t)) throw std::invalid_argument("integrate: t_end must exceed start time");
    if (!(tol > 0.0)) throw std::invalid_argument("integrate: tol must be > 0");
    if (n_samples < 1) throw std::invalid_argument("integrate: n_samples must be >= 1");

    const PolarRhs rhs{cfg, opts};
    ode::State<4> y = pack(start);
    IntegrationReport report;
    report.samples.reserve(n_samples);
    const double c0 = jacobi_constant(cfg, start);

    double t = start.t;
    double h = (t_end - start.t) / 1024.0;
    const double hmin = (t_end - start.t) * 1e-15 + 1e-300;
    for (int k = 1; k <= n_samples; ++k) {
        const double target = start.t + (t_end - start.t) * k / n_samples;
        while (t < target) {
            if (std::abs(h) < hmin) throw NumericsError("integrate: step size underflow");
            bool clipped = false;
            double h_use = h;
            if (t + h_use > target) {
                h_use = target - t;
                clipped = true;
            }
            double h_next = h_use;
            if (ode::dop853_try_step(rhs, y, t, h_next, tol, tol * 1e-2)) {
                if (clipped) t = target;
                if (!clipped) h = h_next;
            } else {
                h = h_next;
            }
        }
        const TrajectoryState st = unpack(y, target);
        const auto [a_osc, e_osc] = osculating_elements(cfg, st.R, st.vR, st.L);
        const double cj = jacobi_constant(cfg, st);
        report.samples.push_back({st.t, st.R, st.lambda, st.vR, st.L, a_osc, e_osc, cj});
        report.jacobi_drift = std::max(report.jacobi_drift, std::abs(cj - c0) / std::abs(c0));
    }
    if (jacobi_bound > 0.0 && report.jacobi_drift > jacobi_bound) report.jacobi_warning = true;
    return report;
}

TrajectoryState integrate_to(const SystemConfig& cfg, const TrajectoryState& start,
                             double t_end, double tol, const RtbpOptions& opts) {
    cfg.validate();
    if (!(tol > 0.0)) throw std::invalid_argument("integrate_to: tol must be > 0");
    const PolarRhs rhs{cfg, opts};
    ode::State<4> y = pack(start);
    ode::dop853_integrate(rhs, y, start.t, t_end, tol, tol * 1e-2);
    return unpack(y, t_end);
}

DivergenceResult divergence(const SystemConfig& cfg, const TrajectoryState& start,
                            double delta0, double horizon, double tol,
                            const RtbpOptions& opts) {
    cfg.validate();
    if (!(delta0 > 0.0) || !(delta0 < 0.1 * start.R))
        throw std::invalid_argument("divergence: delta0 must be > 0 and << R");
    if (!(horizon > 0.0)) throw std::invalid_argument("divergence: horizon must be > 0");

    const PolarRhs base{cfg, opts};
    auto rhs = [&](double t, const ode::State<8>& s, ode::State<8>& ds) {
        ode::State<4> a{s[0], s[1], s[2], s[3]}, da{};
        ode::State<4> b{s[4], s[5], s[6], s[7]}, db{};
        base(t, a, da);
        base(t, b, db);
        for (int i = 0; i < 4; ++i) {
            ds[i] = da[i];
            ds[i + 4] = db[i];
        }
    };

    auto separation = [](const ode::State<8>& s) {
        // cartesian distance between the twin configurations
        const double x1 = s[0] * std::cos(s[1]), y1 = s[0] * std::sin(s[1]);
        const double x2 = s[4] * std::cos(s[5]), y2 = s[4] * std::sin(s[5]);
        return std::hypot(x1 - x2, y1 - y2);
    };

    ode::State<8> s{start.R + delta0, start.lambda, start.vR, start.L,
                    start.R,          start.lambda, start.vR, start.L};
    const double threshold = 1e3 * delta0;
    double log_growth = 0.0;
    int renorms = 0;

    double t = start.t;
    const double t_end = start.t + horizon;
    double h = horizon / 4096.0;
    const double hmin = horizon * 1e-15 + 1e-300;
    while (t < t_end) {
        if (std::abs(h) < hmin) throw NumericsError("divergence: step size underflow");
        double h_use = std::min(h, t_end - t);
        double h_next = h_use;
        const bool clipped = h_use < h;
        if (ode::dop853_try_step(rhs, s, t, h_next, tol, tol * 1e-2)) {
            if (!clipped) h = h_next;
            const double sep = separation(s);
            if (sep > threshold) {
                // pull the displaced copy back to delta0 along the separation
                log_growth += std::log(sep / delta0);
                ++renorms;
                const double f = delta0 / sep;
                for (int i = 0; i < 4; ++i) s[i] = s[i + 4] + f * (s[i] - s[i + 4]);
            }
        } else {
            h = h_next;
        }
    }
    log_growth += std::log(separation(s) / delta0);
    return {log_growth / horizon, renorms, horizon};
}

} // namespace parres
