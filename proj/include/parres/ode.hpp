#pragma once

#include "parres/kernel.hpp"

#include <array>
#include <cmath>
#include <cstddef>

// Embedded Runge-Kutta pairs on small fixed-size systems. Two steppers are
// provided: Dormand-Prince 5(4) for periodic variational problems and the
// 8(5,3) pair for long direct integrations where energy-like invariants must
// hold near machine precision.

namespace parres::ode {

template <std::size_t N>
using State = std::array<double, N>;

namespace detail {

template <std::size_t N>
inline double error_norm(const State<N>& err, const State<N>& y0, const State<N>& y1,
                         double rtol, double atol) {
    double sum = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
        const double sc = atol + rtol * std::max(std::abs(y0[i]), std::abs(y1[i]));
        const double q = err[i] / sc;
        sum += q * q;
    }
    return std::sqrt(sum / static_cast<double>(N));
}

} // namespace detail

/// One adaptive Dormand-Prince 5(4) attempt. On acceptance y and t advance
/// and h carries the next step suggestion; on rejection only h shrinks.
template <std::size_t N, class Rhs>
bool dopri5_try_step(Rhs&& f, State<N>& y, double& t, double& h, double rtol, double atol) {
    static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                            a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                            a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                            b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                            e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

    State<N> k1, k2, k3, k4, k5, k6, k7, yt, y1, err;
    f(t, y, k1);
    for (std::size_t i = 0; i < N; ++i) yt[i] = y[i] + h * a21 * k1[i];
    f(t + c2 * h, yt, k2);
    for (std::size_t i = 0; i < N; ++i) yt[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
    f(t + c3 * h, yt, k3);
    for (std::size_t i = 0; i < N; ++i)
        yt[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    f(t + c4 * h, yt, k4);
    for (std::size_t i = 0; i < N; ++i)
        yt[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    f(t + c5 * h, yt, k5);
    for (std::size_t i = 0; i < N; ++i)
        yt[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
    f(t + h, yt, k6);
    for (std::size_t i = 0; i < N; ++i)
        y1[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
    f(t + h, y1, k7);
    for (std::size_t i = 0; i < N; ++i)
        err[i] = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);

    const double en = detail::error_norm(err, y, y1, rtol, atol);
    const double fac = en > 0.0 ? 0.9 * std::pow(en, -0.2) : 5.0;
    const double grow = std::min(5.0, std::max(0.2, fac));
    if (en <= 1.0) {
        t += h;
        y = y1;
        h *= grow;
        return true;
    }
    h *= std::min(1.0, grow);
    return false;
}

namespace detail {

template <class TryStep, std::size_t N, class Rhs, class Obs>
void drive(TryStep&& attempt, Rhs&& f, State<N>& y, double t0, double t1, double rtol,
           double atol, double h0_frac, Obs&& obs, const char* name) {
    const double dir = t1 >= t0 ? 1.0 : -1.0;
    const double span = std::abs(t1 - t0);
    if (span == 0.0) return;
    double t = t0;
    double h = dir * span * h0_frac;
    const double hmin = span * 1e-15 + 1e-300;
    long guard = 0;
    while ((t1 - t) * dir > 0.0) {
        if (++guard > 200000000L) throw NumericsError(std::string(name) + ": step budget exhausted");
        if (std::abs(h) < hmin) throw NumericsError(std::string(name) + ": step size underflow");
        if ((t + h - t1) * dir > 0.0) h = t1 - t;
        if (attempt(f, y, t, h, rtol, atol)) {
            if ((t1 - t) * dir <= 0.0) t = t1;
            obs(t, y);
        }
    }
}

} // namespace detail

/// Integrate dy/dt = f(t,y) from t0 to t1 (either direction) with the 5(4)
/// pair; obs(t, y) is called after every accepted step including the last.
template <std::size_t N, class Rhs, class Obs>
void dopri5_integrate(Rhs&& f, State<N>& y, double t0, double t1, double rtol, double atol,
                      Obs&& obs) {
    detail::drive([](auto&& g, State<N>& s, double& t, double& h, double rt, double at) {
        return dopri5_try_step(g, s, t, h, rt, at);
    }, f, y, t0, t1, rtol, atol, 1e-3, obs, "dopri5");
}

template <std::size_t N, class Rhs>
void dopri5_integrate(Rhs&& f, State<N>& y, double t0, double t1, double rtol, double atol) {
    dopri5_integrate(f, y, t0, t1, rtol, atol, [](double, const State<N>&) {});
}

/// Classical fixed-step RK4; deterministic fallback when an exact step count
/// per period is wanted.
template <std::size_t N, class Rhs>
void rk4_integrate(Rhs&& f, State<N>& y, double t0, double t1, long steps) {
    const double h = (t1 - t0) / static_cast<double>(steps);
    State<N> k1, k2, k3, k4, yt;
    double t = t0;
    for (long s = 0; s < steps; ++s) {
        f(t, y, k1);
        for (std::size_t i = 0; i < N; ++i) yt[i] = y[i] + 0.5 * h * k1[i];
        f(t + 0.5 * h, yt, k2);
        for (std::size_t i = 0; i < N; ++i) yt[i] = y[i] + 0.5 * h * k2[i];
        f(t + 0.5 * h, yt, k3);
        for (std::size_t i = 0; i < N; ++i) yt[i] = y[i] + h * k3[i];
        f(t + h, yt, k4);
        for (std::size_t i = 0; i < N; ++i)
            y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        t = t0 + h * static_cast<double>(s + 1);
    }
}

// Hairer's 8(5,3) pair: 12 stages with a composite fifth/third order error
// estimate, coefficients as published for DOP853.
template <std::size_t N, class Rhs>
bool dop853_try_step(Rhs&& f, State<N>& y, double& t, double& h, double rtol, double atol) {
    constexpr double c2 = 0.05260015195876773187856;
    constexpr double c3 = 0.07890022793815159781784;
    constexpr double c4 = 0.11835034190722739672676;
    constexpr double c5 = 0.28164965809277260327324;
    constexpr double c6 = 0.33333333333333333333333;
    constexpr double c7 = 0.25;
    constexpr double c8 = 0.30769230769230769230769;
    constexpr double c9 = 0.65128205128205128205128;
    constexpr double c10 = 0.6;
    constexpr double c11 = 0.85714285714285714285714;
    constexpr double a21 = 0.05260015195876773187856;
    constexpr double a31 = 0.01972505698453789945446;
    constexpr double a32 = 0.05917517095361369836338;
    constexpr double a41 = 0.02958758547680684918169;
    constexpr double a43 = 0.08876275643042054754507;
    constexpr double a51 = 0.24136513415926668550237;
    constexpr double a53 = -0.88454947932828608534486;
    constexpr double a54 = 0.92483400326179200311574;
    constexpr double a61 = 0.03703703703703703703704;
    constexpr double a64 = 0.17082860872947387127960;
    constexpr double a65 = 0.12546768756682242501669;
    constexpr double a71 = 0.037109375;
    constexpr double a74 = 0.17025221101954403931498;
    constexpr double a75 = 0.06021653898045596068502;
    constexpr double a76 = -0.017578125;
    constexpr double a81 = 0.03709200011850479271088;
    constexpr double a84 = 0.17038392571223999381021;
    constexpr double a85 = 0.10726203044637328465181;
    constexpr double a86 = -0.01531943774862440175279;
    constexpr double a87 = 0.00827378916381402288758;
    constexpr double a91 = 0.62411095871607571711443;
    constexpr double a94 = -3.36089262944694129406857;
    constexpr double a95 = -0.86821934684172600681819;
    constexpr double a96 = 27.5920996994467083049416;
    constexpr double a97 = 20.1540675504778934086187;
    constexpr double a98 = -43.4898841810699588477366;
    constexpr double a101 = 0.47766253643826436589043;
    constexpr double a104 = -2.48811461997166764192642;
    constexpr double a105 = -0.59029082683684299637145;
    constexpr double a106 = 21.2300514481811942347289;
    constexpr double a107 = 15.2792336328824235832597;
    constexpr double a108 = -33.2882109689848629194453;
    constexpr double a109 = -0.02033120170850862613582;
    constexpr double a111 = -0.93714243008598732571704;
    constexpr double a114 = 5.18637242884406370830024;
    constexpr double a115 = 1.09143734899672957818500;
    constexpr double a116 = -8.14978701074692612513997;
    constexpr double a117 = -18.5200656599969598641566;
    constexpr double a118 = 22.7394870993505042818970;
    constexpr double a119 = 2.49360555267965238987089;
    constexpr double a1110 = -3.04676447189821950038237;
    constexpr double a121 = 2.27331014751653820792360;
    constexpr double a124 = -10.5344954667372501984067;
    constexpr double a125 = -2.00087205822486249909676;
    constexpr double a126 = -17.9589318631187989172766;
    constexpr double a127 = 27.9488845294199600508500;
    constexpr double a128 = -2.85899827713502369474066;
    constexpr double a129 = -8.87285693353062954433549;
    constexpr double a1210 = 12.3605671757943030647266;
    constexpr double a1211 = 0.64339274601576353035597;
    constexpr double b1 = 0.05429373411656876223805;
    constexpr double b6 = 4.45031289275240888144114;
    constexpr double b7 = 1.89151789931450038304282;
    constexpr double b8 = -5.80120396001058478146721;
    constexpr double b9 = 0.31116436695781989440892;
    constexpr double b10 = -0.15216094966251607855618;
    constexpr double b11 = 0.20136540080403034837478;
    constexpr double b12 = 0.04471061572777259051769;
    constexpr double bhh1 = 0.24409448818897637795276;
    constexpr double bhh2 = 0.73384668828161185734136;
    constexpr double bhh3 = 0.02205882352941176470588;
    constexpr double er1 = 0.01312004499419488073250;
    constexpr double er6 = -1.22515644637620444072057;
    constexpr double er7 = -0.49575894965725019152141;
    constexpr double er8 = 1.66437718245498653696153;
    constexpr double er9 = -0.35032884874997368168865;
    constexpr double er10 = 0.33417911871301747902973;
    constexpr double er11 = 0.08192320648511571246571;
    constexpr double er12 = -0.02235530786388629525884;

    State<N> k1, k2, k3, k4, k5, k6, k7, k8, k9, k10, k11, k12, yt, y1;
    f(t, y, k1);
    for (std::size_t i = 0; i < N; ++i) yt[i] = y[i] + h * a21 * k1[i];
    f(t + c2 * h, yt, k2);
    for (std::size_t i = 0; i < N; ++i) yt[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
    f(t + c3 * h, yt, k3);
    for (std::size_t i = 0; i < N; ++i) yt[i] = y[i] + h * (a41 * k1[i] + a43 * k3[i]);
    f(t + c4 * h, yt, k4);
    for (std::size_t i = 0; i < N; ++i)
        yt[i] = y[i] + h * (a51 * k1[i] + a53 * k3[i] + a54 * k4[i]);
    f(t + c5 * h, yt, k5);
    for (std::size_t i = 0; i < N; ++i)
        yt[i] = y[i] + h * (a61 * k1[i] + a64 * k4[i] + a65 * k5[i]);
    f(t + c6 * h, yt, k6);
    for (std::size_t i = 0; i < N; ++i)
        yt[i] = y[i] + h * (a71 * k1[i] + a74 * k4[i] + a75 * k5[i] + a76 * k6[i]);
    f(t + c7 * h, yt, k7);
    for (std::size_t i = 0; i < N; ++i)
        yt[i] = y[i] + h * (a81 * k1[i] + a84 * k4[i] + a85 * k5[i] + a86 * k6[i] + a87 * k7[i]);
    f(t + c8 * h, yt, k8);
    for (std::size_t i = 0; i < N; ++i)
        yt[i] = y[i] + h * (a91 * k1[i] + a94 * k4[i] + a95 * k5[i] + a96 * k6[i] +
                            a97 * k7[i] + a98 * k8[i]);
    f(t + c9 * h, yt, k9);
    for (std::size_t i = 0; i < N; ++i)
        yt[i] = y[i] + h * (a101 * k1[i] + a104 * k4[i] + a105 * k5[i] + a106 * k6[i] +
                            a107 * k7[i] + a108 * k8[i] + a109 * k9[i]);
    f(t + c10 * h, yt, k10);
    for (std::size_t i = 0; i < N; ++i)
        yt[i] = y[i] + h * (a111 * k1[i] + a114 * k4[i] + a115 * k5[i] + a116 * k6[i] +
                            a117 * k7[i] + a118 * k8[i] + a119 * k9[i] + a1110 * k10[i]);
    f(t + c11 * h, yt, k11);
    for (std::size_t i = 0; i < N; ++i)
        yt[i] = y[i] + h * (a121 * k1[i] + a124 * k4[i] + a125 * k5[i] + a126 * k6[i] +
                            a127 * k7[i] + a128 * k8[i] + a129 * k9[i] + a1210 * k10[i] +
                            a1211 * k11[i]);
    f(t + h, yt, k12);

    State<N> ksum;
    for (std::size_t i = 0; i < N; ++i) {
        ksum[i] = b1 * k1[i] + b6 * k6[i] + b7 * k7[i] + b8 * k8[i] + b9 * k9[i] +
                  b10 * k10[i] + b11 * k11[i] + b12 * k12[i];
        y1[i] = y[i] + h * ksum[i];
    }

    double err3 = 0.0, err5 = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
        const double sc = atol + rtol * std::max(std::abs(y[i]), std::abs(y1[i]));
        const double e3 = (ksum[i] - bhh1 * k1[i] - bhh2 * k9[i] - bhh3 * k12[i]) / sc;
        const double e5 = (er1 * k1[i] + er6 * k6[i] + er7 * k7[i] + er8 * k8[i] +
                           er9 * k9[i] + er10 * k10[i] + er11 * k11[i] + er12 * k12[i]) / sc;
        err3 += e3 * e3;
        err5 += e5 * e5;
    }
    double den = err5 + 0.01 * err3;
    if (den <= 0.0) den = 1.0;
    const double err = std::abs(h) * err5 * std::sqrt(1.0 / (static_cast<double>(N) * den));

    const double fac = err > 0.0 ? 0.9 * std::pow(err, -1.0 / 8.0) : 6.0;
    const double grow = std::min(6.0, std::max(1.0 / 3.0, fac));
    if (err <= 1.0) {
        t += h;
        y = y1;
        h *= grow;
        return true;
    }
    h *= std::min(1.0, grow);
    return false;
}

template <std::size_t N, class Rhs, class Obs>
void dop853_integrate(Rhs&& f, State<N>& y, double t0, double t1, double rtol, double atol,
                      Obs&& obs) {
    detail::drive([](auto&& g, State<N>& s, double& t, double& h, double rt, double at) {
        return dop853_try_step(g, s, t, h, rt, at);
    }, f, y, t0, t1, rtol, atol, 1e-4, obs, "dop853");
}

template <std::size_t N, class Rhs>
void dop853_integrate(Rhs&& f, State<N>& y, double t0, double t1, double rtol, double atol) {
    dop853_integrate(f, y, t0, t1, rtol, atol, [](double, const State<N>&) {});
}

} // namespace parres::ode
