#pragma once

#include "parres/hill.hpp"
#include "parres/kernel.hpp"

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace parres {

/// Mean-motion commensurability p:q belonging to the family n:(n-2), stored
/// reduced (gcd(p,q) = 1) together with the harmonic order n that generates
/// it.
struct Resonance {
    int n = 3; // harmonic order; the family member is n:(n-2)
    int p = 3;
    int q = 1;

    static Resonance from_order(int n);
    std::string label() const; // "p:q"
};

/// One parametric-resonance tongue of order n.
struct InstabilityZone {
    int n = 0;
    double center_ratio = 0.0; // probe-to-perturber mean-motion ratio
    double center_a = 0.0;
    double width_eps1 = 0.0;   // first-order width, frequency units
    double width_eps2 = 0.0;   // second-order width
    double width_a = 0.0;      // converted semimajor-axis width
    double e = 0.0;
};

/// Overlap bookkeeping for adjacent zone centers n and n+1.
struct OverlapReport {
    int n = 0;
    double gap = 0.0;        // distance between the two centers, ratio units
    double width_term = 0.0; // analytic width term at order n
    double margin = 0.0;     // gap - width_term
    bool overlapped = false; // margin <= 0
};

/// Zone-center frequency ratio n / (n - 2(1 - alpha/2) + e4_coeff e^4).
/// With alpha = 0, e = 0 this is n/(n-2): the family 3, 2, 5/3, 3/2, ...
double zone_center(int n, double e, double alpha = 0.0, double e4_coeff = 0.75);

/// Kepler map from a frequency ratio to a semimajor axis, a = r ratio^(-2/3).
double center_semimajor_axis(const SystemConfig& cfg, double ratio);

/// First- and second-order zone widths
///   eps1 = omega0 n h_n / (2(n-2)),  eps2 = omega0 n h_n^2 / (8(n-2)).
std::pair<double, double> zone_width(double omega0, int n, double h_n);

/// Frequency width converted to semimajor axis by da/a = (2/3) dw/w.
double width_semimajor_axis(double eps1, double omega0, double a);

/// Overlap condition between centers n and n+1 at eccentricity e:
///   gap        = n/(n - (2 - c1 e^4)) - (n+1)/(n - (1 - c1 e^4))
///   width_term = n (m/M) b_n / (2(n-2)(1 - c2 e^4))
/// with default coefficients c1 = 3/4, c2 = 3/8.
OverlapReport overlap_margin(const SystemConfig& cfg, int n, double e, double b_n,
                             double c1 = 0.75, double c2 = 0.375);

/// Smallest order at which adjacent zones overlap at e = 0, closed form
///   ceil[(mb + sqrt((mb)^2 + 16 M m b)) / (2 m b)].
/// Requires m > 0 and b > 0; overlap is unreachable otherwise.
int critical_order(const SystemConfig& cfg, double b);

struct EccScanRow {
    double e = 0.0;
    double width = 0.0;  // overlap width term
    double gap = 0.0;    // center-to-center distance
    double margin = 0.0; // gap - width
};

/// Width/gap/margin rows over an eccentricity grid for fixed order n and
/// fixed reference amplitude b_n (the e dependence is the e^4 factor in each
/// term, so rows match overlap_margin exactly).
std::vector<EccScanRow> eccentricity_scan(const SystemConfig& cfg, int n,
                                          std::span<const double> e_grid, double b_n,
                                          double c1 = 0.75, double c2 = 0.375);

/// Full analytic catalog entry for order n: center, widths, and the
/// semimajor-axis conversion, with amplitudes from the Hill machinery at the
/// zone-center orbit.
InstabilityZone build_zone(const SystemConfig& cfg, int n, double e,
                           const HillOptions& opts = {}, double alpha = 0.0);

} // namespace parres
