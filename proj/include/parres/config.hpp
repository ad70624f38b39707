#pragma once

#include "parres/hill.hpp"
#include "parres/kernel.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace parres {

/// Raised on malformed or out-of-range configuration input. Messages carry
/// the line number (parse stage) or the offending key (validation stage).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Flat run configuration, read from `key = value` text with one level of
/// bracketed sections and `#` comments. Unknown keys are hard errors.
struct RunConfig {
    // [system]
    bool normalized = true;
    double gamma = 1.0;
    double primary_mass = 1.0;
    double perturber_mass = 1e-3;
    double perturber_radius = 1.0;
    std::optional<double> omega_s; // physical mode only; default two-body

    // [orbit] - exactly one of {a, ratio}
    std::optional<double> a;
    std::optional<double> ratio; // defaults to 3 when neither is given
    double e = 0.0;
    double phi = 0.0;

    // [numeric]
    int pmax = 16;
    int quad_n = 4096;
    double c_e = 0.75;
    double alpha = 0.0;
    double eq23_c1 = 0.75;
    double eq23_c2 = 0.375;
    double floquet_tol = 1e-10;
    double rtbp_tol = 1e-12;

    // [scan]
    double ratio_min = 1.4;
    double ratio_max = 3.2;
    int ratio_points = 181;
    double e_min = 0.0;
    double e_max = 0.5;
    int e_points = 11;
    int n = 13;
    double b_ref = 0.1;
    int n_min = 3;
    int n_max = 40;
    double t_end_periods = 100.0;
    int samples = 256;

    // [output]
    std::string out = "-";

    SystemConfig system() const;
    /// Orbit with a resolved from ratio (mean-motion-consistent map) when a
    /// is not given directly.
    ProbeOrbit orbit() const;
    HillOptions hill_options() const;
};

/// Parse configuration text; defaults fill everything an empty file leaves
/// unset. Throws ConfigError with a line number or key name.
RunConfig parse_config(const std::string& text);

/// Canonical text form; parse_config(serialize_config(c)) reproduces c
/// exactly (doubles are emitted round-trip precise).
std::string serialize_config(const RunConfig& cfg);

/// FNV-1a hash of the canonical form, for output provenance lines.
std::uint64_t config_hash(const RunConfig& cfg);

} // namespace parres
