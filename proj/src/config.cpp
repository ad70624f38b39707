#include "parres/config.hpp"

#include "parres/floquet.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace parres {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& value, int line, const std::string& key) {
    char* end = nullptr;
    const double v = std::strtod(value.c_str(), &end);
    if (end == value.c_str() || *end != '\0' || !std::isfinite(v))
        throw ConfigError("line " + std::to_string(line) + ": value for '" + key +
                          "' is not a finite number: " + value);
    return v;
}

int parse_int(const std::string& value, int line, const std::string& key) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc{} || ptr != value.data() + value.size())
        throw ConfigError("line " + std::to_string(line) + ": value for '" + key +
                          "' is not an integer: " + value);
    return v;
}

bool parse_bool(const std::string& value, int line, const std::string& key) {
    if (value == "true" || value == "1") return true;
    if (value == "false" || value == "0") return false;
    throw ConfigError("line " + std::to_string(line) + ": value for '" + key +
                      "' must be true or false: " + value);
}

std::string fmt(double v) {
    // shortest representation that parses back to the same double
    char buf[40];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc{}) return "nan";
    return std::string(buf, ptr);
}

void check(bool ok, const std::string& msg) {
    if (!ok) throw ConfigError("config error: " + msg);
}

} // namespace

SystemConfig RunConfig::system() const {
    if (normalized) {
        SystemConfig sc = SystemConfig::normalized(perturber_mass);
        return sc;
    }
    return SystemConfig::physical(gamma, primary_mass, perturber_mass, perturber_radius,
                                  omega_s.value_or(0.0));
}

ProbeOrbit RunConfig::orbit() const {
    ProbeOrbit orb;
    orb.e = e;
    orb.phase = phi;
    if (a)
        orb.a = *a;
    else
        orb.a = ratio_to_semimajor_axis(system(), ratio.value_or(3.0));
    orb.validate();
    return orb;
}

HillOptions RunConfig::hill_options() const { return {pmax, quad_n, c_e}; }

RunConfig parse_config(const std::string& text) {
    RunConfig cfg;
    bool saw_a = false, saw_ratio = false, saw_gamma = false, saw_M = false, saw_r = false,
         saw_omega_s = false, saw_normalized = false;
    // record physical-mode fields seen before the [system] normalized flag
    std::string section;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = raw;
        if (const auto pos = s.find('#'); pos != std::string::npos) s.erase(pos);
        s = trim(s);
        if (s.empty()) continue;
        if (s.front() == '[') {
            if (s.back() != ']')
                throw ConfigError("line " + std::to_string(line) + ": malformed section header");
            section = trim(s.substr(1, s.size() - 2));
            if (section != "system" && section != "orbit" && section != "numeric" &&
                section != "scan" && section != "output")
                throw ConfigError("line " + std::to_string(line) + ": unknown section [" +
                                  section + "]");
            continue;
        }
        const auto eq = s.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(line) + ": expected 'key = value'");
        const std::string key = trim(s.substr(0, eq));
        const std::string value = trim(s.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError("line " + std::to_string(line) + ": expected 'key = value'");

        auto unknown = [&]() -> ConfigError {
            return ConfigError("line " + std::to_string(line) + ": unknown key '" + key +
                               "' in section [" + section + "]");
        };

        if (section == "system") {
            if (key == "normalized") {
                cfg.normalized = parse_bool(value, line, key);
                saw_normalized = true;
            } else if (key == "gamma") {
                cfg.gamma = parse_double(value, line, key);
                saw_gamma = true;
            } else if (key == "M") {
                cfg.primary_mass = parse_double(value, line, key);
                saw_M = true;
            } else if (key == "m") {
                cfg.perturber_mass = parse_double(value, line, key);
            } else if (key == "r") {
                cfg.perturber_radius = parse_double(value, line, key);
                saw_r = true;
            } else if (key == "omega_s") {
                cfg.omega_s = parse_double(value, line, key);
                saw_omega_s = true;
            } else {
                throw unknown();
            }
        } else if (section == "orbit") {
            if (key == "a") {
                cfg.a = parse_double(value, line, key);
                saw_a = true;
            } else if (key == "ratio") {
                cfg.ratio = parse_double(value, line, key);
                saw_ratio = true;
            } else if (key == "e") {
                cfg.e = parse_double(value, line, key);
            } else if (key == "phi") {
                cfg.phi = parse_double(value, line, key);
            } else {
                throw unknown();
            }
        } else if (section == "numeric") {
            if (key == "pmax") cfg.pmax = parse_int(value, line, key);
            else if (key == "quad_n") cfg.quad_n = parse_int(value, line, key);
            else if (key == "c_e") cfg.c_e = parse_double(value, line, key);
            else if (key == "alpha") cfg.alpha = parse_double(value, line, key);
            else if (key == "eq23_c1") cfg.eq23_c1 = parse_double(value, line, key);
            else if (key == "eq23_c2") cfg.eq23_c2 = parse_double(value, line, key);
            else if (key == "floquet_tol") cfg.floquet_tol = parse_double(value, line, key);
            else if (key == "rtbp_tol") cfg.rtbp_tol = parse_double(value, line, key);
            else throw unknown();
        } else if (section == "scan") {
            if (key == "ratio_min") cfg.ratio_min = parse_double(value, line, key);
            else if (key == "ratio_max") cfg.ratio_max = parse_double(value, line, key);
            else if (key == "ratio_points") cfg.ratio_points = parse_int(value, line, key);
            else if (key == "e_min") cfg.e_min = parse_double(value, line, key);
            else if (key == "e_max") cfg.e_max = parse_double(value, line, key);
            else if (key == "e_points") cfg.e_points = parse_int(value, line, key);
            else if (key == "n") cfg.n = parse_int(value, line, key);
            else if (key == "b_ref") cfg.b_ref = parse_double(value, line, key);
            else if (key == "n_min") cfg.n_min = parse_int(value, line, key);
            else if (key == "n_max") cfg.n_max = parse_int(value, line, key);
            else if (key == "t_end_periods") cfg.t_end_periods = parse_double(value, line, key);
            else if (key == "samples") cfg.samples = parse_int(value, line, key);
            else throw unknown();
        } else if (section == "output") {
            if (key == "out") cfg.out = value;
            else throw unknown();
        } else {
            throw ConfigError("line " + std::to_string(line) + ": key '" + key +
                              "' outside any section");
        }
    }

    if (cfg.normalized && (saw_gamma || saw_M || saw_r || saw_omega_s))
        throw ConfigError("config error: gamma, M, r, omega_s are fixed by normalized = true");
    (void)saw_normalized;
    if (saw_a && saw_ratio)
        throw ConfigError("config error: give exactly one of 'a' and 'ratio', not both");

    check(cfg.perturber_mass >= 0.0, "m = " + fmt(cfg.perturber_mass) + " out of range [0, M)");
    check(cfg.e >= 0.0 && cfg.e < 1.0, "e = " + fmt(cfg.e) + " out of range [0, 1)");
    check(cfg.pmax >= 2, "pmax = " + std::to_string(cfg.pmax) + " must be >= 2");
    check(cfg.quad_n >= 4, "quad_n = " + std::to_string(cfg.quad_n) + " must be >= 4");
    check(cfg.floquet_tol > 0.0, "floquet_tol must be > 0");
    check(cfg.rtbp_tol > 0.0, "rtbp_tol must be > 0");
    check(cfg.ratio_points >= 2, "ratio_points must be >= 2");
    check(cfg.e_points >= 2, "e_points must be >= 2");
    check(cfg.e_min >= 0.0 && cfg.e_max <= 0.9 && cfg.e_min < cfg.e_max,
          "e grid must satisfy 0 <= e_min < e_max <= 0.9");
    check(cfg.ratio_min > 1.0 && cfg.ratio_min < cfg.ratio_max,
          "ratio grid must satisfy 1 < ratio_min < ratio_max");
    check(cfg.n >= 3, "n = " + std::to_string(cfg.n) + " must be >= 3");
    check(cfg.n_min >= 3 && cfg.n_min <= cfg.n_max, "n range must satisfy 3 <= n_min <= n_max");
    check(cfg.b_ref > 0.0, "b_ref must be > 0");
    check(cfg.t_end_periods > 0.0, "t_end_periods must be > 0");
    check(cfg.samples >= 1, "samples must be >= 1");
    if (cfg.a) check(*cfg.a > 0.0, "a = " + fmt(*cfg.a) + " must be > 0");
    if (cfg.ratio) check(*cfg.ratio > 1.0, "ratio = " + fmt(*cfg.ratio) + " must be > 1");
    if (cfg.omega_s) check(*cfg.omega_s > 0.0, "omega_s must be > 0");
    if (!cfg.normalized) {
        check(cfg.gamma > 0.0, "gamma must be > 0");
        check(cfg.primary_mass > 0.0, "M must be > 0");
        check(cfg.perturber_radius > 0.0, "r must be > 0");
    }
    check(cfg.perturber_mass < cfg.primary_mass, "m must be < M");
    return cfg;
}

std::string serialize_config(const RunConfig& c) {
    std::ostringstream out;
    out << "[system]\n";
    out << "normalized = " << (c.normalized ? "true" : "false") << "\n";
    if (!c.normalized) {
        out << "gamma = " << fmt(c.gamma) << "\n";
        out << "M = " << fmt(c.primary_mass) << "\n";
        out << "r = " << fmt(c.perturber_radius) << "\n";
        if (c.omega_s) out << "omega_s = " << fmt(*c.omega_s) << "\n";
    }
    out << "m = " << fmt(c.perturber_mass) << "\n";
    out << "[orbit]\n";
    if (c.a)
        out << "a = " << fmt(*c.a) << "\n";
    else if (c.ratio)
        out << "ratio = " << fmt(*c.ratio) << "\n";
    out << "e = " << fmt(c.e) << "\n";
    out << "phi = " << fmt(c.phi) << "\n";
    out << "[numeric]\n";
    out << "pmax = " << c.pmax << "\n";
    out << "quad_n = " << c.quad_n << "\n";
    out << "c_e = " << fmt(c.c_e) << "\n";
    out << "alpha = " << fmt(c.alpha) << "\n";
    out << "eq23_c1 = " << fmt(c.eq23_c1) << "\n";
    out << "eq23_c2 = " << fmt(c.eq23_c2) << "\n";
    out << "floquet_tol = " << fmt(c.floquet_tol) << "\n";
    out << "rtbp_tol = " << fmt(c.rtbp_tol) << "\n";
    out << "[scan]\n";
    out << "ratio_min = " << fmt(c.ratio_min) << "\n";
    out << "ratio_max = " << fmt(c.ratio_max) << "\n";
    out << "ratio_points = " << c.ratio_points << "\n";
    out << "e_min = " << fmt(c.e_min) << "\n";
    out << "e_max = " << fmt(c.e_max) << "\n";
    out << "e_points = " << c.e_points << "\n";
    out << "n = " << c.n << "\n";
    out << "b_ref = " << fmt(c.b_ref) << "\n";
    out << "n_min = " << c.n_min << "\n";
    out << "n_max = " << c.n_max << "\n";
    out << "t_end_periods = " << fmt(c.t_end_periods) << "\n";
    out << "samples = " << c.samples << "\n";
    out << "[output]\n";
    out << "out = " << c.out << "\n";
    return out.str();
}

std::uint64_t config_hash(const RunConfig& cfg) {
    const std::string s = serialize_config(cfg);
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h;
}

} // namespace parres
