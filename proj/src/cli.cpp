#include "parres/cli.hpp"

#include "parres/floquet.hpp"
#include "parres/rtbp.hpp"
#include "parres/zones.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace parres::cli {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Reference values for the three tabulated zones: order, label, the
// frequency ratio that reproduces the tabulated distance, then the reference
// distance / b / width columns. The third row carries the 3:2 label but its
// tabulated distance corresponds to the 5:3 ratio, which is what drives it.
struct Table1Row {
    int k;
    const char* label;
    double ratio;
    double a_ref;
    double b_ref;
    double width_ref;
};
constexpr Table1Row kTable1[] = {
    {3, "3:1", 3.0, 2.501120, 0.077800, 0.0120},
    {4, "2:1", 2.0, 3.277395, 0.107630, 0.0114},
    {6, "3:2", 5.0 / 3.0, 3.700976, 0.132076, 0.0108},
};
constexpr double kTable1Radius = 5.2025;

std::string g(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void provenance(const RunConfig& cfg, const std::string& cmd, std::ostream& out) {
    char hash[20];
    std::snprintf(hash, sizeof hash, "%016llx",
                  static_cast<unsigned long long>(config_hash(cfg)));
    out << "# parres " << PARRES_VERSION << " cmd=" << cmd << " config=" << hash << "\n";
}

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = lo + (hi - lo) * i / (n - 1);
    return v;
}

} // namespace

void cmd_table1(const RunConfig& cfg, std::ostream& out) {
    // The tabulated zones live at the standard perturber distance; only the
    // mass ratio is taken from the configuration.
    SystemConfig sys = SystemConfig::physical(1.0, 1.0, cfg.perturber_mass, kTable1Radius);
    HillOptions opts = cfg.hill_options();

    provenance(cfg, "table1", out);
    out << "order_k,resonance,center_a,b_computed,b_paper,width_a,width_paper\n";
    for (const Table1Row& row : kTable1) {
        const double a = center_semimajor_axis(sys, row.ratio);
        HillOptions local = opts;
        if (local.pmax < row.k + 2) local.pmax = row.k + 2;
        const ProbeOrbit orbit{a, cfg.e, 0.0};
        const HillCoefficients coeffs = build_hill_coefficients(sys, orbit, local);
        const double omega0 = std::sqrt(base_frequency_sq(sys, orbit, opts.e4_coeff));
        const double b_n = coeffs.b[row.k];
        const double h_n = std::abs(coeffs.h[row.k]);
        const auto [eps1, eps2] = zone_width(omega0, row.k, h_n);
        (void)eps2;
        const double width_a = width_semimajor_axis(eps1, omega0, a);
        out << row.k << "," << row.label << "," << g(a) << "," << g(b_n) << ","
            << g(row.b_ref) << "," << g(width_a) << "," << g(row.width_ref) << "\n";
    }
}

void cmd_fig1(const RunConfig& cfg, std::ostream& out) {
    const SystemConfig sys = cfg.system();
    const std::vector<double> grid = linspace(cfg.e_min, cfg.e_max, cfg.e_points);
    const auto rows = eccentricity_scan(sys, cfg.n, grid, cfg.b_ref, cfg.eq23_c1, cfg.eq23_c2);
    provenance(cfg, "fig1", out);
    out << "e,width,gap,margin\n";
    for (const EccScanRow& r : rows)
        out << g(r.e) << "," << g(r.width) << "," << g(r.gap) << "," << g(r.margin) << "\n";
}

namespace {

void scan_zones(const RunConfig& cfg, std::ostream& out) {
    const SystemConfig sys = cfg.system();
    out << "n,resonance,center_ratio,center_a,eps1,eps2,width_a,error\n";
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
        try {
            const InstabilityZone z = build_zone(sys, n, cfg.e, cfg.hill_options(), cfg.alpha);
            out << n << "," << Resonance::from_order(n).label() << "," << g(z.center_ratio)
                << "," << g(z.center_a) << "," << g(z.width_eps1) << "," << g(z.width_eps2)
                << "," << g(z.width_a) << ",\n";
        } catch (const std::exception& ex) {
            out << n << ",,,,,,," << ex.what() << "\n";
        }
    }
}

void scan_floquet(const RunConfig& cfg, std::ostream& out) {
    const SystemConfig sys = cfg.system();
    ProbeOrbit tmpl;
    tmpl.e = cfg.e;
    tmpl.phase = cfg.phi;
    const std::vector<double> grid = linspace(cfg.ratio_min, cfg.ratio_max, cfg.ratio_points);
    const auto points = stability_scan(sys, tmpl, grid, cfg.hill_options(), cfg.floquet_tol);
    out << "ratio,trace,unstable,error\n";
    for (const ScanPoint& p : points) {
        if (p.failed)
            out << g(p.ratio) << ",,,monodromy failed\n";
        else
            out << g(p.ratio) << "," << g(p.trace) << "," << (p.unstable ? 1 : 0) << ",\n";
    }
}

void scan_rtbp(const RunConfig& cfg, std::ostream& out) {
    const SystemConfig sys = cfg.system();
    const ProbeOrbit orbit = cfg.orbit();
    const TrajectoryState start = pericenter_start(sys, orbit);
    const double t_end = cfg.t_end_periods * 2.0 * kPi / sys.omega_s;
    const IntegrationReport rep =
        integrate(sys, start, t_end, cfg.rtbp_tol, cfg.samples);
    out << "t,R,lambda,vR,L,a_osc,e_osc,C_J\n";
    for (const TrajectorySample& s : rep.samples)
        out << g(s.t) << "," << g(s.R) << "," << g(s.lambda) << "," << g(s.vR) << ","
            << g(s.L) << "," << g(s.a_osc) << "," << g(s.e_osc) << "," << g(s.jacobi) << "\n";
}

void scan_overlap(const RunConfig& cfg, std::ostream& out) {
    const SystemConfig sys = cfg.system();
    out << "n,gap,width_term,margin,overlapped,error\n";
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
        try {
            const OverlapReport rep =
                overlap_margin(sys, n, cfg.e, cfg.b_ref, cfg.eq23_c1, cfg.eq23_c2);
            out << n << "," << g(rep.gap) << "," << g(rep.width_term) << "," << g(rep.margin)
                << "," << (rep.overlapped ? 1 : 0) << ",\n";
        } catch (const std::exception& ex) {
            out << n << ",,,,," << ex.what() << "\n";
        }
    }
}

} // namespace

void cmd_scan(const RunConfig& cfg, const std::string& kind, std::ostream& out) {
    provenance(cfg, "scan:" + kind, out);
    // full effective configuration, flattened for reproducibility
    std::string flat = serialize_config(cfg);
    for (char& ch : flat)
        if (ch == '\n') ch = ' ';
    while (!flat.empty() && flat.back() == ' ') flat.pop_back();
    out << "# config: " << flat << "\n";
    if (kind == "zones")
        scan_zones(cfg, out);
    else if (kind == "floquet")
        scan_floquet(cfg, out);
    else if (kind == "rtbp")
        scan_rtbp(cfg, out);
    else if (kind == "overlap")
        scan_overlap(cfg, out);
    else
        throw ConfigError("unknown scan kind '" + kind + "'");
}

void cmd_coeffs(const RunConfig& cfg, std::ostream& out) {
    const SystemConfig sys = cfg.system();
    const ProbeOrbit orbit = cfg.orbit();
    const HillCoefficients coeffs = build_hill_coefficients(sys, orbit, cfg.hill_options());
    provenance(cfg, "coeffs", out);
    out << "# a=" << g(orbit.a) << " e=" << g(coeffs.e_used)
        << " omega0_sq=" << g(coeffs.omega0_sq) << " drive_freq=" << g(coeffs.drive_freq)
        << "\n";
    out << "p,b_p,h_p\n";
    for (std::size_t p = 0; p < coeffs.b.size(); ++p)
        out << p << "," << g(coeffs.b[p]) << "," << g(coeffs.h[p]) << "\n";
}

void cmd_critical_order(const RunConfig& cfg, std::ostream& out) {
    const SystemConfig sys = cfg.system();
    const int n = critical_order(sys, cfg.b_ref);
    provenance(cfg, "critical-order", out);
    out << "m_over_M,b,n_star\n";
    out << g(sys.mass_ratio()) << "," << g(cfg.b_ref) << "," << n << "\n";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"parametric-resonance zones of the planar circular restricted three-body problem"};
    app.require_subcommand(1);
    app.fallthrough(); // shared flags may follow the subcommand

    std::string config_path, out_path, kind;
    long seed = 0;
    app.add_option("--config", config_path, "configuration file (key = value sections)");
    app.add_option("--out", out_path, "output path (overrides [output] out; default stdout)");
    app.add_option("--seed", seed, "reserved; deterministic paths ignore it");

    CLI::App* table1 = app.add_subcommand("table1", "reference zone table");
    CLI::App* fig1 = app.add_subcommand("fig1", "width/gap vs eccentricity");
    CLI::App* scan = app.add_subcommand("scan", "grid scans");
    scan->add_option("--kind", kind, "zones | floquet | rtbp | overlap")->required();
    CLI::App* coeffs = app.add_subcommand("coeffs", "dump Hill coefficients");
    CLI::App* crit = app.add_subcommand("critical-order", "smallest overlapping order");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitConfig;
    }

    try {
        std::string text;
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) throw ConfigError("cannot open config file: " + config_path);
            std::ostringstream ss;
            ss << in.rdbuf();
            text = ss.str();
        }
        RunConfig cfg = parse_config(text);
        if (!out_path.empty()) cfg.out = out_path;

        std::ostringstream body;
        if (table1->parsed())
            cmd_table1(cfg, body);
        else if (fig1->parsed())
            cmd_fig1(cfg, body);
        else if (scan->parsed())
            cmd_scan(cfg, kind, body);
        else if (coeffs->parsed())
            cmd_coeffs(cfg, body);
        else if (crit->parsed())
            cmd_critical_order(cfg, body);

        if (cfg.out == "-" || cfg.out.empty()) {
            out << body.str();
        } else {
            std::ofstream f(cfg.out, std::ios::binary);
            if (!f) throw ConfigError("cannot open output file: " + cfg.out);
            f << body.str();
        }
        return kExitOk;
    } catch (const ConfigError& ex) {
        err << "error: " << ex.what() << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument& ex) {
        err << "error: " << ex.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return kExitNumeric;
    }
}

} // namespace parres::cli
