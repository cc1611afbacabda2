// chenlorenz command-line tool.
//
// Exit codes: 0 success/decided, 1 usage or parse error, 2 out of scope,
// 3 numerical divergence.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "chenlorenz/chenlorenz.hpp"
#include "chenlorenz/serialize.hpp"

namespace cl = chenlorenz;
using cl::Rational;
using nlohmann::json;

namespace {

Rational parse_or_die(const std::string& s, const char* what) {
    auto r = cl::parse_rational(s);
    if (!r) {
        std::cerr << "error: cannot parse " << what << " '" << s
                  << "' as a rational number (expected p, p/q or a decimal)\n";
        std::exit(1);
    }
    return *r;
}

cl::SystemKind parse_system(const std::string& s) {
    if (s == "lorenz") return cl::SystemKind::Lorenz;
    if (s == "chen") return cl::SystemKind::Chen;
    std::cerr << "error: unknown system '" << s << "' (expected lorenz or chen)\n";
    std::exit(1);
}

struct OutputSink {
    std::string path;

    // Writes to stdout when no --output path was given.
    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream os(path, std::ios::binary);
        if (!os) {
            std::cerr << "error: cannot open output path '" << path << "'\n";
            std::exit(1);
        }
        os << text;
    }
};

std::string dump(const json& j) { return j.dump(2) + "\n"; }

struct ScanAxis {
    std::string min, max, step;
};

int run_scan(const ScanAxis& ax_a, const ScanAxis& ax_b, const ScanAxis& ax_c,
             const OutputSink& sink, bool exact_values, bool classify, int threads) {
    struct Axis {
        Rational min, max, step;
        std::vector<Rational> values;
    };
    auto build_axis = [](const ScanAxis& ax, const char* name) {
        Axis a;
        a.min = parse_or_die(ax.min, name);
        a.max = parse_or_die(ax.max, name);
        a.step = parse_or_die(ax.step, name);
        if (a.step <= 0) {
            std::cerr << "error: step must be positive for axis " << name << "\n";
            std::exit(1);
        }
        if (a.min > a.max) {
            std::cerr << "error: min > max for axis " << name << "\n";
            std::exit(1);
        }
        for (Rational v = a.min; v <= a.max; v += a.step) a.values.push_back(v);
        return a;
    };
    Axis aa = build_axis(ax_a, "a"), ab = build_axis(ax_b, "b"), ac = build_axis(ax_c, "c");

    struct Point {
        Rational a, b, c;
    };
    std::vector<Point> grid;
    for (const Rational& a : aa.values)
        for (const Rational& b : ab.values)
            for (const Rational& c : ac.values) grid.push_back({a, b, c});

    std::vector<std::string> rows(grid.size());
    auto worker = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const Point& p = grid[i];
            Rational m0 = cl::obstruction_m0(cl::ChenParams{p.a, p.b, p.c});
            std::ostringstream os;
            os << cl::to_string(p.a) << ',' << cl::to_string(p.b) << ','
               << cl::to_string(p.c) << ',' << cl::sign(m0) << ',';
            if (classify) {
                os << (p.b == 0 ? 1 : 0) << ',' << (p.a == 2 * p.c ? 1 : 0) << ','
                   << (p.c == -1 ? 1 : 0);
            } else {
                os << ",,";
            }
            os << ',' << (p.b * (2 * p.c - p.a) > 0 ? 1 : 0);
            if (exact_values) os << ',' << cl::to_string(m0);
            os << '\n';
            rows[i] = os.str();
        }
    };

    if (threads <= 1 || grid.size() < 2) {
        worker(0, grid.size());
    } else {
        std::size_t n = std::min<std::size_t>(threads, grid.size());
        std::vector<std::thread> pool;
        std::size_t chunk = (grid.size() + n - 1) / n;
        for (std::size_t t = 0; t < n; ++t) {
            std::size_t b = t * chunk, e = std::min(grid.size(), b + chunk);
            if (b < e) pool.emplace_back(worker, b, e);
        }
        for (std::thread& t : pool) t.join();
    }

    std::string out = "a,b,c,m0_sign,on_b0,on_a2c,on_c1,has3eq";
    if (exact_values) out += ",m0";
    out += '\n';
    for (const std::string& r : rows) out += r;
    sink.write(out);
    return 0;
}

cl::EqLabel parse_label(const std::string& s) {
    if (s.size() == 2 && (s[0] == 'P' || s[0] == 'Q') && s[1] >= '1' && s[1] <= '3')
        return static_cast<cl::EqLabel>(s[1] - '0');
    std::cerr << "error: unknown equilibrium label '" << s
              << "' (expected P1..P3 or Q1..Q3)\n";
    std::exit(1);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact non-equivalence certificates for Chen vs. Lorenz systems, "
                 "with numerical corroboration"};
    app.require_subcommand(1);

    std::string out_path;
    app.add_option("--output", out_path, "Write output to PATH instead of stdout");

    std::vector<std::string> nums;

    auto* cmd_decide = app.add_subcommand(
        "decide", "Decide smooth-equivalence candidacy for a Chen parameter triple");
    cmd_decide->add_option("params", nums, "a' b' c'")->expected(3)->required();

    auto* cmd_m0 = app.add_subcommand("m0", "Evaluate the resultant obstruction M0");
    cmd_m0->add_option("params", nums, "a' b' c'")->expected(3)->required();

    std::string system_name, label_name_s = "";
    auto* cmd_eq = app.add_subcommand("equilibria", "List exact equilibria");
    cmd_eq->add_option("system", system_name, "lorenz | chen")->required();
    cmd_eq->add_option("params", nums, "a b c")->expected(3)->required();

    auto* cmd_cp =
        app.add_subcommand("charpoly", "Characteristic cubic at a labeled equilibrium");
    cmd_cp->add_option("system", system_name, "lorenz | chen")->required();
    cmd_cp->add_option("params", nums, "a b c")->expected(3)->required();
    cmd_cp->add_option("--at", label_name_s, "Equilibrium label (default: origin)");

    auto* cmd_vf = app.add_subcommand(
        "verify-factorization", "Factor the symbolic M0 and check the published quintic");

    ScanAxis ax_a, ax_b, ax_c;
    bool exact_values = false, no_classify = false;
    int threads = 1;
    auto* cmd_scan = app.add_subcommand("scan", "Exact M0 scan over a rational grid");
    cmd_scan->add_option("--a", ax_a.min, "a' min")->required();
    cmd_scan->add_option("--a-max", ax_a.max, "a' max")->required();
    cmd_scan->add_option("--a-step", ax_a.step, "a' step")->required();
    cmd_scan->add_option("--b", ax_b.min, "b' min")->required();
    cmd_scan->add_option("--b-max", ax_b.max, "b' max")->required();
    cmd_scan->add_option("--b-step", ax_b.step, "b' step")->required();
    cmd_scan->add_option("--c", ax_c.min, "c' min")->required();
    cmd_scan->add_option("--c-max", ax_c.max, "c' max")->required();
    cmd_scan->add_option("--c-step", ax_c.step, "c' step")->required();
    cmd_scan->add_flag("--exact-values", exact_values, "Append exact M0 column");
    cmd_scan->add_flag("--no-surface-classification", no_classify,
                       "Skip the on_b0/on_a2c/on_c1 columns");
    cmd_scan->add_option("--threads", threads, "Worker threads (output order unchanged)");

    double sim_t = 100.0, sim_dt = 1e-3;
    std::vector<double> x0{1.0, 1.0, 1.0};
    auto* cmd_sim = app.add_subcommand("simulate", "Fixed-step RK4 trajectory (CSV)");
    cmd_sim->add_option("system", system_name, "lorenz | chen")->required();
    cmd_sim->add_option("params", nums, "a b c")->expected(3)->required();
    cmd_sim->add_option("--t", sim_t, "Integration time (default 100)");
    cmd_sim->add_option("--dt", sim_dt, "Step size (default 0.001)");
    cmd_sim->add_option("--x0", x0, "Initial state x y z (default 1 1 1)")->expected(3);

    double ly_t = 2000.0, ly_dt = 1e-3, ly_transient = 100.0, ly_renorm = 0.5;
    auto* cmd_ly =
        app.add_subcommand("lyapunov", "Largest Lyapunov exponent estimate (heuristic)");
    cmd_ly->add_option("system", system_name, "lorenz | chen")->required();
    cmd_ly->add_option("params", nums, "a b c")->expected(3)->required();
    cmd_ly->add_option("--t", ly_t, "Integration time (default 2000)");
    cmd_ly->add_option("--dt", ly_dt, "Step size (default 0.001)");
    cmd_ly->add_option("--transient", ly_transient, "Transient discard (default 100)");
    cmd_ly->add_option("--renorm", ly_renorm, "Renormalization interval (default 0.5)");
    cmd_ly->add_option("--x0", x0, "Initial state x y z (default 1 1 1)")->expected(3);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    OutputSink sink{out_path};

    if (*cmd_decide) {
        cl::ChenParams p{parse_or_die(nums[0], "a'"), parse_or_die(nums[1], "b'"),
                         parse_or_die(nums[2], "c'")};
        cl::Certificate cert = cl::decide(p);
        sink.write(dump(cl::certificate_json(cert)));
        return cert.verdict == cl::Verdict::OutOfScope ? 2 : 0;
    }

    if (*cmd_m0) {
        cl::ChenParams p{parse_or_die(nums[0], "a'"), parse_or_die(nums[1], "b'"),
                         parse_or_die(nums[2], "c'")};
        Rational m0 = cl::obstruction_m0(p);
        sink.write(dump(json{{"m0", cl::to_string(m0)}, {"m0_approx", cl::to_double(m0)}}));
        return 0;
    }

    if (*cmd_eq) {
        cl::SystemKind kind = parse_system(system_name);
        Rational a = parse_or_die(nums[0], "a"), b = parse_or_die(nums[1], "b"),
                 c = parse_or_die(nums[2], "c");
        sink.write(dump(cl::equilibria_json(cl::equilibria(kind, a, b, c))));
        return 0;
    }

    if (*cmd_cp) {
        cl::SystemKind kind = parse_system(system_name);
        Rational a = parse_or_die(nums[0], "a"), b = parse_or_die(nums[1], "b"),
                 c = parse_or_die(nums[2], "c");
        cl::EqLabel label =
            label_name_s.empty() ? cl::EqLabel::E1 : parse_label(label_name_s);
        try {
            sink.write(dump(cl::charpoly_json(cl::charpoly_at(kind, a, b, c, label))));
        } catch (const std::domain_error& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 1;
        }
        return 0;
    }

    if (*cmd_vf) {
        sink.write(dump(cl::factorization_json(cl::verify_factorization())));
        return 0;
    }

    if (*cmd_scan)
        return run_scan(ax_a, ax_b, ax_c, sink, exact_values, !no_classify, threads);

    if (*cmd_sim) {
        cl::SystemKind kind = parse_system(system_name);
        Rational a = parse_or_die(nums[0], "a"), b = parse_or_die(nums[1], "b"),
                 c = parse_or_die(nums[2], "c");
        cl::IntegratorConfig cfg;
        cfg.dt = sim_dt;
        cfg.t_end = sim_t;
        cfg.initial_state = {x0[0], x0[1], x0[2]};
        try {
            cfg.validate();
        } catch (const std::invalid_argument& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 1;
        }
        cl::Trajectory traj = cl::integrate(kind, a, b, c, cfg);
        std::ostringstream os;
        cl::write_trajectory_csv(os, traj);
        sink.write(os.str());
        if (traj.diverged) {
            std::cerr << "error: trajectory diverged; partial output written\n";
            return 3;
        }
        return 0;
    }

    if (*cmd_ly) {
        cl::SystemKind kind = parse_system(system_name);
        Rational a = parse_or_die(nums[0], "a"), b = parse_or_die(nums[1], "b"),
                 c = parse_or_die(nums[2], "c");
        cl::IntegratorConfig cfg;
        cfg.dt = ly_dt;
        cfg.t_end = ly_t;
        cfg.initial_state = {x0[0], x0[1], x0[2]};
        try {
            cfg.validate();
            cl::LyapunovEstimate est =
                cl::largest_lyapunov(kind, a, b, c, cfg, ly_transient, ly_renorm);
            sink.write(dump(cl::lyapunov_json(est, kind, cfg)));
            return est.diverged ? 3 : 0;
        } catch (const std::invalid_argument& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 1;
        }
    }

    return 1;
}
