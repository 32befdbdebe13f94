#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "dynfrac/checks.hpp"
#include "dynfrac/config.hpp"
#include "dynfrac/errors.hpp"
#include "dynfrac/growth.hpp"
#include "dynfrac/plane.hpp"
#include "dynfrac/weights.hpp"

#ifndef DYNFRAC_VERSION
#define DYNFRAC_VERSION "0.0.0"
#endif

namespace fs = std::filesystem;
using namespace dynfrac;
using nlohmann::ordered_json;

namespace {

struct Args {
    std::string config, out = ".", axis, range;
    std::vector<std::string> overrides;
    int collocation = 0, circle_nodes = 0, inv_terms = 0;
};

RunConfig build_config(const Args& a) {
    RunConfig cfg;
    if (!a.config.empty()) load_config(a.config, cfg);
    for (const auto& kv : a.overrides) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw InputError("--set expects key=value");
        cfg.set(kv.substr(0, eq), kv.substr(eq + 1));
    }
    if (!a.axis.empty()) cfg.set("axis", a.axis);
    if (!a.range.empty()) cfg.set("range", a.range);
    if (a.collocation) cfg.set("N", std::to_string(a.collocation));
    if (a.circle_nodes) cfg.set("M", std::to_string(a.circle_nodes));
    if (a.inv_terms) cfg.set("inv_m", std::to_string(a.inv_terms));
    cfg.validate();
    return cfg;
}

std::ofstream open_out(const fs::path& p) {
    std::ofstream f(p);
    if (!f) throw InputError("cannot write " + p.string());
    return f;
}

void write_manifest(const fs::path& dir, const std::string& command, const RunConfig& cfg,
                    const std::vector<std::string>& files, double wall) {
    ordered_json m;
    m["command"] = command;
    m["version"] = DYNFRAC_VERSION;
    m["config"] = cfg.entries();
    m["knobs"] = {{"N", cfg.integer("N")},
                  {"M", cfg.integer("M")},
                  {"L", cfg.number("L")},
                  {"refine_M", cfg.flag("refine_M")},
                  {"check_doubling", cfg.flag("check_doubling")},
                  {"inv_A", cfg.number("inv_A")},
                  {"inv_m", cfg.integer("inv_m")},
                  {"inv_euler", cfg.integer("inv_euler")},
                  {"threads", cfg.integer("threads")}};
    m["outputs"] = files;
    m["wall_time_s"] = wall;
    auto f = open_out(dir / "manifest.json");
    f << m.dump(2) << '\n';
}

int cmd_material(const RunConfig& cfg) {
    const CrackSetup cs = cfg.setup();
    const ReflectionTiming rt = reflection_timing(cs);
    std::cout << "c_l = " << format_double(cs.mat.c_l) << '\n'
              << "c_s = " << format_double(cs.mat.c_s) << '\n'
              << "c_R = " << format_double(cs.mat.c_R) << '\n'
              << "V = " << format_double(cs.V) << '\n'
              << "R0 = " << format_double(cs.R0()) << '\n'
              << "t_l = " << format_double(rt.t_l) << '\n'
              << "2t_l = " << format_double(2.0 * rt.t_l) << '\n'
              << "theta = " << format_double(rt.theta) << '\n';
    return 0;
}

int cmd_weights(RunConfig cfg, const fs::path& out, bool plane, double& wall) {
    const auto t0 = std::chrono::steady_clock::now();
    CrackSetup base = cfg.setup();
    if (plane) base.delta = INFINITY;
    const std::string axis_text = cfg.get("axis").empty() ? (plane ? "speed" : "time") : cfg.get("axis");
    const SweepAxis axis = parse_axis(axis_text);
    if (plane && axis == SweepAxis::Depth) throw InputError("plane-weights: depth axis needs a finite boundary");
    std::string range = cfg.get("range");
    if (range.empty()) range = axis == SweepAxis::Speed ? "0.05:0.95:0.05" : axis == SweepAxis::Time ? "0.1:4:0.1" : "0.5:20:0.5";
    cfg.set("axis", axis_text);
    cfg.set("range", range);
    if (plane) cfg.set("delta", "inf");
    const auto coords = parse_range(range).values();
    if (axis == SweepAxis::Speed)
        for (double c : coords)
            if (!(c > 0.0 && c < 1.0)) throw InputError("speed axis values must lie in (0, 1)");
    const WeightTable table = sweep(axis, coords, base, cfg.number("t"), cfg.solver(), cfg.inversion(), cfg.threads());
    const std::string name = plane ? "plane_weights.csv" : "halfplane_weights.csv";
    auto f = open_out(out / name);
    write_weight_csv(f, table);
    wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    write_manifest(out, plane ? "plane-weights" : "halfplane-weights", cfg, {name}, wall);
    return 0;
}

int cmd_crack_growth(const RunConfig& cfg, const fs::path& out) {
    const auto t0 = std::chrono::steady_clock::now();
    if (cfg.get("schedule").empty()) throw InputError("crack-growth: schedule is required");
    const CrackSetup cs = cfg.setup();
    StressProfile load;
    if (!cfg.get("stress_file").empty()) load = load_stress_csv(cfg.get("stress_file"));
    load.points = parse_points(cfg.get("points"));
    CrackGrowth g(cs.mat, cs.delta, parse_schedule(cfg.get("schedule")), load, cfg.growth());
    g.run();
    std::vector<std::string> files = {"stages.csv", "sif.csv"};
    {
        auto f = open_out(out / "stages.csv");
        write_stage_csv(f, g.stages());
    }
    {
        auto f = open_out(out / "sif.csv");
        write_sif_csv(f, g.stages());
    }
    for (const auto& st : g.stages()) {
        if (st.radiated.empty()) continue;
        const std::string name = "radiated_" + std::to_string(st.k) + ".csv";
        auto f = open_out(out / name);
        write_radiated_csv(f, st);
        files.push_back(name);
    }
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    write_manifest(out, "crack-growth", cfg, files, wall);
    for (const auto& st : g.stages())
        std::cout << "stage " << st.k << ": V = " << format_double(st.V)
                  << ", roundtrip = " << format_double(st.roundtrip_error)
                  << ", negation residual = " << format_double(st.negation_residual) << '\n';
    return 0;
}

int cmd_validate(const RunConfig& cfg) {
    bool ok = true;
    for (const auto& r : run_checks(cfg)) {
        ok = ok && r.pass;
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << ": " << format_double(r.value)
                  << " (limit " << format_double(r.limit) << ")";
        if (!r.detail.empty()) std::cout << "  " << r.detail;
        std::cout << '\n';
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dynamic crack weight functions near a free boundary"};
    Args a;
    app.add_option("--config", a.config, "key = value configuration file");
    app.add_option("--out", a.out, "output directory");
    app.add_option("--axis", a.axis, "sweep axis: time, speed or depth");
    app.add_option("--range", a.range, "sweep range A:B:STEP");
    app.add_option("--collocation", a.collocation, "collocation points N");
    app.add_option("--circle-nodes", a.circle_nodes, "circle quadrature parameter M");
    app.add_option("--inv-terms", a.inv_terms, "Euler inversion terms m");
    app.add_option("--set", a.overrides, "override a config key (key=value), repeatable")->allow_extra_args(false);
    app.require_subcommand(1);
    const std::pair<const char*, const char*> commands[] = {
        {"material", "print wave speeds and branch-point data"},
        {"plane-weights", "weight functions for the unbounded plane"},
        {"halfplane-weights", "weight functions for a crack below a free surface"},
        {"crack-growth", "multi-stage crack growth under a stress profile"},
        {"validate", "run the built-in numerical checks"},
    };
    for (const auto& [name, help] : commands) app.add_subcommand(name, help)->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    const std::string cmd = app.get_subcommands().front()->get_name();
    try {
        const RunConfig cfg = build_config(a);
        const fs::path out(a.out);
        if (cmd != "material" && cmd != "validate") fs::create_directories(out);
        double wall = 0.0;
        if (cmd == "material") return cmd_material(cfg);
        if (cmd == "plane-weights") return cmd_weights(cfg, out, true, wall);
        if (cmd == "halfplane-weights") return cmd_weights(cfg, out, false, wall);
        if (cmd == "crack-growth") return cmd_crack_growth(cfg, out);
        return cmd_validate(cfg);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 1;
    }
}
