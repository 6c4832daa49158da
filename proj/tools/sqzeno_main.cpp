#include "sqzeno/presets.hpp"
#include "sqzeno/run.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace sqzeno;

struct Options {
    CLI::App* cmd = nullptr;
    std::string config_path;
    std::string scenario_name;
    std::string format = "csv";
    std::string out_path;
    std::uint64_t seed = 0;
    double dt = 0.0;
    long steps = 0;

    bool given(const std::string& name) const { return cmd->count(name) > 0; }
};

void add_common_options(CLI::App* cmd, Options& o) {
    o.cmd = cmd;
    cmd->add_option("--config", o.config_path,
                    "scenario config file (built-in preset used when omitted)");
    cmd->add_option("--scenario", o.scenario_name,
                    "scenario name when the config defines several");
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", o.out_path, "write the table to a file instead of stdout");
    cmd->add_option("--seed", o.seed, "override the Monte Carlo seed");
    cmd->add_option("--dt", o.dt, "override the grid step")->check(CLI::PositiveNumber);
    cmd->add_option("--steps", o.steps, "override the number of grid steps")
        ->check(CLI::PositiveNumber);
}

std::vector<Scenario> load_scenarios(const Options& o, const std::string& fallback_preset) {
    if (o.given("--config")) return load_config_file(o.config_path);
    return parse_config_string(std::string(presets::get(fallback_preset)),
                               "preset:" + fallback_preset);
}

Scenario pick_scenario(std::vector<Scenario> scenarios, const Options& o) {
    if (o.given("--scenario")) {
        for (Scenario& s : scenarios) {
            if (s.name == o.scenario_name) return std::move(s);
        }
        throw ConfigError("config defines no scenario named '" + o.scenario_name + "'", 0,
                          "scenario");
    }
    if (scenarios.size() != 1) {
        throw ConfigError("config defines " + std::to_string(scenarios.size()) +
                          " scenarios; choose one with --scenario");
    }
    return std::move(scenarios.front());
}

void apply_overrides(Scenario& s, const Options& o) {
    if (o.given("--dt")) {
        s.grid.dt = o.dt;
        if (s.mc) s.mc->dt = o.dt;
        if (s.scheme.kind == SchemeKind::RepeatedProjective) s.scheme.meas_dt = o.dt;
    }
    if (o.given("--steps")) {
        s.grid.n_steps = static_cast<int>(o.steps);
        if (s.mc) s.mc->n_steps = static_cast<int>(o.steps);
    }
    if (o.given("--seed")) {
        if (s.mc) {
            s.mc->seed = o.seed;
        } else {
            std::cerr << "note: --seed ignored, scheme " << scheme_name(s.scheme.kind)
                      << " draws no samples\n";
        }
    }
    validate_scenario(s);
}

Scenario resolve_scenario(const Options& o, const std::string& fallback_preset) {
    Scenario s = pick_scenario(load_scenarios(o, fallback_preset), o);
    apply_overrides(s, o);
    return s;
}

void emit(const ResultTable& table, const Options& o) {
    const OutputFormat format = o.format == "json" ? OutputFormat::Json : OutputFormat::Csv;
    if (o.given("--out")) {
        std::ofstream out(o.out_path);
        if (!out) throw ConfigError("cannot open output file: " + o.out_path, 0, "out");
        write_table(out, table, format);
    } else {
        write_table(std::cout, table, format);
    }
}

void run_evolve(const Options& o) {
    const Scenario s = resolve_scenario(o, "");
    const ScenarioResult result = run_scenario(s);
    if (result.mc) {
        char line[160];
        std::snprintf(line, sizeof line,
                      "stochastic p_plus_cm at t=%.12g: %.12g +/- %.3g (n_traj=%d, seed=%llu)",
                      s.grid.t_end(), result.mc->p_hat, result.mc->std_err, result.mc->n_traj,
                      static_cast<unsigned long long>(s.mc->seed));
        std::cerr << line << "\n";
    }
    emit(result.table, o);
}

void run_figure(int index, const Options& o) {
    const Scenario s = resolve_scenario(o, "fig" + std::to_string(index));
    switch (index) {
    case 1:
        emit(scan_phase(s), o);
        return;
    case 2:
    case 3:
        emit(run_scenario(s).table, o);
        return;
    default:
        emit(run_zeno_compare(s.params, s.b0, s.grid, {s.params.phi}), o);
        return;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-level atom in a broadband squeezed vacuum bath: free, "
                 "projectively monitored and indirectly monitored dynamics"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "sqzeno 0.1.0");

    Options evolve_opts, table1_opts, zeno_opts, figure_opts, scan_opts;
    int figure_index = 0;

    CLI::App* evolve = app.add_subcommand("evolve", "run one scenario from a config file");
    add_common_options(evolve, evolve_opts);
    evolve->get_option("--config")->required();
    evolve->callback([&] { run_evolve(evolve_opts); });

    CLI::App* table1 = app.add_subcommand(
        "table1", "analytic versus fitted decay rates at the distinguished phases");
    add_common_options(table1, table1_opts);
    table1->callback([&] {
        const Scenario s = resolve_scenario(table1_opts, "table1");
        emit(run_table1(s.params, s.b0, s.grid), table1_opts);
    });

    CLI::App* zeno = app.add_subcommand(
        "zeno-compare", "free versus monitored decay at phi = 0, phi_Z and phi_AZ");
    add_common_options(zeno, zeno_opts);
    zeno->callback([&] {
        const Scenario s = resolve_scenario(zeno_opts, "fig5");
        emit(run_zeno_compare(s.params, s.b0, s.grid), zeno_opts);
    });

    CLI::App* figure = app.add_subcommand("figure", "run a built-in preset 1..6");
    figure->add_option("index", figure_index, "preset index")
        ->required()
        ->check(CLI::Range(1, 6));
    add_common_options(figure, figure_opts);
    figure->callback([&] { run_figure(figure_index, figure_opts); });

    CLI::App* scan = app.add_subcommand("scan-phase",
                                        "free evolution swept over a grid of phases");
    add_common_options(scan, scan_opts);
    scan->callback([&] { emit(scan_phase(resolve_scenario(scan_opts, "fig1")), scan_opts); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what();
        if (e.line() > 0) std::cerr << " [line " << e.line() << "]";
        if (!e.field().empty()) std::cerr << " [key " << e.field() << "]";
        std::cerr << "\n";
        return 2;
    } catch (const InvariantViolation& e) {
        std::cerr << "numeric invariant violation: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
