#include "sqzeno/run.hpp"

#include "sqzeno/analytic.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <sstream>

namespace sqzeno {

namespace {

double p_plus_of(double rho_x) { return std::clamp(0.5 * (1.0 + rho_x), 0.0, 1.0); }

// One output row assembled from named values; keeps column subsets cheap.
class RowBuilder {
public:
    explicit RowBuilder(const std::vector<std::string>& columns) : columns_(columns) {}

    template <typename Getter>
    std::vector<Cell> build(Getter&& value_of) const {
        std::vector<Cell> row;
        row.reserve(columns_.size());
        for (const std::string& col : columns_) row.push_back(value_of(col));
        return row;
    }

private:
    const std::vector<std::string>& columns_;
};

} // namespace

ScenarioResult run_scenario(const Scenario& s) {
    validate_scenario(s);
    const SqueezedBathParams& p = s.params;
    const TimeGrid& grid = s.grid;

    ScenarioResult result;
    result.table.columns = s.outputs.empty() ? default_columns(s.scheme.kind) : s.outputs;
    const RowBuilder rows(result.table.columns);
    result.table.rows.reserve(static_cast<std::size_t>(grid.n_steps) + 1);

    switch (s.scheme.kind) {
    case SchemeKind::Free:
    case SchemeKind::Indirect: {
        BlochRhs rhs;
        if (s.scheme.kind == SchemeKind::Free) {
            rhs = [&p](const BlochState& b) { return bloch_rhs_free(p, b); };
        } else {
            const double t0c = s.scheme.t0_coupling;
            rhs = [&p, t0c](const BlochState& b) { return bloch_rhs_indirect(p, t0c, b); };
        }
        const Trajectory traj = integrate(rhs, s.b0, grid, s.substeps);
        for (int k = 0; k <= grid.n_steps; ++k) {
            const BlochState& b = traj.states[static_cast<std::size_t>(k)];
            const double t = grid.time_at(k);
            result.table.rows.push_back(rows.build([&](const std::string& col) -> Cell {
                if (col == "t") return t;
                if (col == "tau") return p.gamma * t;
                if (col == "rho_x") return b.x;
                if (col == "rho_y") return b.y;
                if (col == "rho_z") return b.z;
                return p_plus_of(b.x); // p_plus
            }));
        }
        break;
    }
    case SchemeKind::ProjectiveContinuous: {
        for (int k = 0; k <= grid.n_steps; ++k) {
            const double t = grid.time_at(k);
            const double elapsed = k * grid.dt;
            const double monitored_x = measured_solution(p, s.b0.x, elapsed);
            const double p_single = p_plus_single(p, s.b0, elapsed);
            const double p_cm = p_plus_continuous(p, s.b0, elapsed);
            result.table.rows.push_back(rows.build([&](const std::string& col) -> Cell {
                if (col == "t") return t;
                if (col == "tau") return p.gamma * t;
                if (col == "rho_x") return monitored_x;
                if (col == "p_plus") return p_single;
                return p_cm; // p_plus_cm
            }));
        }
        break;
    }
    case SchemeKind::RepeatedProjective: {
        const Trajectory traj = repeated_measurement_evolution(p, s.b0, *s.mc);
        McConfig partial = *s.mc;
        partial.n_traj = 1;
        for (int k = 0; k <= grid.n_steps; ++k) {
            const BlochState& b = traj.states[static_cast<std::size_t>(k)];
            const double t = grid.time_at(k);
            partial.n_steps = k;
            const double p_cm = sequential_survival(p, s.b0, partial);
            result.table.rows.push_back(rows.build([&](const std::string& col) -> Cell {
                if (col == "t") return t;
                if (col == "tau") return p.gamma * t;
                if (col == "rho_x") return b.x;
                return p_cm; // p_plus_cm
            }));
        }
        result.mc = stochastic_survival(p, s.b0, *s.mc);
        break;
    }
    }
    return result;
}

ResultTable run_table1(const SqueezedBathParams& p, const BlochState& b0,
                       const TimeGrid& grid) {
    validate_grid(grid);
    validate_bloch(b0);
    if (b0.x == 0.0 || b0.y == 0.0) {
        throw std::invalid_argument(
            "rate comparison needs nonzero rho_x0 and rho_y0 so both components decay");
    }

    struct Row {
        const char* label;
        double phi;
        bool x_fast; // rho_x decays at the fast rate (else slow)
        bool y_fast;
    };
    const Row cases[] = {
        {"phi=0", 0.0, true, false},
        {"phi=pi", std::numbers::pi, false, true},
        {"phi_Z", critical_phase_zeno(b0), true, true},
        {"phi_AZ", critical_phase_antizeno(b0), false, false},
    };

    ResultTable table;
    table.columns = {"label", "phi", "component", "rate_analytic", "rate_fitted", "rel_err"};
    for (const Row& row : cases) {
        const SqueezedBathParams pr = make_params(p.n_bar, row.phi, p.gamma);
        const DecayRates rates = decay_rates(pr);
        const Trajectory traj = integrate(
            [&pr](const BlochState& b) { return bloch_rhs_free(pr, b); }, b0, grid);
        const struct {
            const char* component;
            Component c;
            bool fast;
        } fits[] = {{"rho_x", Component::x, row.x_fast}, {"rho_y", Component::y, row.y_fast}};
        for (const auto& f : fits) {
            const double analytic = f.fast ? rates.fast : rates.slow;
            const double fitted = fit_decay_rate(traj, f.c);
            const double rel = std::abs(fitted - analytic) / analytic;
            if (!(rel < 1e-4)) {
                std::ostringstream os;
                os << "fitted rate for " << row.label << " " << f.component << " is " << fitted
                   << ", expected " << analytic << " (rel err " << rel << ")";
                throw InvariantViolation(os.str());
            }
            table.rows.push_back({Cell{std::string(row.label)}, Cell{pr.phi},
                                  Cell{std::string(f.component)}, Cell{analytic}, Cell{fitted},
                                  Cell{rel}});
        }
    }
    return table;
}

ResultTable run_zeno_compare(const SqueezedBathParams& p, const BlochState& b0,
                             const TimeGrid& grid, const std::vector<double>& phis) {
    validate_grid(grid);
    validate_bloch(b0);
    if (phis.empty()) throw std::invalid_argument("phase list is empty");

    ResultTable table;
    table.columns = {"phi", "t", "tau", "rho_x_free", "rho_x_monitored", "rho_x_repeated"};
    table.rows.reserve(phis.size() * (static_cast<std::size_t>(grid.n_steps) + 1));
    for (double phi : phis) {
        const SqueezedBathParams pr = make_params(p.n_bar, phi, p.gamma);
        McConfig mc;
        mc.dt = grid.dt;
        mc.n_steps = grid.n_steps;
        const Trajectory repeated = repeated_measurement_evolution(pr, b0, mc);
        for (int k = 0; k <= grid.n_steps; ++k) {
            const double t = grid.time_at(k);
            const double elapsed = k * grid.dt;
            table.rows.push_back({Cell{pr.phi}, Cell{t}, Cell{pr.gamma * t},
                                  Cell{free_solution(pr, b0, elapsed).x},
                                  Cell{measured_solution(pr, b0.x, elapsed)},
                                  Cell{repeated.states[static_cast<std::size_t>(k)].x}});
        }
    }
    return table;
}

ResultTable run_zeno_compare(const SqueezedBathParams& p, const BlochState& b0,
                             const TimeGrid& grid) {
    return run_zeno_compare(p, b0, grid,
                            {0.0, critical_phase_zeno(b0), critical_phase_antizeno(b0)});
}

ResultTable scan_phase(const Scenario& s) {
    validate_scenario(s);
    if (!s.phase_grid) {
        throw ConfigError("scenario '" + s.name + "' defines no phase sweep "
                          "(phi_min, phi_max, phi_points)",
                          0, "phi_min");
    }
    const PhaseGrid& pg = *s.phase_grid;
    const TimeGrid& grid = s.grid;

    ResultTable table;
    table.columns = {"phi", "t", "tau", "rho_x", "rho_y", "rho_z"};
    table.rows.reserve(static_cast<std::size_t>(pg.points) *
                       (static_cast<std::size_t>(grid.n_steps) + 1));
    const double step = (pg.max - pg.min) / (pg.points - 1);
    for (int i = 0; i < pg.points; ++i) {
        const double phi = i == pg.points - 1 ? pg.max : pg.min + i * step;
        const SqueezedBathParams pr = make_params(s.params.n_bar, phi, s.params.gamma);
        for (int k = 0; k <= grid.n_steps; ++k) {
            const double t = grid.time_at(k);
            const BlochState b = free_solution(pr, s.b0, k * grid.dt);
            table.rows.push_back(
                {Cell{phi}, Cell{t}, Cell{pr.gamma * t}, Cell{b.x}, Cell{b.y}, Cell{b.z}});
        }
    }
    return table;
}

namespace {

std::string csv_number(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

} // namespace

void write_table(std::ostream& out, const ResultTable& table, OutputFormat format) {
    if (format == OutputFormat::Csv) {
        for (std::size_t i = 0; i < table.columns.size(); ++i) {
            if (i) out << ',';
            out << table.columns[i];
        }
        out << '\n';
        for (const std::vector<Cell>& row : table.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i) out << ',';
                if (const double* d = std::get_if<double>(&row[i])) {
                    out << csv_number(*d);
                } else {
                    out << std::get<std::string>(row[i]);
                }
            }
            out << '\n';
        }
        return;
    }

    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const std::vector<Cell>& row : table.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (const double* d = std::get_if<double>(&row[i])) {
                obj[table.columns[i]] = *d;
            } else {
                obj[table.columns[i]] = std::get<std::string>(row[i]);
            }
        }
        arr.push_back(std::move(obj));
    }
    out << arr.dump(2) << '\n';
}

} // namespace sqzeno
