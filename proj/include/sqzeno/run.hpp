#pragma once

#include <iosfwd>
#include <variant>

#include "sqzeno/scenario.hpp"

namespace sqzeno {

using Cell = std::variant<double, std::string>;

struct ResultTable {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

struct ScenarioResult {
    ResultTable table;
    // Stochastic cross-check of the survival product at the grid horizon;
    // filled for RepeatedProjective scenarios only.
    std::optional<SurvivalEstimate> mc;
};

// Evolve one scenario on its grid and tabulate the scheme's columns (or the
// scenario's `outputs` subset).  Free and Indirect integrate the Bloch flow;
// ProjectiveContinuous tabulates the monitored closed forms;
// RepeatedProjective alternates evolution and collapse and accumulates the
// all-plus survival product.
ScenarioResult run_scenario(const Scenario& s);

// Decay-rate comparison at the four distinguished phases 0, pi, phi_Z(b0),
// phi_AZ(b0): for each phase and each transverse component, the analytic
// rate next to the rate fitted from an integrated trajectory.  Columns
// label, phi, component, rate_analytic, rate_fitted, rel_err (8 rows).
// Throws InvariantViolation when any pair disagrees beyond 1e-4 relative.
ResultTable run_table1(const SqueezedBathParams& p, const BlochState& b0,
                       const TimeGrid& grid);

// Free versus monitored rho_x for each phase in `phis` (phi of `p` is
// replaced row by row): exact free solution, continuously monitored closed
// form, and the repeated-measurement engine stepped at the grid dt.
// Columns phi, t, tau, rho_x_free, rho_x_monitored, rho_x_repeated.
ResultTable run_zeno_compare(const SqueezedBathParams& p, const BlochState& b0,
                             const TimeGrid& grid, const std::vector<double>& phis);

// run_zeno_compare at the canonical phases {0, phi_Z(b0), phi_AZ(b0)}.
ResultTable run_zeno_compare(const SqueezedBathParams& p, const BlochState& b0,
                             const TimeGrid& grid);

// Free-evolution surface over the scenario's phase_grid: one block of rows
// per phase sample.  Columns phi, t, tau, rho_x, rho_y, rho_z.
ResultTable scan_phase(const Scenario& s);

enum class OutputFormat { Csv, Json };

// CSV: header line plus one line per row, doubles with 12 significant
// digits.  JSON: array of one object per row, keyed by column, full
// precision.
void write_table(std::ostream& out, const ResultTable& table, OutputFormat format);

} // namespace sqzeno
