#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sqzeno/errors.hpp"
#include "sqzeno/measurement.hpp"

namespace sqzeno {

enum class SchemeKind { Free, ProjectiveContinuous, RepeatedProjective, Indirect };

// Config token for a scheme ("free", "projective_continuous", ...).
std::string scheme_name(SchemeKind kind);

// Measurement regime attached to a scenario.  RepeatedProjective carries the
// measurement interval (always equal to the scenario grid step); Indirect
// carries the apparatus coupling time.
struct MeasurementScheme {
    SchemeKind kind = SchemeKind::Free;
    double meas_dt = 0.0;
    double t0_coupling = 0.0;

    static MeasurementScheme free_evolution();
    static MeasurementScheme projective_continuous();
    static MeasurementScheme repeated_projective(double dt);
    static MeasurementScheme indirect(double t0_coupling);
};

// Inclusive phase sweep [min, max] with `points` equidistant samples.
struct PhaseGrid {
    double min = 0.0;
    double max = 0.0;
    int points = 0;
};

struct Scenario {
    std::string name;
    SqueezedBathParams params{};
    BlochState b0{};
    MeasurementScheme scheme{};
    TimeGrid grid{};
    int substeps = 1;                    // integrator subdivision, Free/Indirect only
    std::optional<McConfig> mc;          // present iff RepeatedProjective
    std::vector<std::string> outputs;    // empty selects the scheme default
    std::optional<PhaseGrid> phase_grid; // required by phase scans only
};

// Output columns produced for a scheme when `outputs` is empty.
std::vector<std::string> default_columns(SchemeKind kind);

// Throws ConfigError when the scenario is internally inconsistent (invalid
// grid or state, measurement config missing or spurious, unknown outputs).
void validate_scenario(const Scenario& s);

// Config format, one scenario per section:
//
//   [scenario.NAME]
//   key = value        # '#' starts a comment
//
// Keys: n_bar, phi, gamma (bath); rho_x0, rho_y0, rho_z0 (initial state,
// default 0); scheme = free | projective_continuous | repeated_projective |
// indirect; t_start (default 0), dt, steps (time grid); substeps (free and
// indirect only, default 1, integrator subdivision per grid step);
// coupling_t0 (indirect only); n_traj, seed (repeated_projective only);
// outputs (optional comma-separated column subset); phi_min, phi_max,
// phi_points (optional phase sweep).  phi accepts a value in radians or the
// tokens phi_Z / phi_AZ, resolved from the initial state.  Unknown keys,
// duplicate keys and malformed values raise ConfigError with line and field.
std::vector<Scenario> parse_config(std::istream& in, const std::string& source_name);
std::vector<Scenario> parse_config_string(const std::string& text,
                                          const std::string& source_name = "<string>");
std::vector<Scenario> load_config_file(const std::string& path);

// Canonical config text for one scenario; parsing it back reproduces the
// scenario bit for bit (doubles are emitted with round-trip precision).
std::string scenario_to_config(const Scenario& s);

} // namespace sqzeno
