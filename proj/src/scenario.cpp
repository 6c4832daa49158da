#include "sqzeno/scenario.hpp"

#include "sqzeno/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace sqzeno {

MeasurementScheme MeasurementScheme::free_evolution() { return {SchemeKind::Free, 0.0, 0.0}; }

MeasurementScheme MeasurementScheme::projective_continuous() {
    return {SchemeKind::ProjectiveContinuous, 0.0, 0.0};
}

MeasurementScheme MeasurementScheme::repeated_projective(double dt) {
    return {SchemeKind::RepeatedProjective, dt, 0.0};
}

MeasurementScheme MeasurementScheme::indirect(double t0_coupling) {
    return {SchemeKind::Indirect, 0.0, t0_coupling};
}

std::string scheme_name(SchemeKind kind) {
    switch (kind) {
    case SchemeKind::Free: return "free";
    case SchemeKind::ProjectiveContinuous: return "projective_continuous";
    case SchemeKind::RepeatedProjective: return "repeated_projective";
    case SchemeKind::Indirect: return "indirect";
    }
    return "?";
}

std::vector<std::string> default_columns(SchemeKind kind) {
    switch (kind) {
    case SchemeKind::Free:
    case SchemeKind::Indirect:
        return {"t", "tau", "rho_x", "rho_y", "rho_z", "p_plus"};
    case SchemeKind::ProjectiveContinuous:
        return {"t", "tau", "rho_x", "p_plus", "p_plus_cm"};
    case SchemeKind::RepeatedProjective:
        return {"t", "tau", "rho_x", "p_plus_cm"};
    }
    return {};
}

namespace {

std::string trim(const std::string& s) {
    std::size_t lo = s.find_first_not_of(" \t\r");
    if (lo == std::string::npos) return {};
    std::size_t hi = s.find_last_not_of(" \t\r");
    return s.substr(lo, hi - lo + 1);
}

struct Entry {
    std::string value;
    int line = 0;
    bool used = false;
};

struct Section {
    std::string name;
    int line = 0;
    std::map<std::string, Entry> kv;
};

// Every key the format knows, scheme-specific ones included; anything else
// is reported as unknown rather than silently ignored.
const std::set<std::string>& known_keys() {
    static const std::set<std::string> keys = {
        "n_bar", "phi",     "gamma",   "rho_x0",  "rho_y0",  "rho_z0",
        "scheme", "t_start", "dt",      "steps",   "substeps", "coupling_t0",
        "n_traj", "seed",    "outputs", "phi_min", "phi_max", "phi_points"};
    return keys;
}

double parse_double(const Entry& e, const std::string& key) {
    const std::string v = trim(e.value);
    if (v.empty()) throw ConfigError("empty value for " + key, e.line, key);
    char* end = nullptr;
    const double x = std::strtod(v.c_str(), &end);
    if (end != v.c_str() + v.size() || !std::isfinite(x)) {
        throw ConfigError("expected a finite number for " + key + ", got '" + v + "'",
                          e.line, key);
    }
    return x;
}

long long parse_ll(const Entry& e, const std::string& key) {
    const std::string v = trim(e.value);
    if (v.empty()) throw ConfigError("empty value for " + key, e.line, key);
    char* end = nullptr;
    const long long x = std::strtoll(v.c_str(), &end, 10);
    if (end != v.c_str() + v.size()) {
        throw ConfigError("expected an integer for " + key + ", got '" + v + "'", e.line,
                          key);
    }
    return x;
}

std::uint64_t parse_u64(const Entry& e, const std::string& key) {
    const std::string v = trim(e.value);
    if (v.empty() || v[0] == '-') {
        throw ConfigError("expected an unsigned integer for " + key + ", got '" + v + "'",
                          e.line, key);
    }
    char* end = nullptr;
    const unsigned long long x = std::strtoull(v.c_str(), &end, 10);
    if (end != v.c_str() + v.size()) {
        throw ConfigError("expected an unsigned integer for " + key + ", got '" + v + "'",
                          e.line, key);
    }
    return static_cast<std::uint64_t>(x);
}

class SectionReader {
public:
    explicit SectionReader(Section& sec) : sec_(sec) {}

    Entry* take(const std::string& key) {
        auto it = sec_.kv.find(key);
        if (it == sec_.kv.end()) return nullptr;
        it->second.used = true;
        return &it->second;
    }

    Entry& require(const std::string& key) {
        Entry* e = take(key);
        if (!e) {
            throw ConfigError("scenario '" + sec_.name + "' is missing required key " + key,
                              sec_.line, key);
        }
        return *e;
    }

    double number(const std::string& key, double fallback) {
        Entry* e = take(key);
        return e ? parse_double(*e, key) : fallback;
    }

    void finish() const {
        for (const auto& [key, entry] : sec_.kv) {
            if (entry.used) continue;
            if (known_keys().count(key)) {
                throw ConfigError("key " + key + " does not apply to this scheme",
                                  entry.line, key);
            }
            throw ConfigError("unknown key " + key, entry.line, key);
        }
    }

    const std::string& name() const { return sec_.name; }
    int line() const { return sec_.line; }

private:
    Section& sec_;
};

std::vector<std::string> split_csv_list(const std::string& v) {
    std::vector<std::string> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

Scenario build_scenario(Section& sec) {
    SectionReader r(sec);
    Scenario s;
    s.name = sec.name;

    s.b0.x = r.number("rho_x0", 0.0);
    s.b0.y = r.number("rho_y0", 0.0);
    s.b0.z = r.number("rho_z0", 0.0);

    Entry& n_bar_e = r.require("n_bar");
    const double n_bar = parse_double(n_bar_e, "n_bar");
    if (!(n_bar >= 0.0)) throw ConfigError("n_bar must be >= 0", n_bar_e.line, "n_bar");

    Entry& gamma_e = r.require("gamma");
    const double gamma = parse_double(gamma_e, "gamma");
    if (!(gamma > 0.0)) throw ConfigError("gamma must be > 0", gamma_e.line, "gamma");

    Entry& phi_e = r.require("phi");
    double phi = 0.0;
    const std::string phi_raw = trim(phi_e.value);
    if (phi_raw == "phi_Z" || phi_raw == "phi_AZ") {
        if (s.b0.x == 0.0 && s.b0.y == 0.0) {
            throw ConfigError(phi_raw + " needs an initial state with a transverse component",
                              phi_e.line, "phi");
        }
        phi = phi_raw == "phi_Z" ? critical_phase_zeno(s.b0) : critical_phase_antizeno(s.b0);
    } else {
        phi = parse_double(phi_e, "phi");
    }
    s.params = make_params(n_bar, phi, gamma);

    Entry& scheme_e = r.require("scheme");
    const std::string scheme_raw = trim(scheme_e.value);
    if (scheme_raw == "free") {
        s.scheme = MeasurementScheme::free_evolution();
    } else if (scheme_raw == "projective_continuous") {
        s.scheme = MeasurementScheme::projective_continuous();
    } else if (scheme_raw == "repeated_projective") {
        s.scheme = MeasurementScheme::repeated_projective(0.0); // dt filled below
    } else if (scheme_raw == "indirect") {
        s.scheme = MeasurementScheme::indirect(0.0); // t0 filled below
    } else {
        throw ConfigError("unknown scheme '" + scheme_raw +
                              "' (expected free, projective_continuous, "
                              "repeated_projective or indirect)",
                          scheme_e.line, "scheme");
    }

    s.grid.t0 = r.number("t_start", 0.0);
    Entry& dt_e = r.require("dt");
    s.grid.dt = parse_double(dt_e, "dt");
    if (!(s.grid.dt > 0.0)) throw ConfigError("dt must be > 0", dt_e.line, "dt");
    Entry& steps_e = r.require("steps");
    const long long steps = parse_ll(steps_e, "steps");
    if (steps < 1 || steps > 100000000) {
        throw ConfigError("steps must lie in [1, 1e8]", steps_e.line, "steps");
    }
    s.grid.n_steps = static_cast<int>(steps);

    if (s.scheme.kind == SchemeKind::Indirect) {
        Entry& t0_e = r.require("coupling_t0");
        s.scheme.t0_coupling = parse_double(t0_e, "coupling_t0");
        if (!(s.scheme.t0_coupling > 0.0)) {
            throw ConfigError("coupling_t0 must be > 0", t0_e.line, "coupling_t0");
        }
    }
    if (s.scheme.kind == SchemeKind::Free || s.scheme.kind == SchemeKind::Indirect) {
        if (Entry* sub_e = r.take("substeps")) {
            const long long sub = parse_ll(*sub_e, "substeps");
            if (sub < 1 || sub > 1000000) {
                throw ConfigError("substeps must lie in [1, 1e6]", sub_e->line, "substeps");
            }
            s.substeps = static_cast<int>(sub);
        }
    }
    if (s.scheme.kind == SchemeKind::RepeatedProjective) {
        s.scheme.meas_dt = s.grid.dt;
        Entry& ntraj_e = r.require("n_traj");
        const long long n_traj = parse_ll(ntraj_e, "n_traj");
        if (n_traj < 1 || n_traj > 1000000000) {
            throw ConfigError("n_traj must lie in [1, 1e9]", ntraj_e.line, "n_traj");
        }
        McConfig mc;
        mc.dt = s.grid.dt;
        mc.n_steps = s.grid.n_steps;
        mc.n_traj = static_cast<int>(n_traj);
        mc.seed = parse_u64(r.require("seed"), "seed");
        s.mc = mc;
    }

    if (Entry* out_e = r.take("outputs")) {
        s.outputs = split_csv_list(out_e->value);
        if (s.outputs.empty()) {
            throw ConfigError("outputs must list at least one column", out_e->line, "outputs");
        }
    }

    Entry* pmin = r.take("phi_min");
    Entry* pmax = r.take("phi_max");
    Entry* pnum = r.take("phi_points");
    if (pmin || pmax || pnum) {
        if (!(pmin && pmax && pnum)) {
            throw ConfigError("phi_min, phi_max and phi_points must be given together",
                              sec.line, pmin ? (pmax ? "phi_points" : "phi_max") : "phi_min");
        }
        PhaseGrid pg;
        pg.min = parse_double(*pmin, "phi_min");
        pg.max = parse_double(*pmax, "phi_max");
        const long long pts = parse_ll(*pnum, "phi_points");
        if (!(pg.min < pg.max)) {
            throw ConfigError("phi_min must be < phi_max", pmin->line, "phi_min");
        }
        if (pts < 2 || pts > 100000) {
            throw ConfigError("phi_points must lie in [2, 1e5]", pnum->line, "phi_points");
        }
        pg.points = static_cast<int>(pts);
        s.phase_grid = pg;
    }

    r.finish();
    validate_scenario(s);
    return s;
}

} // namespace

void validate_scenario(const Scenario& s) {
    if (s.name.empty()) throw ConfigError("scenario has no name");
    if (!in_bloch_ball(s.b0)) {
        std::ostringstream os;
        os << "scenario '" << s.name << "': initial state outside the Bloch ball (|b|^2 = "
           << norm2(s.b0) << ")";
        throw ConfigError(os.str(), 0, "rho_x0");
    }
    if (!(s.grid.dt > 0.0) || s.grid.n_steps < 1 || !std::isfinite(s.grid.t0)) {
        throw ConfigError("scenario '" + s.name + "': invalid time grid", 0, "dt");
    }
    if (s.substeps < 1) {
        throw ConfigError("scenario '" + s.name + "': substeps must be >= 1", 0, "substeps");
    }
    if (s.substeps != 1 && s.scheme.kind != SchemeKind::Free &&
        s.scheme.kind != SchemeKind::Indirect) {
        throw ConfigError("scenario '" + s.name + "': substeps applies only to free and indirect",
                          0, "substeps");
    }
    if (s.scheme.kind == SchemeKind::Indirect && !(s.scheme.t0_coupling > 0.0)) {
        throw ConfigError("scenario '" + s.name + "': coupling_t0 must be > 0", 0,
                          "coupling_t0");
    }
    if (s.scheme.kind == SchemeKind::RepeatedProjective) {
        if (!s.mc) {
            throw ConfigError("scenario '" + s.name + "': repeated_projective needs n_traj and seed",
                              0, "n_traj");
        }
        if (s.scheme.meas_dt != s.grid.dt || s.mc->dt != s.grid.dt ||
            s.mc->n_steps != s.grid.n_steps) {
            throw ConfigError("scenario '" + s.name +
                                  "': measurement interval must equal the grid step",
                              0, "dt");
        }
    } else if (s.mc) {
        throw ConfigError("scenario '" + s.name + "': n_traj/seed apply only to repeated_projective",
                          0, "n_traj");
    }
    const std::vector<std::string> allowed = default_columns(s.scheme.kind);
    for (const std::string& col : s.outputs) {
        if (std::find(allowed.begin(), allowed.end(), col) == allowed.end()) {
            throw ConfigError("scenario '" + s.name + "': output column '" + col +
                                  "' does not apply to scheme " + scheme_name(s.scheme.kind),
                              0, "outputs");
        }
    }
}

std::vector<Scenario> parse_config(std::istream& in, const std::string& source_name) {
    std::vector<Section> sections;
    Section* current = nullptr;
    std::string raw;
    int lineno = 0;

    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        if (std::size_t hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']') {
                throw ConfigError(source_name + ": unterminated section header", lineno);
            }
            const std::string inner = trim(line.substr(1, line.size() - 2));
            const std::string prefix = "scenario.";
            if (inner.rfind(prefix, 0) != 0 || inner.size() == prefix.size()) {
                throw ConfigError(source_name + ": section must be named [scenario.NAME]",
                                  lineno);
            }
            const std::string name = inner.substr(prefix.size());
            for (const Section& sec : sections) {
                if (sec.name == name) {
                    throw ConfigError(source_name + ": duplicate scenario '" + name + "'",
                                      lineno);
                }
            }
            sections.push_back(Section{name, lineno, {}});
            current = &sections.back();
            continue;
        }

        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(source_name + ": expected 'key = value'", lineno);
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError(source_name + ": empty key", lineno);
        if (!current) {
            throw ConfigError(source_name + ": key '" + key +
                                  "' appears outside a [scenario.*] section",
                              lineno, key);
        }
        if (current->kv.count(key)) {
            throw ConfigError(source_name + ": duplicate key " + key, lineno, key);
        }
        current->kv[key] = Entry{value, lineno, false};
    }

    if (sections.empty()) {
        throw ConfigError(source_name + ": config defines no [scenario.*] section");
    }
    std::vector<Scenario> out;
    out.reserve(sections.size());
    for (Section& sec : sections) out.push_back(build_scenario(sec));
    return out;
}

std::vector<Scenario> parse_config_string(const std::string& text,
                                          const std::string& source_name) {
    std::istringstream in(text);
    return parse_config(in, source_name);
}

std::vector<Scenario> load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    return parse_config(in, path);
}

namespace {

std::string fmt_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

} // namespace

std::string scenario_to_config(const Scenario& s) {
    std::ostringstream os;
    os << "[scenario." << s.name << "]\n";
    os << "n_bar = " << fmt_double(s.params.n_bar) << "\n";
    os << "phi = " << fmt_double(s.params.phi) << "\n";
    os << "gamma = " << fmt_double(s.params.gamma) << "\n";
    os << "rho_x0 = " << fmt_double(s.b0.x) << "\n";
    os << "rho_y0 = " << fmt_double(s.b0.y) << "\n";
    os << "rho_z0 = " << fmt_double(s.b0.z) << "\n";
    os << "scheme = " << scheme_name(s.scheme.kind) << "\n";
    os << "t_start = " << fmt_double(s.grid.t0) << "\n";
    os << "dt = " << fmt_double(s.grid.dt) << "\n";
    os << "steps = " << s.grid.n_steps << "\n";
    if (s.scheme.kind == SchemeKind::Free || s.scheme.kind == SchemeKind::Indirect) {
        os << "substeps = " << s.substeps << "\n";
    }
    if (s.scheme.kind == SchemeKind::Indirect) {
        os << "coupling_t0 = " << fmt_double(s.scheme.t0_coupling) << "\n";
    }
    if (s.scheme.kind == SchemeKind::RepeatedProjective && s.mc) {
        os << "n_traj = " << s.mc->n_traj << "\n";
        os << "seed = " << s.mc->seed << "\n";
    }
    if (!s.outputs.empty()) {
        os << "outputs = ";
        for (std::size_t i = 0; i < s.outputs.size(); ++i) {
            if (i) os << ",";
            os << s.outputs[i];
        }
        os << "\n";
    }
    if (s.phase_grid) {
        os << "phi_min = " << fmt_double(s.phase_grid->min) << "\n";
        os << "phi_max = " << fmt_double(s.phase_grid->max) << "\n";
        os << "phi_points = " << s.phase_grid->points << "\n";
    }
    return os.str();
}

} // namespace sqzeno
