#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sqzeno/analytic.hpp"
#include "sqzeno/dynamics.hpp"
#include "sqzeno/measurement.hpp"
#include "sqzeno/presets.hpp"
#include "sqzeno/run.hpp"

#include <sstream>

namespace py = pybind11;
using namespace sqzeno;

namespace {

std::string table_to_string(const ResultTable& t, OutputFormat f) {
    std::ostringstream os;
    write_table(os, t, f);
    return os.str();
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Two-level atom in a broadband squeezed vacuum bath: free, projectively "
              "monitored and indirectly monitored dynamics";

    py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

    py::class_<SqueezedBathParams>(m, "SqueezedBathParams")
        .def_readonly("n_bar", &SqueezedBathParams::n_bar)
        .def_readonly("phi", &SqueezedBathParams::phi)
        .def_readonly("gamma", &SqueezedBathParams::gamma)
        .def_readonly("m", &SqueezedBathParams::m)
        .def("__repr__", [](const SqueezedBathParams& p) {
            std::ostringstream os;
            os << "SqueezedBathParams(n_bar=" << p.n_bar << ", phi=" << p.phi
               << ", gamma=" << p.gamma << ", m=" << p.m << ")";
            return os.str();
        });
    m.def("make_params", &make_params, py::arg("n_bar"), py::arg("phi"), py::arg("gamma"));
    m.def("wrap_phase", &wrap_phase, py::arg("phi"));
    m.def("squeezing_r", &squeezing_r, py::arg("params"));

    py::class_<BlochState>(m, "BlochState")
        .def(py::init<>())
        .def(py::init([](double x, double y, double z) { return BlochState{x, y, z}; }),
             py::arg("x"), py::arg("y"), py::arg("z"))
        .def_readwrite("x", &BlochState::x)
        .def_readwrite("y", &BlochState::y)
        .def_readwrite("z", &BlochState::z)
        .def("__repr__", [](const BlochState& b) {
            std::ostringstream os;
            os << "BlochState(" << b.x << ", " << b.y << ", " << b.z << ")";
            return os.str();
        });
    m.def("norm2", &norm2, py::arg("b"));
    m.def("in_bloch_ball", &in_bloch_ball, py::arg("b"), py::arg("slack") = kBlochBallSlack);

    py::class_<DensityMatrix>(m, "DensityMatrix")
        .def(py::init<>())
        .def_readwrite("ee", &DensityMatrix::ee)
        .def_readwrite("eg", &DensityMatrix::eg)
        .def_readwrite("ge", &DensityMatrix::ge)
        .def_readwrite("gg", &DensityMatrix::gg);
    m.def("bloch_to_density", &bloch_to_density, py::arg("b"));
    m.def("density_to_bloch", &density_to_bloch, py::arg("rho"));
    m.def("pauli_components", &pauli_components, py::arg("matrix"));

    py::class_<FieldFluctuations>(m, "FieldFluctuations")
        .def_readonly("bx2", &FieldFluctuations::bx2)
        .def_readonly("by2", &FieldFluctuations::by2)
        .def_readonly("b_transverse2", &FieldFluctuations::b_transverse2);
    m.def("field_fluctuations", &field_fluctuations, py::arg("params"),
          py::arg("coupling_scale"));

    py::class_<DecayRates>(m, "DecayRates")
        .def_readonly("fast", &DecayRates::fast)
        .def_readonly("slow", &DecayRates::slow)
        .def_readonly("longitudinal", &DecayRates::longitudinal);
    m.def("decay_rates", &decay_rates, py::arg("params"));

    m.def("free_solution", &free_solution, py::arg("params"), py::arg("b0"), py::arg("t"));
    m.def("monitored_rate", &monitored_rate, py::arg("params"));
    m.def("critical_phase_zeno", &critical_phase_zeno, py::arg("b0"));
    m.def("critical_phase_antizeno", &critical_phase_antizeno, py::arg("b0"));
    m.def("p_plus_single", &p_plus_single, py::arg("params"), py::arg("b0"), py::arg("t"));
    m.def("p_plus_continuous", &p_plus_continuous, py::arg("params"), py::arg("b0"),
          py::arg("t"));
    m.def("measured_solution", &measured_solution, py::arg("params"), py::arg("rho_x0"),
          py::arg("t"));

    py::enum_<Component>(m, "Component")
        .value("x", Component::x)
        .value("y", Component::y)
        .value("z", Component::z);

    py::class_<TimeGrid>(m, "TimeGrid")
        .def(py::init([](double t0, double dt, int n_steps) {
                 return TimeGrid{t0, dt, n_steps};
             }),
             py::arg("t0"), py::arg("dt"), py::arg("n_steps"))
        .def_readwrite("t0", &TimeGrid::t0)
        .def_readwrite("dt", &TimeGrid::dt)
        .def_readwrite("n_steps", &TimeGrid::n_steps)
        .def("time_at", &TimeGrid::time_at, py::arg("k"))
        .def("t_end", &TimeGrid::t_end);

    py::class_<Trajectory>(m, "Trajectory")
        .def_readonly("grid", &Trajectory::grid)
        .def_readonly("states", &Trajectory::states)
        .def("times", &Trajectory::times)
        .def("component", &Trajectory::component, py::arg("c"));

    m.def("bloch_rhs_free", &bloch_rhs_free, py::arg("params"), py::arg("b"));
    m.def("bloch_rhs_projective", &bloch_rhs_projective, py::arg("params"), py::arg("b"));
    m.def("bloch_rhs_indirect", &bloch_rhs_indirect, py::arg("params"),
          py::arg("t0_coupling"), py::arg("b"));
    m.def("lindblad_rhs", &lindblad_rhs, py::arg("params"), py::arg("rho"));
    m.def("projective_collapse",
          static_cast<DensityMatrix (*)(const DensityMatrix&)>(&projective_collapse),
          py::arg("rho"));
    m.def("projective_collapse",
          static_cast<BlochState (*)(const BlochState&)>(&projective_collapse), py::arg("b"));

    m.def("integrate", &integrate, py::arg("rhs"), py::arg("b0"), py::arg("grid"),
          py::arg("substeps") = 1);
    m.def(
        "integrate_free",
        [](const SqueezedBathParams& p, const BlochState& b0, const TimeGrid& g, int sub) {
            return integrate([&p](const BlochState& b) { return bloch_rhs_free(p, b); }, b0,
                             g, sub);
        },
        py::arg("params"), py::arg("b0"), py::arg("grid"), py::arg("substeps") = 1);
    m.def(
        "integrate_projective",
        [](const SqueezedBathParams& p, const BlochState& b0, const TimeGrid& g, int sub) {
            return integrate([&p](const BlochState& b) { return bloch_rhs_projective(p, b); },
                             b0, g, sub);
        },
        py::arg("params"), py::arg("b0"), py::arg("grid"), py::arg("substeps") = 1);
    m.def(
        "integrate_indirect",
        [](const SqueezedBathParams& p, double t0c, const BlochState& b0, const TimeGrid& g,
           int sub) {
            return integrate(
                [&p, t0c](const BlochState& b) { return bloch_rhs_indirect(p, t0c, b); }, b0,
                g, sub);
        },
        py::arg("params"), py::arg("t0_coupling"), py::arg("b0"), py::arg("grid"),
        py::arg("substeps") = 1);

    m.def("fit_decay_rate",
          static_cast<double (*)(const Trajectory&, Component)>(&fit_decay_rate),
          py::arg("trajectory"), py::arg("component"));
    m.def("fit_decay_rate",
          static_cast<double (*)(const Trajectory&, Component, double, double)>(
              &fit_decay_rate),
          py::arg("trajectory"), py::arg("component"), py::arg("t_lo"), py::arg("t_hi"));

    py::class_<McConfig>(m, "McConfig")
        .def(py::init([](double dt, int n_steps, int n_traj, std::uint64_t seed) {
                 return McConfig{dt, n_steps, n_traj, seed};
             }),
             py::arg("dt"), py::arg("n_steps"), py::arg("n_traj") = 1, py::arg("seed") = 0)
        .def_readwrite("dt", &McConfig::dt)
        .def_readwrite("n_steps", &McConfig::n_steps)
        .def_readwrite("n_traj", &McConfig::n_traj)
        .def_readwrite("seed", &McConfig::seed);

    py::class_<SurvivalEstimate>(m, "SurvivalEstimate")
        .def_readonly("p_hat", &SurvivalEstimate::p_hat)
        .def_readonly("std_err", &SurvivalEstimate::std_err)
        .def_readonly("n_traj", &SurvivalEstimate::n_traj);

    m.def("survival_step_factor", &survival_step_factor, py::arg("params"), py::arg("dt"));
    m.def("sequential_survival", &sequential_survival, py::arg("params"), py::arg("b0"),
          py::arg("config"));
    m.def("stochastic_survival", &stochastic_survival, py::arg("params"), py::arg("b0"),
          py::arg("config"));
    m.def("repeated_measurement_evolution", &repeated_measurement_evolution,
          py::arg("params"), py::arg("b0"), py::arg("config"));
    m.def("splitmix64", &splitmix64, py::arg("x"));
    m.def("trajectory_seed", &trajectory_seed, py::arg("seed"), py::arg("index"));

    py::enum_<SchemeKind>(m, "SchemeKind")
        .value("Free", SchemeKind::Free)
        .value("ProjectiveContinuous", SchemeKind::ProjectiveContinuous)
        .value("RepeatedProjective", SchemeKind::RepeatedProjective)
        .value("Indirect", SchemeKind::Indirect);
    m.def("scheme_name", &scheme_name, py::arg("kind"));
    m.def("default_columns", &default_columns, py::arg("kind"));

    py::class_<MeasurementScheme>(m, "MeasurementScheme")
        .def_readonly("kind", &MeasurementScheme::kind)
        .def_readonly("meas_dt", &MeasurementScheme::meas_dt)
        .def_readonly("t0_coupling", &MeasurementScheme::t0_coupling)
        .def_static("free_evolution", &MeasurementScheme::free_evolution)
        .def_static("projective_continuous", &MeasurementScheme::projective_continuous)
        .def_static("repeated_projective", &MeasurementScheme::repeated_projective,
                    py::arg("dt"))
        .def_static("indirect", &MeasurementScheme::indirect, py::arg("t0_coupling"));

    py::class_<PhaseGrid>(m, "PhaseGrid")
        .def(py::init([](double min, double max, int points) {
                 return PhaseGrid{min, max, points};
             }),
             py::arg("min"), py::arg("max"), py::arg("points"))
        .def_readwrite("min", &PhaseGrid::min)
        .def_readwrite("max", &PhaseGrid::max)
        .def_readwrite("points", &PhaseGrid::points);

    py::class_<Scenario>(m, "Scenario")
        .def(py::init<>())
        .def_readwrite("name", &Scenario::name)
        .def_readwrite("params", &Scenario::params)
        .def_readwrite("b0", &Scenario::b0)
        .def_readwrite("scheme", &Scenario::scheme)
        .def_readwrite("grid", &Scenario::grid)
        .def_readwrite("substeps", &Scenario::substeps)
        .def_readwrite("mc", &Scenario::mc)
        .def_readwrite("outputs", &Scenario::outputs)
        .def_readwrite("phase_grid", &Scenario::phase_grid);
    m.def("validate_scenario", &validate_scenario, py::arg("scenario"));
    m.def("parse_config_string", &parse_config_string, py::arg("text"),
          py::arg("source_name") = "<string>");
    m.def("load_config_file", &load_config_file, py::arg("path"));
    m.def("scenario_to_config", &scenario_to_config, py::arg("scenario"));

    py::class_<ResultTable>(m, "ResultTable")
        .def_readonly("columns", &ResultTable::columns)
        .def_readonly("rows", &ResultTable::rows);

    py::class_<ScenarioResult>(m, "ScenarioResult")
        .def_readonly("table", &ScenarioResult::table)
        .def_readonly("mc", &ScenarioResult::mc);

    m.def("run_scenario", &run_scenario, py::arg("scenario"));
    m.def("run_table1", &run_table1, py::arg("params"), py::arg("b0"), py::arg("grid"));
    m.def("run_zeno_compare",
          static_cast<ResultTable (*)(const SqueezedBathParams&, const BlochState&,
                                      const TimeGrid&, const std::vector<double>&)>(
              &run_zeno_compare),
          py::arg("params"), py::arg("b0"), py::arg("grid"), py::arg("phis"));
    m.def("run_zeno_compare",
          static_cast<ResultTable (*)(const SqueezedBathParams&, const BlochState&,
                                      const TimeGrid&)>(&run_zeno_compare),
          py::arg("params"), py::arg("b0"), py::arg("grid"));
    m.def("scan_phase", &scan_phase, py::arg("scenario"));

    m.def("table_to_csv",
          [](const ResultTable& t) { return table_to_string(t, OutputFormat::Csv); },
          py::arg("table"));
    m.def("table_to_json",
          [](const ResultTable& t) { return table_to_string(t, OutputFormat::Json); },
          py::arg("table"));

    m.def("preset_names", &presets::names);
    m.def("preset_config",
          [](const std::string& name) { return std::string(presets::get(name)); },
          py::arg("name"));
}
