#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lhz/dynamics.hpp"
#include "lhz/instance.hpp"
#include "lhz/landau.hpp"
#include "lhz/layout.hpp"
#include "lhz/magnetization.hpp"
#include "lhz/schedule.hpp"

namespace py = pybind11;
using namespace lhz;

PYBIND11_MODULE(_lhzsim, mod) {
    mod.doc() = "LHZ parity-architecture annealing and Landau free-energy toolkit";

    py::enum_<Representation>(mod, "Representation")
        .value("Direct", Representation::Direct)
        .value("Auxiliary", Representation::Auxiliary);

    py::enum_<ScheduleKind>(mod, "ScheduleKind")
        .value("Homogeneous", ScheduleKind::Homogeneous)
        .value("Inhomogeneous", ScheduleKind::Inhomogeneous);

    py::enum_<SwitchOrder>(mod, "SwitchOrder")
        .value("Ascending", SwitchOrder::Ascending)
        .value("Descending", SwitchOrder::Descending);

    py::class_<Counts>(mod, "Counts")
        .def_readonly("n_physical", &Counts::n_physical)
        .def_readonly("n_constraints", &Counts::n_constraints)
        .def_readonly("n_auxiliary", &Counts::n_auxiliary);
    mod.def("counts", &counts, py::arg("n_logical"));

    py::class_<Plaquette>(mod, "Plaquette")
        .def_readonly("members", &Plaquette::members)
        .def_readonly("strength_index", &Plaquette::strength_index);

    py::class_<LhzLayout>(mod, "LhzLayout")
        .def_readonly("n_logical", &LhzLayout::n_logical)
        .def_readonly("n_physical", &LhzLayout::n_physical)
        .def_readonly("n_constraints", &LhzLayout::n_constraints)
        .def_readonly("n_auxiliary", &LhzLayout::n_auxiliary)
        .def_readonly("representation", &LhzLayout::representation)
        .def_readonly("plaquettes", &LhzLayout::plaquettes)
        .def("n_spins", &LhzLayout::n_spins)
        .def("qubit_index", &LhzLayout::qubit_index, py::arg("i"), py::arg("j"))
        .def("qubit_pair", &LhzLayout::qubit_pair, py::arg("index"));
    mod.def("build_layout", &build_layout, py::arg("n_logical"),
            py::arg("representation") = Representation::Auxiliary);
    mod.def("plaquette_ratios", &plaquette_ratios, py::arg("n_logical"));

    py::class_<LhzInstance>(mod, "LhzInstance")
        .def_readonly("layout", &LhzInstance::layout)
        .def_readonly("local_fields", &LhzInstance::local_fields)
        .def_readonly("constraint_strengths", &LhzInstance::constraint_strengths);
    mod.def("sample_instance", &sample_instance, py::arg("layout"), py::arg("seed"),
            py::arg("j_low") = -1.0, py::arg("j_high") = 1.0,
            py::arg("constraint_strength") = 2.0, py::arg("aux_field") = 10.0);
    mod.def(
        "constraint_energy",
        [](const LhzInstance& inst, const std::vector<int>& spins) {
            return constraint_energy(inst, spins);
        },
        py::arg("instance"), py::arg("spins"));

    py::class_<Schedule>(mod, "Schedule")
        .def(py::init<>())
        .def_readwrite("kind", &Schedule::kind)
        .def_readwrite("r", &Schedule::r)
        .def_readwrite("order", &Schedule::order)
        .def_readwrite("n_driven", &Schedule::n_driven)
        .def("amplitude", &Schedule::amplitude, py::arg("k"), py::arg("s"));
    mod.def("h_inhom", &h_inhom, py::arg("k"), py::arg("s"), py::arg("r"),
            py::arg("n_total"));

    // magnetization / sampling
    mod.def("analytic_energy_logical", &analytic_energy_logical, py::arg("m"),
            py::arg("n_logical"), py::arg("constraint_strength"));
    mod.def("analytic_energy_physical", &analytic_energy_physical, py::arg("m"),
            py::arg("n_physical"), py::arg("constraint_strength"));
    mod.def("analytic_coefficients_physical", &analytic_coefficients_physical,
            py::arg("n_physical"), py::arg("constraint_strength"));
    mod.def("magnetization_grid", &magnetization_grid, py::arg("n_physical"));

    py::class_<EnergySample>(mod, "EnergySample")
        .def_readonly("mean", &EnergySample::mean)
        .def_readonly("std_dev", &EnergySample::std_dev)
        .def_readonly("sem", &EnergySample::sem);
    mod.def("sample_energy", &sample_energy, py::arg("layout"), py::arg("m"),
            py::arg("ms"), py::arg("constraint_strength"), py::arg("seed"));

    py::class_<ScanRow>(mod, "ScanRow")
        .def_readonly("m", &ScanRow::m)
        .def_readonly("mean", &ScanRow::mean)
        .def_readonly("std_dev", &ScanRow::std_dev)
        .def_readonly("sem", &ScanRow::sem);
    py::class_<MagnetizationScan>(mod, "MagnetizationScan")
        .def_readonly("n_physical", &MagnetizationScan::n_physical)
        .def_readonly("ms", &MagnetizationScan::ms)
        .def_readonly("seed", &MagnetizationScan::seed)
        .def_readonly("rows", &MagnetizationScan::rows);
    mod.def("scan_energies", &scan_energies, py::arg("layout"), py::arg("m_values"),
            py::arg("ms"), py::arg("constraint_strength"), py::arg("seed"));

    py::class_<FitResult>(mod, "FitResult")
        .def_readonly("a", &FitResult::a)
        .def_readonly("b", &FitResult::b)
        .def_readonly("residual", &FitResult::residual);
    mod.def("fit_quartic_cubic", &fit_quartic_cubic, py::arg("rows"));

    // dynamics
    py::class_<SweepResult>(mod, "SweepResult")
        .def_readonly("fidelity_sq", &SweepResult::fidelity_sq)
        .def_readonly("residual_energy", &SweepResult::residual_energy)
        .def_readonly("min_gap", &SweepResult::min_gap)
        .def_readonly("norm_drift", &SweepResult::norm_drift);
    mod.def(
        "evolve",
        [](const LhzInstance& inst, const Schedule& sch, double t_f,
           int steps_per_unit_time) { return evolve(inst, sch, t_f, steps_per_unit_time); },
        py::arg("instance"), py::arg("schedule"), py::arg("t_f"),
        py::arg("steps_per_unit_time") = 64);
    mod.def(
        "spectrum_at",
        [](const LhzInstance& inst, const Schedule& sch, double s, int n_levels) {
            return spectrum_at(inst, sch, s, n_levels);
        },
        py::arg("instance"), py::arg("schedule"), py::arg("s"),
        py::arg("n_levels") = 4);

    py::class_<GapResult>(mod, "GapResult")
        .def_readonly("gap", &GapResult::gap)
        .def_readonly("location", &GapResult::location);
    mod.def(
        "min_gap",
        [](const LhzInstance& inst, const Schedule& sch, int grid_points) {
            return min_gap(inst, sch, grid_points);
        },
        py::arg("instance"), py::arg("schedule"), py::arg("grid_points") = 64);

    py::class_<EnsembleConfig>(mod, "EnsembleConfig")
        .def(py::init<>())
        .def_readwrite("n_logical", &EnsembleConfig::n_logical)
        .def_readwrite("representation", &EnsembleConfig::representation)
        .def_readwrite("constraint_strength", &EnsembleConfig::constraint_strength)
        .def_readwrite("aux_field", &EnsembleConfig::aux_field)
        .def_readwrite("j_low", &EnsembleConfig::j_low)
        .def_readwrite("j_high", &EnsembleConfig::j_high)
        .def_readwrite("r", &EnsembleConfig::r)
        .def_readwrite("order", &EnsembleConfig::order)
        .def_readwrite("t_f_values", &EnsembleConfig::t_f_values)
        .def_readwrite("steps_per_unit_time", &EnsembleConfig::steps_per_unit_time)
        .def_readwrite("gap_grid_points", &EnsembleConfig::gap_grid_points)
        .def_readwrite("with_gap", &EnsembleConfig::with_gap)
        .def_readwrite("n_threads", &EnsembleConfig::n_threads);
    py::class_<EnsembleRow>(mod, "EnsembleRow")
        .def_readonly("seed", &EnsembleRow::seed)
        .def_readonly("kind", &EnsembleRow::kind)
        .def_readonly("r", &EnsembleRow::r)
        .def_readonly("order", &EnsembleRow::order)
        .def_readonly("t_f", &EnsembleRow::t_f)
        .def_readonly("fidelity_sq", &EnsembleRow::fidelity_sq)
        .def_readonly("residual_energy", &EnsembleRow::residual_energy)
        .def_readonly("min_gap", &EnsembleRow::min_gap)
        .def_readonly("gap_location", &EnsembleRow::gap_location)
        .def_readonly("norm_drift", &EnsembleRow::norm_drift)
        .def_readonly("failed", &EnsembleRow::failed)
        .def_readonly("error", &EnsembleRow::error);
    mod.def("ensemble_run", &ensemble_run, py::arg("config"), py::arg("seeds"),
            py::call_guard<py::gil_scoped_release>());

    // landau
    py::enum_<FreeEnergyVariant>(mod, "FreeEnergyVariant")
        .value("Thermo", FreeEnergyVariant::Thermo)
        .value("FiniteSize", FreeEnergyVariant::FiniteSize)
        .value("ScaledC", FreeEnergyVariant::ScaledC)
        .value("FiniteTemperature", FreeEnergyVariant::FiniteTemperature);

    py::class_<JDistribution>(mod, "JDistribution")
        .def_static("uniform", &JDistribution::uniform, py::arg("lo"), py::arg("hi"))
        .def_static("point_mass", &JDistribution::point_mass, py::arg("value"));

    py::class_<FreeEnergyFamily>(mod, "FreeEnergyFamily")
        .def(py::init<>())
        .def_readwrite("variant", &FreeEnergyFamily::variant)
        .def_readwrite("constraint_strength", &FreeEnergyFamily::constraint_strength)
        .def_readwrite("n_physical", &FreeEnergyFamily::n_physical)
        .def_readwrite("beta", &FreeEnergyFamily::beta)
        .def_readwrite("j_dist", &FreeEnergyFamily::j_dist)
        .def_readwrite("j_samples", &FreeEnergyFamily::j_samples)
        .def_readwrite("quad_nodes_j", &FreeEnergyFamily::quad_nodes_j)
        .def_readwrite("quad_nodes_label", &FreeEnergyFamily::quad_nodes_label)
        .def("value", &FreeEnergyFamily::value, py::arg("m"), py::arg("s"),
             py::arg("tau"));

    py::class_<MinimizeResult>(mod, "MinimizeResult")
        .def_readonly("m_star", &MinimizeResult::m_star)
        .def_readonly("f_star", &MinimizeResult::f_star)
        .def_readonly("is_degenerate", &MinimizeResult::is_degenerate);
    mod.def("minimize_over_m", &minimize_over_m, py::arg("family"), py::arg("s"),
            py::arg("tau"), py::arg("grid_step") = 1e-3);

    py::class_<CriticalPoint>(mod, "CriticalPoint")
        .def_readonly("m_c", &CriticalPoint::m_c)
        .def_readonly("s_c", &CriticalPoint::s_c)
        .def_readonly("tau_c", &CriticalPoint::tau_c)
        .def_readonly("residuals", &CriticalPoint::residuals)
        .def_readonly("fourth_derivative", &CriticalPoint::fourth_derivative);
    mod.def("critical_point", &critical_point, py::arg("family"));

    py::class_<TransitionPoint>(mod, "TransitionPoint")
        .def_readonly("s", &TransitionPoint::s)
        .def_readonly("tau", &TransitionPoint::tau)
        .def_readonly("m_below", &TransitionPoint::m_below)
        .def_readonly("m_above", &TransitionPoint::m_above)
        .def_readonly("jump", &TransitionPoint::jump);
    py::class_<TransitionLine>(mod, "TransitionLine")
        .def_readonly("points", &TransitionLine::points);
    mod.def("transition_line", &transition_line, py::arg("family"), py::arg("s_grid"),
            py::arg("tau_low") = 0.0, py::arg("tau_high") = 1.0,
            py::arg("min_jump") = 0.01);
}
