#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "lhz/instance.hpp"
#include "lhz/schedule.hpp"

namespace lhz {

using StateVector = Eigen::VectorXcd;  // z-basis, spin 0 = least significant bit

inline constexpr int kDefaultSpinCap = 14;

struct SweepResult {
    uint64_t seed = 0;
    double fidelity_sq = 0.0;
    double residual_energy = 0.0;
    double min_gap = 0.0;
    double gap_location = 0.0;
    double t_f = 0.0;
    double norm_drift = 0.0;
};

// Dense Hermitian (real symmetric) matrix of H(s) for the given schedule.
Eigen::MatrixXd hamiltonian_at(const LhzInstance& instance, const Schedule& schedule,
                               double s, int spin_cap = kDefaultSpinCap);

// Diagonal of the classical problem Hamiltonian H_P over all 2^N configurations.
Eigen::VectorXd problem_diagonal(const LhzInstance& instance, int spin_cap = kDefaultSpinCap);

// ground state of H(0): uniform superposition, all spins along +x
StateVector initial_state(const LhzInstance& instance, int spin_cap = kDefaultSpinCap);

struct EvolveOutput {
    StateVector state;
    double norm_drift;
};

// Integrate i dpsi/dt = H(t/t_f) psi from 0 to t_f. Fourth-order
// commutator-free propagator with exact (Taylor-summed) exponentials;
// step boundaries are aligned with the schedule's switch-off kinks.
EvolveOutput evolve_state(const LhzInstance& instance, const Schedule& schedule, double t_f,
                          int steps_per_unit_time, int spin_cap = kDefaultSpinCap);

// squared overlap with the ground subspace of H_P
double fidelity_sq(const StateVector& state, const LhzInstance& instance);

// <psi|H_P|psi> - E0(H_P)
double residual_energy(const StateVector& state, const LhzInstance& instance);

// lowest n_levels eigenvalues of H(s), ascending
std::vector<double> spectrum_at(const LhzInstance& instance, const Schedule& schedule, double s,
                                int n_levels, int spin_cap = kDefaultSpinCap);

struct GapResult {
    double gap;
    double location;
};

// min over s in [0.01, 0.99] of E1(s) - E0(s), golden-section refined
GapResult min_gap(const LhzInstance& instance, const Schedule& schedule, int grid_points,
                  int spin_cap = kDefaultSpinCap);

// one full sweep: evolve + metrics
SweepResult evolve(const LhzInstance& instance, const Schedule& schedule, double t_f,
                   int steps_per_unit_time, StateVector* final_state = nullptr,
                   int spin_cap = kDefaultSpinCap);

struct EnsembleConfig {
    int n_logical = 4;
    Representation representation = Representation::Auxiliary;
    double constraint_strength = 2.0;
    double aux_field = 10.0;
    double j_low = -1.0, j_high = 1.0;
    double r = 0.5;
    SwitchOrder order = SwitchOrder::Ascending;
    std::vector<double> t_f_values = {1.0, 1.93, 3.73, 7.2, 13.9, 26.8, 51.8, 100.0};
    int steps_per_unit_time = 64;
    int gap_grid_points = 64;
    bool with_gap = true;
    int n_threads = 0;  // 0 = hardware concurrency
};

struct EnsembleRow {
    uint64_t seed;
    ScheduleKind kind;
    double r;
    SwitchOrder order;
    double t_f;
    double fidelity_sq;
    double residual_energy;
    double min_gap;
    double gap_location;
    double norm_drift;
    bool failed = false;
    std::string error;
};

// Paired hom/inhom sweeps per seed; deterministic and order-independent,
// rows sorted by (seed, kind, t_f).
std::vector<EnsembleRow> ensemble_run(const EnsembleConfig& config,
                                      const std::vector<uint64_t>& seeds);

}  // namespace lhz
