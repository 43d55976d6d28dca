#pragma once

#include <cstdint>
#include <vector>

#include "lhz/instance.hpp"
#include "lhz/layout.hpp"

namespace lhz {

// -C(N_l^2/2 - 5N_l/2 + 3)m^4 - C(N_l - 2)m^3
double analytic_energy_logical(double m, int n_logical, double constraint_strength);

// same curve in terms of N_p; n_physical must be triangular
double analytic_energy_physical(double m, int n_physical, double constraint_strength);

// quartic/cubic coefficients of the physical-qubit form, (a, b) with E = a m^4 + b m^3
std::pair<double, double> analytic_coefficients_physical(int n_physical,
                                                         double constraint_strength);

// recover N_l from N_p = N_l(N_l-1)/2; throws if not triangular
int logical_from_physical(int n_physical);

// admissible magnetizations {(2u - N_p)/N_p : u = 0..N_p}, ascending
std::vector<double> magnetization_grid(int n_physical);

struct EnergySample {
    double mean;
    double std_dev;
    double sem;
};

// Mean/std/sem of the constraint energy over ms uniform draws from the
// fixed-magnetization shell (partial Fisher-Yates shuffle). Direct
// representation only; local fields excluded.
EnergySample sample_energy(const LhzLayout& layout, double m, int ms,
                           double constraint_strength, uint64_t seed);

struct ScanRow {
    double m;
    double mean;
    double std_dev;
    double sem;
};

struct MagnetizationScan {
    int n_physical;
    int ms;
    uint64_t seed;
    std::vector<ScanRow> rows;
};

// sample_energy over a list of m values; per-m streams derived from (seed, index)
MagnetizationScan scan_energies(const LhzLayout& layout, const std::vector<double>& ms_values,
                                int ms, double constraint_strength, uint64_t seed);

struct FitResult {
    double a;         // m^4 coefficient
    double b;         // m^3 coefficient
    double residual;  // rms misfit
};

// least squares of mean_E against (m^4, m^3)
FitResult fit_quartic_cubic(const std::vector<ScanRow>& rows);

enum class ErrorNormalization { AbsMean, MaxEnergy };

struct RelErrRow {
    double m;
    double rel_err;      // population-std based
    double rel_err_sem;  // standard-error based
    bool defined;
};

std::vector<RelErrRow> relative_error_scan(const LhzLayout& layout,
                                           const std::vector<double>& ms_values, int ms,
                                           double constraint_strength, uint64_t seed,
                                           ErrorNormalization normalization);

}  // namespace lhz
