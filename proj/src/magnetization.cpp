#include "lhz/magnetization.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lhz/rng.hpp"

namespace lhz {

double analytic_energy_logical(double m, int n_logical, double c) {
    if (n_logical < 3) throw std::invalid_argument("analytic_energy_logical: n_logical >= 3");
    const double nl = n_logical;
    const double m3 = m * m * m;
    return -c * (nl * nl / 2.0 - 2.5 * nl + 3.0) * m3 * m - c * (nl - 2.0) * m3;
}

int logical_from_physical(int n_physical) {
    const double nl = 0.5 * (1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(n_physical)));
    const int rounded = static_cast<int>(std::lround(nl));
    if (rounded < 3 || rounded * (rounded - 1) / 2 != n_physical)
        throw std::invalid_argument("n_physical is not triangular");
    return rounded;
}

std::pair<double, double> analytic_coefficients_physical(int n_physical, double c) {
    logical_from_physical(n_physical);  // validates
    const double np = n_physical;
    const double a = -c * (np - std::sqrt(1.0 + 8.0 * np) + 2.0);
    const double b = -c * (std::sqrt(0.25 + 2.0 * np) - 1.5);
    return {a, b};
}

double analytic_energy_physical(double m, int n_physical, double c) {
    const auto [a, b] = analytic_coefficients_physical(n_physical, c);
    const double m3 = m * m * m;
    return a * m3 * m + b * m3;
}

std::vector<double> magnetization_grid(int n_physical) {
    if (n_physical < 1) throw std::invalid_argument("magnetization_grid: n_physical >= 1");
    std::vector<double> grid(n_physical + 1);
    for (int u = 0; u <= n_physical; ++u)
        grid[u] = (2.0 * u - n_physical) / n_physical;
    return grid;
}

namespace {

int up_count_for(double m, int n_physical) {
    const double exact = n_physical * (1.0 + m) / 2.0;
    const int u = static_cast<int>(std::lround(exact));
    if (u < 0 || u > n_physical || std::abs(exact - u) > 1e-9)
        throw std::invalid_argument("magnetization not admissible for this N_p");
    return u;
}

}  // namespace

EnergySample sample_energy(const LhzLayout& layout, double m, int ms,
                           double constraint_strength, uint64_t seed) {
    if (layout.representation != Representation::Direct)
        throw std::invalid_argument("sample_energy: Direct representation required");
    if (ms < 1) throw std::invalid_argument("sample_energy: ms >= 1");
    const int np = layout.n_physical;
    const int n_up = up_count_for(m, np);

    LhzInstance inst;
    inst.layout = layout;
    inst.constraint_strengths.assign(layout.n_constraints, constraint_strength);
    inst.local_fields.assign(np, 0.0);

    std::vector<int> spins(np);
    SplitMix64 rng(seed);
    double sum = 0.0, sum_sq = 0.0;
    for (int t = 0; t < ms; ++t) {
        std::fill(spins.begin(), spins.begin() + n_up, 1);
        std::fill(spins.begin() + n_up, spins.end(), -1);
        // Fisher-Yates; uniform over the fixed-magnetization shell
        for (int i = np - 1; i > 0; --i)
            std::swap(spins[i], spins[rng.below(i + 1)]);
        const double e = constraint_energy(inst, spins);
        sum += e;
        sum_sq += e * e;
    }
    const double mean = sum / ms;
    const double var = std::max(0.0, sum_sq / ms - mean * mean);
    const double sd = std::sqrt(var);
    return {mean, sd, sd / std::sqrt(static_cast<double>(ms))};
}

MagnetizationScan scan_energies(const LhzLayout& layout, const std::vector<double>& ms_values,
                                int ms, double constraint_strength, uint64_t seed) {
    MagnetizationScan scan;
    scan.n_physical = layout.n_physical;
    scan.ms = ms;
    scan.seed = seed;
    for (size_t i = 0; i < ms_values.size(); ++i) {
        const EnergySample s =
            sample_energy(layout, ms_values[i], ms, constraint_strength,
                          derive_stream(seed, i));
        scan.rows.push_back({ms_values[i], s.mean, s.std_dev, s.sem});
    }
    return scan;
}

FitResult fit_quartic_cubic(const std::vector<ScanRow>& rows) {
    std::vector<double> distinct;
    for (const auto& r : rows)
        if (std::find(distinct.begin(), distinct.end(), r.m) == distinct.end())
            distinct.push_back(r.m);
    if (distinct.size() < 3)
        throw std::invalid_argument("fit_quartic_cubic: need >= 3 distinct m values");

    // normal equations for E ~ a m^4 + b m^3
    double s44 = 0, s43 = 0, s33 = 0, s4e = 0, s3e = 0;
    for (const auto& r : rows) {
        const double m3 = r.m * r.m * r.m, m4 = m3 * r.m;
        s44 += m4 * m4;
        s43 += m4 * m3;
        s33 += m3 * m3;
        s4e += m4 * r.mean;
        s3e += m3 * r.mean;
    }
    const double det = s44 * s33 - s43 * s43;
    if (std::abs(det) < 1e-14 * std::max(1.0, s44 * s33))
        throw std::invalid_argument("fit_quartic_cubic: degenerate design matrix");
    FitResult fit;
    fit.a = (s3e * -s43 + s4e * s33) / det;
    fit.b = (s44 * s3e - s43 * s4e) / det;
    double rss = 0.0;
    for (const auto& r : rows) {
        const double m3 = r.m * r.m * r.m;
        const double pred = fit.a * m3 * r.m + fit.b * m3;
        rss += (r.mean - pred) * (r.mean - pred);
    }
    fit.residual = std::sqrt(rss / rows.size());
    return fit;
}

std::vector<RelErrRow> relative_error_scan(const LhzLayout& layout,
                                           const std::vector<double>& ms_values, int ms,
                                           double constraint_strength, uint64_t seed,
                                           ErrorNormalization normalization) {
    const MagnetizationScan scan =
        scan_energies(layout, ms_values, ms, constraint_strength, seed);
    const double e_max =
        std::abs(analytic_energy_physical(1.0, layout.n_physical, constraint_strength));
    std::vector<RelErrRow> out;
    for (const auto& r : scan.rows) {
        RelErrRow row{r.m, 0.0, 0.0, true};
        if (normalization == ErrorNormalization::AbsMean) {
            if (std::abs(r.mean) < 1e-12) {
                row.defined = false;
            } else {
                row.rel_err = r.std_dev / std::abs(r.mean);
                row.rel_err_sem = r.sem / std::abs(r.mean);
            }
        } else {
            row.rel_err = r.std_dev / e_max;
            row.rel_err_sem = r.sem / e_max;
        }
        out.push_back(row);
    }
    return out;
}

}  // namespace lhz
