#include "lhz/dynamics.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>
#include <thread>

#include <Eigen/Eigenvalues>

namespace lhz {

namespace {

void check_dim(const LhzInstance& instance, int spin_cap) {
    if (instance.layout.n_spins() > spin_cap)
        throw std::invalid_argument("dynamics: spin count exceeds cap");
}

// H(s) = g*D - sum_k h_k X_k, with D the classical diagonal. Both protocols
// fit this form: homogeneous has g=s, h_k = 1-s; inhomogeneous has g=s,
// h_k = h_inhom(rank(k), s).
struct FieldCoeffs {
    double g;
    std::vector<double> h;
};

FieldCoeffs coeffs_at(const LhzInstance& instance, const Schedule& schedule, double s) {
    const int n = instance.layout.n_spins();
    FieldCoeffs c;
    c.g = s;
    c.h.resize(n);
    for (int k = 0; k < n; ++k) c.h[k] = schedule.amplitude(k, s);
    return c;
}

void apply_op(const Eigen::VectorXd& diag, const FieldCoeffs& c, const StateVector& v,
              StateVector& out) {
    const long dim = v.size();
    const int n = static_cast<int>(c.h.size());
    out.noalias() = (c.g * diag.array() * v.array()).matrix();
    for (int k = 0; k < n; ++k) {
        const double hk = c.h[k];
        if (hk == 0.0) continue;
        const long bit = 1L << k;
        for (long i = 0; i < dim; ++i) out[i] -= hk * v[i ^ bit];
    }
}

// psi <- exp(z * Op) psi by Taylor summation; Op is Hermitian so the result
// is unitary up to the truncation tolerance.
void apply_exp(const Eigen::VectorXd& diag, const FieldCoeffs& c, std::complex<double> z,
               StateVector& psi, StateVector& term, StateVector& scratch) {
    term = psi;
    const double target = 1e-16 * psi.norm();
    for (int n = 1; n <= 300; ++n) {
        apply_op(diag, c, term, scratch);
        term = (z / static_cast<double>(n)) * scratch;
        psi += term;
        if (term.norm() < target) return;
    }
    throw std::runtime_error("evolve: exponential series did not converge");
}

std::vector<double> schedule_breakpoints(const LhzInstance& instance, const Schedule& schedule) {
    std::set<double> pts{0.0, 1.0};
    if (schedule.kind == ScheduleKind::Inhomogeneous) {
        const int n = instance.layout.n_spins();
        for (int k = 0; k < n; ++k) {
            auto [a, b] = switch_window(k, schedule.r, n);
            if (a > 0.0 && a < 1.0) pts.insert(a);
            if (b > 0.0 && b < 1.0) pts.insert(b);
        }
    }
    return {pts.begin(), pts.end()};
}

}  // namespace

Eigen::VectorXd problem_diagonal(const LhzInstance& instance, int spin_cap) {
    check_dim(instance, spin_cap);
    const int n = instance.layout.n_spins();
    const long dim = 1L << n;
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(dim);
    for (long idx = 0; idx < dim; ++idx) {
        double e = 0.0;
        for (int k = 0; k < n; ++k) {
            const int z = (idx >> k) & 1 ? 1 : -1;
            e -= instance.field_at(k) * z;
        }
        diag[idx] = e;
    }
    for (const Plaquette& p : instance.layout.plaquettes) {
        long mask = 0;
        for (int k : p.members) mask |= 1L << k;
        const double cl = instance.constraint_strengths[p.strength_index];
        const int members = static_cast<int>(p.members.size());
        for (long idx = 0; idx < dim; ++idx) {
            // product of z's = +1 iff the number of down spins in the plaquette is even
            const int down = members - std::popcount(static_cast<unsigned long>(idx & mask));
            diag[idx] -= cl * ((down & 1) ? -1.0 : 1.0);
        }
    }
    return diag;
}

Eigen::MatrixXd hamiltonian_at(const LhzInstance& instance, const Schedule& schedule, double s,
                               int spin_cap) {
    if (s < 0.0 || s > 1.0) throw std::invalid_argument("hamiltonian_at: s must be in [0,1]");
    check_dim(instance, spin_cap);
    const Eigen::VectorXd diag = problem_diagonal(instance, spin_cap);
    const FieldCoeffs c = coeffs_at(instance, schedule, s);
    const long dim = diag.size();
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
    m.diagonal() = c.g * diag;
    const int n = instance.layout.n_spins();
    for (int k = 0; k < n; ++k) {
        if (c.h[k] == 0.0) continue;
        const long bit = 1L << k;
        for (long i = 0; i < dim; ++i) m(i, i ^ bit) -= c.h[k];
    }
    return m;
}

StateVector initial_state(const LhzInstance& instance, int spin_cap) {
    check_dim(instance, spin_cap);
    const long dim = 1L << instance.layout.n_spins();
    return StateVector::Constant(dim, std::complex<double>(1.0 / std::sqrt(double(dim)), 0.0));
}

EvolveOutput evolve_state(const LhzInstance& instance, const Schedule& schedule, double t_f,
                          int steps_per_unit_time, int spin_cap) {
    if (!(t_f > 0.0)) throw std::invalid_argument("evolve: t_f must be > 0");
    if (steps_per_unit_time < 1) throw std::invalid_argument("evolve: steps_per_unit_time >= 1");
    check_dim(instance, spin_cap);

    const Eigen::VectorXd diag = problem_diagonal(instance, spin_cap);
    StateVector psi = initial_state(instance, spin_cap);
    StateVector term(psi.size()), scratch(psi.size());

    // fourth-order commutator-free propagator, two Gauss nodes per step
    const double root3 = std::sqrt(3.0);
    const double c1 = 0.5 - root3 / 6.0, c2 = 0.5 + root3 / 6.0;
    const double a1 = (3.0 - 2.0 * root3) / 12.0, a2 = (3.0 + 2.0 * root3) / 12.0;
    const std::complex<double> mi(0.0, -1.0);

    // integrate segment-by-segment so steps never straddle a kink of h_k(s)
    const std::vector<double> breaks = schedule_breakpoints(instance, schedule);
    const int n = instance.layout.n_spins();
    FieldCoeffs mix;
    mix.h.resize(n);
    for (size_t seg = 0; seg + 1 < breaks.size(); ++seg) {
        const double sa = breaks[seg], sb = breaks[seg + 1];
        const double seg_time = (sb - sa) * t_f;
        const int steps = std::max(1L, std::lround(std::ceil(seg_time * steps_per_unit_time)));
        const double ds = (sb - sa) / steps;
        for (int step = 0; step < steps; ++step) {
            const double s0 = sa + step * ds;
            const FieldCoeffs f1 = coeffs_at(instance, schedule, s0 + c1 * ds);
            const FieldCoeffs f2 = coeffs_at(instance, schedule, s0 + c2 * ds);
            const double dt = ds * t_f;
            // rightmost factor weights the earlier node more
            mix.g = a2 * f1.g + a1 * f2.g;
            for (int k = 0; k < n; ++k) mix.h[k] = a2 * f1.h[k] + a1 * f2.h[k];
            apply_exp(diag, mix, mi * dt, psi, term, scratch);
            mix.g = a1 * f1.g + a2 * f2.g;
            for (int k = 0; k < n; ++k) mix.h[k] = a1 * f1.h[k] + a2 * f2.h[k];
            apply_exp(diag, mix, mi * dt, psi, term, scratch);
        }
    }

    EvolveOutput out{std::move(psi), 0.0};
    out.norm_drift = std::abs(out.state.norm() - 1.0);
    if (out.norm_drift > 1e-6) throw std::runtime_error("evolve: norm drift exceeds 1e-6");
    return out;
}

double fidelity_sq(const StateVector& state, const LhzInstance& instance) {
    const Eigen::VectorXd diag = problem_diagonal(instance, instance.layout.n_spins());
    if (state.size() != diag.size())
        throw std::invalid_argument("fidelity_sq: dimension mismatch");
    const double e0 = diag.minCoeff();
    const double tol = 1e-9 * std::max(1.0, std::abs(e0));
    double f = 0.0;
    for (long i = 0; i < diag.size(); ++i)
        if (diag[i] <= e0 + tol) f += std::norm(state[i]);
    return f;
}

double residual_energy(const StateVector& state, const LhzInstance& instance) {
    const Eigen::VectorXd diag = problem_diagonal(instance, instance.layout.n_spins());
    if (state.size() != diag.size())
        throw std::invalid_argument("residual_energy: dimension mismatch");
    double e = 0.0;
    for (long i = 0; i < diag.size(); ++i) e += diag[i] * std::norm(state[i]);
    return std::max(0.0, e / state.squaredNorm() - diag.minCoeff());
}

std::vector<double> spectrum_at(const LhzInstance& instance, const Schedule& schedule, double s,
                                int n_levels, int spin_cap) {
    const Eigen::MatrixXd h = hamiltonian_at(instance, schedule, s, spin_cap);
    if (n_levels < 1 || n_levels > h.rows())
        throw std::invalid_argument("spectrum_at: bad n_levels");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h, Eigen::EigenvaluesOnly);
    const auto& ev = es.eigenvalues();
    return {ev.data(), ev.data() + n_levels};
}

GapResult min_gap(const LhzInstance& instance, const Schedule& schedule, int grid_points,
                  int spin_cap) {
    if (grid_points < 16) throw std::invalid_argument("min_gap: grid_points >= 16 required");
    check_dim(instance, spin_cap);
    const double lo = 0.01, hi = 0.99;
    auto gap_at = [&](double s) {
        const auto ev = spectrum_at(instance, schedule, s, 2, spin_cap);
        return ev[1] - ev[0];
    };
    double best_s = lo, best_gap = std::numeric_limits<double>::infinity();
    std::vector<double> grid(grid_points);
    for (int i = 0; i < grid_points; ++i) {
        grid[i] = lo + (hi - lo) * i / (grid_points - 1);
        const double g = gap_at(grid[i]);
        if (g < best_gap) {
            best_gap = g;
            best_s = grid[i];
        }
    }
    // golden-section refinement around the coarse minimum
    const double step = (hi - lo) / (grid_points - 1);
    double a = std::max(lo, best_s - step), b = std::min(hi, best_s + step);
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
    double f1 = gap_at(x1), f2 = gap_at(x2);
    while (b - a > 1e-4) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = gap_at(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = gap_at(x2);
        }
    }
    const double s_min = 0.5 * (a + b);
    const double g_min = gap_at(s_min);
    if (g_min < best_gap) return {g_min, s_min};
    return {best_gap, best_s};
}

SweepResult evolve(const LhzInstance& instance, const Schedule& schedule, double t_f,
                   int steps_per_unit_time, StateVector* final_state, int spin_cap) {
    EvolveOutput out = evolve_state(instance, schedule, t_f, steps_per_unit_time, spin_cap);
    SweepResult r;
    r.seed = instance.seed;
    r.t_f = t_f;
    r.norm_drift = out.norm_drift;
    r.fidelity_sq = fidelity_sq(out.state, instance);
    r.residual_energy = residual_energy(out.state, instance);
    if (final_state) *final_state = std::move(out.state);
    return r;
}

std::vector<EnsembleRow> ensemble_run(const EnsembleConfig& config,
                                      const std::vector<uint64_t>& seeds) {
    {
        std::set<uint64_t> uniq(seeds.begin(), seeds.end());
        if (uniq.size() != seeds.size())
            throw std::invalid_argument("ensemble_run: seeds must be distinct");
    }
    const LhzLayout layout = build_layout(config.n_logical, config.representation);
    std::vector<std::vector<EnsembleRow>> per_seed(seeds.size());

    auto run_one = [&](size_t idx) {
        const uint64_t seed = seeds[idx];
        std::vector<EnsembleRow>& rows = per_seed[idx];
        try {
            const LhzInstance inst =
                sample_instance(layout, seed, config.j_low, config.j_high,
                                config.constraint_strength, config.aux_field);
            for (ScheduleKind kind : {ScheduleKind::Homogeneous, ScheduleKind::Inhomogeneous}) {
                Schedule sched;
                sched.kind = kind;
                sched.r = config.r;
                sched.order = config.order;
                sched.n_driven = layout.n_spins();
                GapResult gap{0.0, 0.0};
                if (config.with_gap) gap = min_gap(inst, sched, config.gap_grid_points);
                for (double tf : config.t_f_values) {
                    const SweepResult s = evolve(inst, sched, tf, config.steps_per_unit_time);
                    EnsembleRow row;
                    row.seed = seed;
                    row.kind = kind;
                    row.r = config.r;
                    row.order = config.order;
                    row.t_f = tf;
                    row.fidelity_sq = s.fidelity_sq;
                    row.residual_energy = s.residual_energy;
                    row.min_gap = gap.gap;
                    row.gap_location = gap.location;
                    row.norm_drift = s.norm_drift;
                    rows.push_back(row);
                }
            }
        } catch (const std::exception& e) {
            EnsembleRow row;
            row.seed = seed;
            row.failed = true;
            row.error = e.what();
            rows.push_back(row);
        }
    };

    int n_threads = config.n_threads > 0 ? config.n_threads
                                         : static_cast<int>(std::thread::hardware_concurrency());
    n_threads = std::max(1, std::min<int>(n_threads, static_cast<int>(seeds.size())));
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < n_threads; ++t)
        pool.emplace_back([&] {
            for (size_t i = next.fetch_add(1); i < seeds.size(); i = next.fetch_add(1)) run_one(i);
        });
    for (auto& t : pool) t.join();

    std::vector<EnsembleRow> rows;
    for (auto& r : per_seed) rows.insert(rows.end(), r.begin(), r.end());
    std::sort(rows.begin(), rows.end(), [](const EnsembleRow& a, const EnsembleRow& b) {
        if (a.seed != b.seed) return a.seed < b.seed;
        if (a.kind != b.kind) return a.kind < b.kind;
        return a.t_f < b.t_f;
    });
    return rows;
}

}  // namespace lhz
