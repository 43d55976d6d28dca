#include "lhz/landau.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <tuple>

#include <Eigen/Dense>

#include "lhz/quadrature.hpp"

namespace lhz {

namespace {

void check_args(double m, double s, double tau) {
    if (m < -1.0 || m > 1.0) throw std::invalid_argument("free energy: m must be in [-1,1]");
    if (s < 0.0 || s > 1.0) throw std::invalid_argument("free energy: s must be in [0,1]");
    if (tau < 0.0 || tau > 1.0) throw std::invalid_argument("free energy: tau must be in [0,1]");
}

// average of g over the J distribution; split_at marks a kink of g
template <typename G>
double j_average(const JDistribution& d, int nodes, std::optional<double> split_at, G&& g) {
    if (d.kind == JDistribution::Kind::PointMass) return g(d.value);
    if (!(d.low < d.high)) throw std::invalid_argument("j_dist: low < high required");
    double sum = 0.0;
    if (split_at && *split_at > d.low && *split_at < d.high) {
        sum = gl_integrate(d.low, *split_at, nodes, g) + gl_integrate(*split_at, d.high, nodes, g);
    } else {
        sum = gl_integrate(d.low, d.high, nodes, g);
    }
    return sum / (d.high - d.low);
}

// integral over the qubit label x in [0,1] of sqrt(s^2 z^2 + hhat(x)^2)
// with hhat(x) = clamp(N_p (x - tau) + 1, 0, 1); the ramp subinterval
// [tau - 1/N_p, tau] gets its own quadrature panel.
double label_integral(double z, double s, double tau, int n_physical, int nodes) {
    const double a = std::clamp(tau - 1.0 / n_physical, 0.0, 1.0);
    const double b = std::clamp(tau, 0.0, 1.0);
    const double sz = s * z;
    double out = a * std::abs(sz);  // fields already off
    if (b > a) {
        out += gl_integrate(a, b, nodes, [&](double x) {
            const double h = std::clamp(n_physical * (x - tau) + 1.0, 0.0, 1.0);
            return std::sqrt(sz * sz + h * h);
        });
    }
    if (b < 1.0) out += (1.0 - b) * std::sqrt(sz * sz + 1.0);
    return out;
}

double safe_log_2cosh(double x) {
    const double ax = std::abs(x);
    return ax + std::log1p(std::exp(-2.0 * ax));
}

struct FiniteCoeffs {
    double q4, q3;  // quartic/cubic outside the root (multiplied by s*C)
    double c3, c2;  // m^3/m^2 coefficients inside the root (already times C)
};

FiniteCoeffs finite_coeffs(double c, int n_physical) {
    const double np = n_physical;
    FiniteCoeffs f;
    f.q4 = 3.0 + (6.0 - std::sqrt(9.0 + 72.0 * np)) / np;
    f.q3 = (std::sqrt(1.0 + 8.0 * np) - 3.0) / np;
    f.c3 = c * (4.0 - (std::sqrt(16.0 + 128.0 * np) + 8.0) / np);
    f.c2 = c * ((std::sqrt(2.25 + 18.0 * np) - 4.5) / np);
    return f;
}

}  // namespace

double free_energy_thermo(double m, double s, double tau, double c,
                          const JDistribution& j_dist, int quad_nodes_j) {
    check_args(m, s, tau);
    const double x0 = 4.0 * c * m * m * m;
    const double quartic = 3.0 * s * c * m * m * m * m;
    return quartic + j_average(j_dist, quad_nodes_j, std::nullopt, [&](double j) {
               const double x = x0 + j;
               return -tau * s * x - (1.0 - tau) * std::sqrt(s * s * x * x + 1.0);
           });
}

double free_energy_finite(double m, double s, double tau, double c, int n_physical,
                          const JDistribution& j_dist, int quad_nodes_j,
                          int quad_nodes_label) {
    check_args(m, s, tau);
    if (n_physical < 3) throw std::invalid_argument("free_energy_finite: n_physical >= 3");
    const FiniteCoeffs fc = finite_coeffs(c, n_physical);
    const double zc = fc.c3 * m * m * m + fc.c2 * m * m;
    const double poly = s * c * (fc.q4 * m * m * m * m + fc.q3 * m * m * m);
    return poly - j_average(j_dist, quad_nodes_j, -zc, [&](double j) {
               return label_integral(zc + j, s, tau, n_physical, quad_nodes_label);
           });
}

double free_energy_scaled(double m, double s, double tau, int n_physical,
                          const JDistribution& j_dist, int quad_nodes_j,
                          int quad_nodes_label) {
    check_args(m, s, tau);
    if (n_physical < 3) throw std::invalid_argument("free_energy_scaled: n_physical >= 3");
    const double np = n_physical;
    const double rtn = std::sqrt(np);
    const double rt2 = std::numbers::sqrt2;
    const double m2 = m * m, m3 = m2 * m, m4 = m3 * m;
    const double poly =
        3.0 * m4 * rtn + std::sqrt(8.0) * (m3 - 3.0 * m4) +
        (1.0 / rtn) * (m4 * (6.0 - 3.0 / (4.0 * rt2)) + m3 * (1.0 / (4.0 * rt2) - 3.0)) -
        (1.0 / (128.0 * rt2)) * (1.0 / np) * (m3 - 3.0 * m4);
    const double zc =
        4.0 * m3 * rtn + std::sqrt(8.0) * (1.5 * m2 - 4.0 * m3) -
        (1.0 / rtn) * (8.0 * m3 / rt2 - m2 * (3.0 / (8.0 * rt2) - 4.5)) -
        (1.0 / np) * ((1.5 * m2 - 4.0 * m3) / (128.0 * rt2));
    return s * poly - j_average(j_dist, quad_nodes_j, -zc, [&](double j) {
               return label_integral(zc + j, s, tau, n_physical, quad_nodes_label);
           });
}

double free_energy_finite_temperature(double m, double s, double tau, double c,
                                      int n_physical, double beta,
                                      const std::vector<double>& j_samples) {
    check_args(m, s, tau);
    if (!(beta > 0.0)) throw std::invalid_argument("free_energy_finite_temperature: beta > 0");
    if (static_cast<int>(j_samples.size()) != n_physical)
        throw std::invalid_argument("free_energy_finite_temperature: need one J_k per qubit");
    const FiniteCoeffs fc = finite_coeffs(c, n_physical);
    const double zc = fc.c3 * m * m * m + fc.c2 * m * m;
    double sum = 0.0;
    for (int k = 0; k < n_physical; ++k) {
        const double h = std::clamp(k + 1.0 - n_physical * tau, 0.0, 1.0);
        const double z = s * (zc + j_samples[k]);
        sum += safe_log_2cosh(beta * std::sqrt(z * z + h * h));
    }
    return s * c * (fc.q4 * std::pow(m, 4) + fc.q3 * std::pow(m, 3)) -
           sum / (beta * n_physical);
}

double FreeEnergyFamily::value(double m, double s, double tau) const {
    switch (variant) {
        case FreeEnergyVariant::Thermo:
            return free_energy_thermo(m, s, tau, constraint_strength, j_dist, quad_nodes_j);
        case FreeEnergyVariant::FiniteSize:
            return free_energy_finite(m, s, tau, constraint_strength, n_physical, j_dist,
                                      quad_nodes_j, quad_nodes_label);
        case FreeEnergyVariant::ScaledC:
            return free_energy_scaled(m, s, tau, n_physical, j_dist, quad_nodes_j,
                                      quad_nodes_label);
        case FreeEnergyVariant::FiniteTemperature:
            return free_energy_finite_temperature(m, s, tau, constraint_strength, n_physical,
                                                  beta, j_samples);
    }
    throw std::logic_error("unknown free-energy variant");
}

namespace {

// golden-section minimum of g on [a, b]
template <typename G>
std::pair<double, double> golden_min(double a, double b, double xtol, G&& g) {
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
    double f1 = g(x1), f2 = g(x2);
    while (b - a > xtol) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = g(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = g(x2);
        }
    }
    const double x = 0.5 * (a + b);
    return {x, g(x)};
}

}  // namespace

MinimizeResult minimize_over_m(const FreeEnergyFamily& family, double s, double tau,
                               double grid_step) {
    const int n = static_cast<int>(std::lround(2.0 / grid_step));
    std::vector<double> ms(n + 1), fs(n + 1);
    for (int i = 0; i <= n; ++i) {
        ms[i] = -1.0 + 2.0 * i / n;
        fs[i] = family.value(ms[i], s, tau);
    }
    const double spread =
        *std::max_element(fs.begin(), fs.end()) - *std::min_element(fs.begin(), fs.end());
    if (spread < 1e-12) return {0.0, fs[n / 2], true};  // flat in m (e.g. s = 0)

    // refine every local grid minimum
    std::vector<std::pair<double, double>> minima;  // (f, m)
    for (int i = 0; i <= n; ++i) {
        const bool left_ok = i == 0 || fs[i] <= fs[i - 1];
        const bool right_ok = i == n || fs[i] <= fs[i + 1];
        if (!(left_ok && right_ok)) continue;
        const double a = ms[std::max(0, i - 1)], b = ms[std::min(n, i + 1)];
        auto [x, fx] = golden_min(a, b, 1e-8, [&](double m) { return family.value(m, s, tau); });
        minima.emplace_back(fx, x);
    }
    std::sort(minima.begin(), minima.end());
    // drop duplicates of the same basin
    std::vector<std::pair<double, double>> distinct;
    for (const auto& c : minima) {
        bool dup = false;
        for (const auto& d : distinct)
            if (std::abs(c.second - d.second) < 2.0 * grid_step) dup = true;
        if (!dup) distinct.push_back(c);
    }
    MinimizeResult r{distinct[0].second, distinct[0].first, false};
    if (distinct.size() > 1 && distinct[1].first - distinct[0].first < 1e-6) r.is_degenerate = true;
    return r;
}

namespace {

// f', f'', f''' in m by Richardson-extrapolated central differences
std::array<double, 3> m_derivatives(const FreeEnergyFamily& family, double m, double s,
                                    double tau, double h) {
    auto stencil = [&](double hh) -> std::array<double, 3> {
        const double f0 = family.value(m, s, tau);
        const double fp1 = family.value(std::min(1.0, m + hh), s, tau);
        const double fm1 = family.value(std::max(-1.0, m - hh), s, tau);
        const double fp2 = family.value(std::min(1.0, m + 2 * hh), s, tau);
        const double fm2 = family.value(std::max(-1.0, m - 2 * hh), s, tau);
        return {(fp1 - fm1) / (2 * hh), (fp1 - 2 * f0 + fm1) / (hh * hh),
                (fp2 - 2 * fp1 + 2 * fm1 - fm2) / (2 * hh * hh * hh)};
    };
    const auto c = stencil(h);
    const auto f = stencil(h / 2);
    return {(4 * f[0] - c[0]) / 3, (4 * f[1] - c[1]) / 3, (4 * f[2] - c[2]) / 3};
}

double fourth_derivative(const FreeEnergyFamily& family, double m, double s, double tau,
                         double h = 0.01) {
    const double f0 = family.value(m, s, tau);
    const double fp1 = family.value(m + h, s, tau), fm1 = family.value(m - h, s, tau);
    const double fp2 = family.value(m + 2 * h, s, tau), fm2 = family.value(m - 2 * h, s, tau);
    return (fp2 - 4 * fp1 + 6 * f0 - 4 * fm1 + fm2) / (h * h * h * h);
}

}  // namespace

CriticalPoint critical_point(const FreeEnergyFamily& family) {
    constexpr double kFdStep = 0.004;
    auto residual = [&](const Eigen::Vector3d& x) -> Eigen::Vector3d {
        const auto d = m_derivatives(family, x[0], x[1], x[2], kFdStep);
        return {d[0], d[1], d[2]};
    };

    std::optional<CriticalPoint> best;
    Eigen::Vector3d best_r{0, 0, 0};
    const std::array<double, 5> starts{0.1, 0.3, 0.5, 0.7, 0.9};
    for (double m0 : starts)
        for (double s0 : starts)
            for (double t0 : starts) {
                Eigen::Vector3d x{m0, s0, t0};
                Eigen::Vector3d r = residual(x);
                bool converged = false;
                for (int it = 0; it < 60; ++it) {
                    if (r.cwiseAbs().maxCoeff() < 1e-8) {
                        converged = true;
                        break;
                    }
                    // Jacobian by central differences
                    Eigen::Matrix3d jac;
                    for (int c = 0; c < 3; ++c) {
                        const double step = 1e-4;
                        Eigen::Vector3d xp = x, xm = x;
                        xp[c] = std::min(x[c] + step, c == 0 ? 0.95 : 1.0);
                        xm[c] = std::max(x[c] - step, c == 0 ? -0.95 : 0.0);
                        jac.col(c) = (residual(xp) - residual(xm)) / (xp[c] - xm[c]);
                    }
                    Eigen::Vector3d dx = jac.fullPivLu().solve(-r);
                    if (!dx.allFinite()) break;
                    // damped update, kept inside the domain
                    double lambda = 1.0;
                    bool accepted = false;
                    for (int bt = 0; bt < 12; ++bt, lambda *= 0.5) {
                        Eigen::Vector3d xn = x + lambda * dx;
                        xn[0] = std::clamp(xn[0], 0.01, 0.95);
                        xn[1] = std::clamp(xn[1], 0.0, 1.0);
                        xn[2] = std::clamp(xn[2], 0.0, 1.0);
                        const Eigen::Vector3d rn = residual(xn);
                        if (rn.norm() < r.norm() * (1.0 - 1e-4 * lambda) || rn.norm() < 1e-9) {
                            x = xn;
                            r = rn;
                            accepted = true;
                            break;
                        }
                    }
                    if (!accepted) break;
                }
                if (!converged) continue;
                if (!(x[0] > 0.0 && x[0] <= 1.0)) continue;
                if (x[1] < 1e-3 || x[1] > 1.0 || x[2] < 0.0 || x[2] > 1.0) continue;
                const double d4 = fourth_derivative(family, x[0], x[1], x[2]);
                if (!(d4 > 1e-5)) continue;
                if (r.cwiseAbs().maxCoeff() >= 1e-6) continue;
                const bool better =
                    !best || r.cwiseAbs().maxCoeff() < best_r.cwiseAbs().maxCoeff() - 1e-12 ||
                    (std::abs(r.cwiseAbs().maxCoeff() - best_r.cwiseAbs().maxCoeff()) <= 1e-12 &&
                     std::make_tuple(x[0], x[1], x[2]) <
                         std::make_tuple(best->m_c, best->s_c, best->tau_c));
                if (better) {
                    best = CriticalPoint{x[0], x[1], x[2], {r[0], r[1], r[2]}, d4};
                    best_r = r;
                }
            }
    if (!best) throw std::runtime_error("critical_point: no start converged to a valid solution");
    return *best;
}

TransitionLine transition_line(const FreeEnergyFamily& family,
                               const std::vector<double>& s_grid, double tau_low,
                               double tau_high, double min_jump) {
    TransitionLine line;
    for (double s : s_grid) {
        auto m_star = [&](double tau) { return minimize_over_m(family, s, tau).m_star; };
        // coarse scan for a bracket where the minimizer moves
        const int coarse = 64;
        double ta = tau_low, tb = tau_high;
        double ma = m_star(ta);
        bool bracketed = false;
        for (int i = 1; i <= coarse; ++i) {
            const double t = tau_low + (tau_high - tau_low) * i / coarse;
            const double mt = m_star(t);
            if (std::abs(mt - ma) > 0.05) {
                ta = tau_low + (tau_high - tau_low) * (i - 1) / coarse;
                tb = t;
                bracketed = true;
                break;
            }
            ta = t;
            ma = mt;
        }
        if (!bracketed) continue;  // single-phase slice
        double m_lo = m_star(ta), m_hi = m_star(tb);
        const double mid = 0.5 * (m_lo + m_hi);
        while (tb - ta > 1e-7) {
            const double t = 0.5 * (ta + tb);
            const double mt = m_star(t);
            if (std::abs(mt - m_lo) < std::abs(mt - m_hi)) {
                ta = t;
                m_lo = mt;
            } else {
                tb = t;
                m_hi = mt;
            }
        }
        (void)mid;
        const double jump = std::abs(m_hi - m_lo);
        if (jump < min_jump) continue;
        line.points.push_back({s, 0.5 * (ta + tb), m_lo, m_hi, jump});
    }
    return line;
}

}  // namespace lhz
