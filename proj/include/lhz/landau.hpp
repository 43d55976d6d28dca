#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace lhz {

enum class FreeEnergyVariant { Thermo, FiniteSize, ScaledC, FiniteTemperature };

struct JDistribution {
    enum class Kind { Uniform, PointMass };
    Kind kind = Kind::Uniform;
    double low = -1.0;
    double high = 1.0;
    double value = 0.0;  // PointMass

    static JDistribution uniform(double lo, double hi) {
        return {Kind::Uniform, lo, hi, 0.0};
    }
    static JDistribution point_mass(double v) { return {Kind::PointMass, 0.0, 0.0, v}; }
};

// A parameterized Landau free-energy surface f(m; s, tau).
struct FreeEnergyFamily {
    FreeEnergyVariant variant = FreeEnergyVariant::Thermo;
    double constraint_strength = 2.0;   // Thermo/FiniteSize/FiniteTemperature
    int n_physical = 0;                 // FiniteSize/ScaledC/FiniteTemperature
    double beta = 0.0;                  // FiniteTemperature
    JDistribution j_dist = JDistribution::uniform(-1.0, 1.0);
    std::vector<double> j_samples;      // FiniteTemperature
    int quad_nodes_j = 64;
    int quad_nodes_label = 32;

    double value(double m, double s, double tau) const;
};

double free_energy_thermo(double m, double s, double tau, double c,
                          const JDistribution& j_dist, int quad_nodes_j = 64);

double free_energy_finite(double m, double s, double tau, double c, int n_physical,
                          const JDistribution& j_dist, int quad_nodes_j = 64,
                          int quad_nodes_label = 32);

double free_energy_scaled(double m, double s, double tau, int n_physical,
                          const JDistribution& j_dist, int quad_nodes_j = 64,
                          int quad_nodes_label = 32);

double free_energy_finite_temperature(double m, double s, double tau, double c,
                                      int n_physical, double beta,
                                      const std::vector<double>& j_samples);

struct MinimizeResult {
    double m_star;
    double f_star;
    bool is_degenerate;
};

// global minimum over m in [-1, 1]; dense grid plus golden-section refinement
MinimizeResult minimize_over_m(const FreeEnergyFamily& family, double s, double tau,
                               double grid_step = 1e-3);

struct CriticalPoint {
    double m_c, s_c, tau_c;
    std::array<double, 3> residuals;  // f', f'', f''' at the solution
    double fourth_derivative;
};

// Solve f' = f'' = f''' = 0 in (m, s, tau) by damped Newton on
// finite-difference derivatives, multi-start over [0.1, 0.9]^3.
CriticalPoint critical_point(const FreeEnergyFamily& family);

struct TransitionPoint {
    double s, tau;
    double m_below, m_above;
    double jump;
};

struct TransitionLine {
    std::vector<TransitionPoint> points;
};

// For each s, bisect in tau for the jump of the global minimizer; points
// with jump below `min_jump` terminate the line (critical endpoint region).
TransitionLine transition_line(const FreeEnergyFamily& family,
                               const std::vector<double>& s_grid, double tau_low = 0.0,
                               double tau_high = 1.0, double min_jump = 0.01);

}  // namespace lhz
