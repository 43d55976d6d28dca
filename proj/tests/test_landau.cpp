#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "lhz/landau.hpp"

using namespace lhz;

namespace {

FreeEnergyFamily thermo_family(double c = 2.0,
                               JDistribution d = JDistribution::uniform(-1.0, 1.0)) {
    FreeEnergyFamily fam;
    fam.variant = FreeEnergyVariant::Thermo;
    fam.constraint_strength = c;
    fam.j_dist = d;
    return fam;
}

}  // namespace

TEST_CASE("thermodynamic free energy closed-form values") {
    // s = 0: the field term survives alone, f = -(1 - tau), independent of m
    for (double m : {-1.0, -0.3, 0.0, 0.6, 1.0})
        for (double tau : {0.0, 0.3, 1.0})
            CHECK(free_energy_thermo(m, 0.0, tau, 2.0, JDistribution::uniform(-1, 1)) ==
                  doctest::Approx(-(1.0 - tau)).epsilon(1e-12));

    // point-mass J = 0, m = s = tau = 1, C = 2: 3*2 - (8 + 0) = -2
    CHECK(free_energy_thermo(1.0, 1.0, 1.0, 2.0, JDistribution::point_mass(0.0)) ==
          doctest::Approx(-2.0).epsilon(1e-12));

    // point-mass closed form at general arguments
    const double m = 0.7, s = 0.4, tau = 0.3, c = 2.0, j = -0.25;
    const double z = 4.0 * c * m * m * m + j;
    const double expect = 3.0 * s * c * m * m * m * m - tau * s * z -
                          (1.0 - tau) * std::sqrt(s * s * z * z + 1.0);
    CHECK(free_energy_thermo(m, s, tau, c, JDistribution::point_mass(j)) ==
          doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("symmetric J distribution gives an odd-even split") {
    // with J ~ Uniform(-a, a) the sqrt term is even in m, the drift term odd:
    // f(m) - f(-m) = -2 tau s 4 C m^3
    const double c = 2.0, s = 0.47, tau = 0.36;
    const auto d = JDistribution::uniform(-1.0, 1.0);
    for (double m : {0.2, 0.55, 0.9}) {
        const double lhs = free_energy_thermo(m, s, tau, c, d) -
                           free_energy_thermo(-m, s, tau, c, d);
        CHECK(lhs == doctest::Approx(-2.0 * tau * s * 4.0 * c * m * m * m).epsilon(1e-10));
    }
}

TEST_CASE("quadrature node doubling is converged") {
    for (double m : {0.1, 0.68}) {
        const double a =
            free_energy_thermo(m, 0.22, 0.39, 2.0, JDistribution::uniform(-1, 1), 64);
        const double b =
            free_energy_thermo(m, 0.22, 0.39, 2.0, JDistribution::uniform(-1, 1), 128);
        CHECK(std::abs(a - b) < 1e-9);

        const double fa = free_energy_finite(m, 0.22, 0.39, 2.0, 210,
                                             JDistribution::uniform(-1, 1), 64, 32);
        const double fb = free_energy_finite(m, 0.22, 0.39, 2.0, 210,
                                             JDistribution::uniform(-1, 1), 128, 64);
        CHECK(std::abs(fa - fb) < 1e-9);

        const double sa =
            free_energy_scaled(m, 0.22, 0.39, 300, JDistribution::uniform(-1, 1), 64, 32);
        const double sb =
            free_energy_scaled(m, 0.22, 0.39, 300, JDistribution::uniform(-1, 1), 128, 64);
        CHECK(std::abs(sa - sb) < 1e-9);
    }
}

TEST_CASE("finite-size surface approaches the thermodynamic one") {
    // the two surfaces share a limit wherever the drift argument 4Cm^3 + J
    // stays positive over the whole J support (m^3 > 1/(4C)); this covers
    // the critical region
    for (double m : {0.55, 0.68, 0.9}) {
        for (double s : {0.22, 0.5}) {
            const double thermo =
                free_energy_thermo(m, s, 0.39, 2.0, JDistribution::uniform(-1, 1));
            const double mid = free_energy_finite(m, s, 0.39, 2.0, 10000,
                                                  JDistribution::uniform(-1, 1));
            const double big = free_energy_finite(m, s, 0.39, 2.0, 1000000,
                                                  JDistribution::uniform(-1, 1));
            CHECK(std::abs(big - thermo) < 2e-3);
            // O(1/sqrt(N_p)) approach: two decades of N_p shrink the gap ~10x
            CHECK(std::abs(big - thermo) < 0.25 * std::abs(mid - thermo));
        }
    }
}

TEST_CASE("finite-temperature surface") {
    const double m = 0.5, s = 0.4, tau = 0.3, c = 2.0;
    const int np = 4000;
    const std::vector<double> js(np, 0.3);
    CHECK_THROWS(free_energy_finite_temperature(m, s, tau, c, np, 10.0, {0.3}));

    // beta -> infinity recovers the zero-temperature finite-size surface
    const double cold = free_energy_finite_temperature(m, s, tau, c, np, 400.0, js);
    const double zero_t =
        free_energy_finite(m, s, tau, c, np, JDistribution::point_mass(0.3));
    CHECK(std::abs(cold - zero_t) < 5e-3);

    // f increases monotonically with beta towards the T = 0 limit
    const double b1 = free_energy_finite_temperature(m, s, tau, c, np, 1.0, js);
    const double b2 = free_energy_finite_temperature(m, s, tau, c, np, 5.0, js);
    const double b3 = free_energy_finite_temperature(m, s, tau, c, np, 50.0, js);
    CHECK(b1 < b2);
    CHECK(b2 < b3);
    CHECK(b3 <= cold + 1e-9);  // same discretization, monotone limit
}

TEST_CASE("minimize_over_m finds the global minimum") {
    auto fam = thermo_family();

    // s = 0: flat surface, degenerate
    const auto flat = minimize_over_m(fam, 0.0, 0.3);
    CHECK(flat.is_degenerate);
    CHECK(flat.f_star == doctest::Approx(-0.7).epsilon(1e-10));

    // deep in the ordered region the minimizer is strongly magnetized
    const auto ferro = minimize_over_m(fam, 0.9, 0.9);
    CHECK(ferro.m_star > 0.5);
    CHECK_FALSE(ferro.is_degenerate);
    // self-consistency against a dense scan
    for (int i = 0; i <= 400; ++i) {
        const double m = -1.0 + 2.0 * i / 400.0;
        CHECK(ferro.f_star <= fam.value(m, 0.9, 0.9) + 1e-9);
    }

    // disordered region: minimizer at m near 0
    const auto para = minimize_over_m(fam, 0.05, 0.05);
    CHECK(std::abs(para.m_star) < 0.2);
}

TEST_CASE("thermodynamic critical point") {
    const auto cp = critical_point(thermo_family());
    CHECK(cp.m_c == doctest::Approx(0.679795).epsilon(2e-3));
    CHECK(cp.s_c == doctest::Approx(0.219232).epsilon(2e-3));
    CHECK(cp.tau_c == doctest::Approx(0.38911).epsilon(2e-3));
    for (double r : cp.residuals) CHECK(std::abs(r) < 1e-6);
    CHECK(cp.fourth_derivative > 0.0);
}

TEST_CASE("transition line has a first-order jump above the critical s") {
    auto fam = thermo_family();
    const auto line = transition_line(fam, {0.25, 0.30}, 0.0, 1.0, 0.01);
    REQUIRE(line.points.size() == 2);
    for (const auto& p : line.points) {
        CHECK(p.tau > 0.0);
        CHECK(p.tau < 1.0);
        CHECK(p.jump >= 0.01);
        CHECK(p.m_above > p.m_below);
        // the minimizers on either side of tau* really are the global minima
        const auto below = minimize_over_m(fam, p.s, p.tau - 1e-4);
        const auto above = minimize_over_m(fam, p.s, p.tau + 1e-4);
        CHECK(std::abs(below.m_star - p.m_below) < 0.05);
        CHECK(std::abs(above.m_star - p.m_above) < 0.05);
    }
    // the jump grows with s away from the critical endpoint
    CHECK(line.points[1].jump > line.points[0].jump);
}
