#pragma once

#include <vector>

namespace lhz {

struct QuadRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Gauss-Legendre rule on [-1, 1]; nodes computed by Newton iteration on P_n.
const QuadRule& gauss_legendre(int n);

// integral of f over [a, b] with an n-point Gauss-Legendre rule
template <typename F>
double gl_integrate(double a, double b, int n, F&& f) {
    const QuadRule& q = gauss_legendre(n);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double sum = 0.0;
    for (size_t i = 0; i < q.nodes.size(); ++i) sum += q.weights[i] * f(mid + half * q.nodes[i]);
    return half * sum;
}

}  // namespace lhz
