#include "lhz/layout.hpp"

#include <cmath>
#include <stdexcept>

namespace lhz {

Counts counts(int n_logical) {
    if (n_logical < 3) throw std::invalid_argument("counts: n_logical must be >= 3");
    const int np = n_logical * (n_logical - 1) / 2;
    return Counts{np, np - n_logical + 1, n_logical - 2};
}

int LhzLayout::qubit_index(int i, int j) const {
    if (i < 1 || j <= i || j > n_logical) throw std::invalid_argument("qubit_index: bad pair");
    const int d = j - i;  // row, bottom row d=1
    int base = 0;
    for (int dd = 1; dd < d; ++dd) base += n_logical - dd;
    return base + (i - 1);
}

std::pair<int, int> LhzLayout::qubit_pair(int index) const {
    if (index < 0 || index >= n_physical) throw std::invalid_argument("qubit_pair: bad index");
    int d = 1;
    while (index >= n_logical - d) {
        index -= n_logical - d;
        ++d;
    }
    return {index + 1, index + 1 + d};
}

LhzLayout build_layout(int n_logical, Representation representation) {
    const Counts c = counts(n_logical);
    LhzLayout lay;
    lay.n_logical = n_logical;
    lay.n_physical = c.n_physical;
    lay.n_constraints = c.n_constraints;
    lay.n_auxiliary = c.n_auxiliary;
    lay.representation = representation;

    // One plaquette per pair (i, j) with j - i >= 2:
    //   {(i, j-1), (i, j), (i+1, j)} plus (i+1, j-1) when i+1 < j-1.
    // Bottom row (j = i+2) gives the three-body terms; in the Auxiliary
    // representation each of those gets a dedicated pinned spin instead.
    int next_aux = c.n_physical;
    int strength = 0;
    for (int d = 2; d < n_logical; ++d) {
        for (int i = 1; i + d <= n_logical; ++i) {
            const int j = i + d;
            Plaquette p;
            p.members = {lay.qubit_index(i, j - 1), lay.qubit_index(i, j),
                         lay.qubit_index(i + 1, j)};
            if (i + 1 < j - 1) {
                p.members.push_back(lay.qubit_index(i + 1, j - 1));
            } else if (representation == Representation::Auxiliary) {
                p.members.push_back(next_aux++);
            }
            p.strength_index = strength++;
            lay.plaquettes.push_back(std::move(p));
        }
    }
    return lay;
}

std::pair<double, double> plaquette_ratios(int n_logical) {
    if (n_logical < 3) throw std::invalid_argument("plaquette_ratios: n_logical must be >= 3");
    const double nl = n_logical;
    const double f3 = (nl - 2.0) / (nl * nl / 2.0 - 1.5 * nl + 1.0);
    return {f3, 1.0 - f3};
}

}  // namespace lhz
