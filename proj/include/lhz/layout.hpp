#pragma once

#include <cstdint>
#include <vector>

namespace lhz {

enum class Representation { Direct, Auxiliary };

struct Counts {
    int n_physical;
    int n_constraints;
    int n_auxiliary;
};

// N_p = N_l(N_l-1)/2, N_c = N_p - N_l + 1, N_a = N_l - 2
Counts counts(int n_logical);

struct Plaquette {
    std::vector<int> members;  // 3 or 4 distinct spin indices
    int strength_index;        // index into LhzInstance::constraint_strengths
};

// Triangular parity lattice for n_logical spins. Physical qubit (i,j),
// 1 <= i < j <= N_l, lives at a linear index given by row-major order over
// the triangle, bottom row first; auxiliaries are appended after the
// physical qubits.
struct LhzLayout {
    int n_logical;
    int n_physical;
    int n_constraints;
    int n_auxiliary;
    Representation representation;
    std::vector<Plaquette> plaquettes;

    // total spins carried by a configuration in this representation
    int n_spins() const {
        return representation == Representation::Auxiliary ? n_physical + n_auxiliary
                                                           : n_physical;
    }

    // linear index of the physical qubit encoding logical pair (i, j), 1-based, i < j
    int qubit_index(int i, int j) const;
    // inverse of qubit_index
    std::pair<int, int> qubit_pair(int index) const;
};

LhzLayout build_layout(int n_logical, Representation representation);

// (F3, F4): fraction of three- and four-body constraints, Appendix ratio
std::pair<double, double> plaquette_ratios(int n_logical);

}  // namespace lhz
