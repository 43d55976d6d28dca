#pragma once

#include <stdexcept>
#include <utility>

namespace lhz {

enum class ScheduleKind { Homogeneous, Inhomogeneous };
enum class SwitchOrder { Ascending, Descending };

// Transverse-field driving protocol. For the inhomogeneous kind, qubits are
// switched off one after another in the linear layout order (or its exact
// reversal), each over its own window in s^r.
struct Schedule {
    ScheduleKind kind = ScheduleKind::Homogeneous;
    double r = 1.0;                          // inhomogeneous only
    SwitchOrder order = SwitchOrder::Ascending;
    int n_driven = 1;                        // spins with scheduled fields

    // rank of qubit k in the switch-off order
    int rank(int k) const {
        return order == SwitchOrder::Ascending ? k : n_driven - 1 - k;
    }

    // field strength on qubit k at normalized time s
    double amplitude(int k, double s) const;
};

// clamp(k + 1 - n_total * s^r, 0, 1); rank k switches off over its window.
double h_inhom(int k, double s, double r, int n_total);

// 1 - s
double h_hom(double s);

// window (s_start, s_end) over which h_inhom ramps from 1 to 0
std::pair<double, double> switch_window(int k, double r, int n_total);

// finite-size continuum label form: clamp(n_p*(x - s^r) + 1, 0, 1)
double h_continuum(double x, double s, double r, int n_p);

// thermodynamic-limit step: 1 if x > tau else 0
double h_step(double x, double tau);

}  // namespace lhz
