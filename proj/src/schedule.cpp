#include "lhz/schedule.hpp"

#include <algorithm>
#include <cmath>

namespace lhz {

namespace {
void check_sk(int k, double s, double r, int n_total) {
    if (k < 0 || k >= n_total) throw std::invalid_argument("schedule: qubit rank out of range");
    if (s < 0.0 || s > 1.0) throw std::invalid_argument("schedule: s must be in [0,1]");
    if (!(r > 0.0)) throw std::invalid_argument("schedule: r must be > 0");
}
}  // namespace

double h_inhom(int k, double s, double r, int n_total) {
    check_sk(k, s, r, n_total);
    return std::clamp(k + 1.0 - n_total * std::pow(s, r), 0.0, 1.0);
}

double h_hom(double s) {
    if (s < 0.0 || s > 1.0) throw std::invalid_argument("h_hom: s must be in [0,1]");
    return 1.0 - s;
}

std::pair<double, double> switch_window(int k, double r, int n_total) {
    check_sk(k, 0.0, r, n_total);
    return {std::pow(static_cast<double>(k) / n_total, 1.0 / r),
            std::pow((k + 1.0) / n_total, 1.0 / r)};
}

double h_continuum(double x, double s, double r, int n_p) {
    return std::clamp(n_p * (x - std::pow(s, r)) + 1.0, 0.0, 1.0);
}

double h_step(double x, double tau) { return x > tau ? 1.0 : 0.0; }

double Schedule::amplitude(int k, double s) const {
    if (kind == ScheduleKind::Homogeneous) return h_hom(s);
    return h_inhom(rank(k), s, r, n_driven);
}

}  // namespace lhz
