#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lhz/layout.hpp"

namespace lhz {

struct LhzInstance {
    LhzLayout layout;
    std::vector<double> local_fields;         // J_k, one per physical qubit
    std::vector<double> constraint_strengths; // C_l, one per plaquette
    double aux_field = 0.0;                   // pinning field on auxiliary spins
    uint64_t seed = 0;
    double j_low = 0.0, j_high = 0.0;

    // longitudinal field seen by spin k, auxiliary pinning included
    double field_at(int k) const {
        return k < layout.n_physical ? local_fields[k] : aux_field;
    }
};

// J_k i.i.d. uniform on [j_low, j_high) from a deterministic stream; all
// C_l equal to constraint_strength.
LhzInstance sample_instance(const LhzLayout& layout, uint64_t seed, double j_low,
                            double j_high, double constraint_strength, double aux_field);

// -sum_l C_l prod_{k in l} spins[k]; constraint part only, no local fields.
double constraint_energy(const LhzInstance& instance, std::span<const int> spins);

// JSON round trip for reproducibility manifests.
std::string instance_to_json(const LhzInstance& instance);
LhzInstance instance_from_json(const std::string& json_text);

}  // namespace lhz
