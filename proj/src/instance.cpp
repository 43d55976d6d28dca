#include "lhz/instance.hpp"

#include <stdexcept>

#include <json.hpp>

#include "lhz/rng.hpp"

namespace lhz {

LhzInstance sample_instance(const LhzLayout& layout, uint64_t seed, double j_low,
                            double j_high, double constraint_strength, double aux_field) {
    if (!(j_low < j_high)) throw std::invalid_argument("sample_instance: j_low < j_high required");
    if (layout.representation == Representation::Auxiliary && !(aux_field > 0))
        throw std::invalid_argument("sample_instance: aux_field must be > 0 with auxiliaries");

    LhzInstance inst;
    inst.layout = layout;
    inst.seed = seed;
    inst.j_low = j_low;
    inst.j_high = j_high;
    inst.aux_field = aux_field;
    SplitMix64 rng(seed);
    inst.local_fields.reserve(layout.n_physical);
    for (int k = 0; k < layout.n_physical; ++k)
        inst.local_fields.push_back(rng.uniform(j_low, j_high));
    inst.constraint_strengths.assign(layout.n_constraints, constraint_strength);
    return inst;
}

double constraint_energy(const LhzInstance& instance, std::span<const int> spins) {
    if (static_cast<int>(spins.size()) != instance.layout.n_spins())
        throw std::invalid_argument("constraint_energy: spin count mismatch");
    double e = 0.0;
    for (const Plaquette& p : instance.layout.plaquettes) {
        int prod = 1;
        for (int k : p.members) prod *= spins[k];
        e -= instance.constraint_strengths[p.strength_index] * prod;
    }
    return e;
}

std::string instance_to_json(const LhzInstance& instance) {
    nlohmann::json j;
    j["n_logical"] = instance.layout.n_logical;
    j["representation"] =
        instance.layout.representation == Representation::Auxiliary ? "auxiliary" : "direct";
    j["seed"] = instance.seed;
    j["j_range"] = {instance.j_low, instance.j_high};
    j["local_fields"] = instance.local_fields;
    j["constraint_strengths"] = instance.constraint_strengths;
    j["aux_field"] = instance.aux_field;
    auto& plq = j["plaquettes"] = nlohmann::json::array();
    for (const Plaquette& p : instance.layout.plaquettes) plq.push_back(p.members);
    return j.dump(2);
}

LhzInstance instance_from_json(const std::string& json_text) {
    const auto j = nlohmann::json::parse(json_text);
    const auto rep = j.at("representation").get<std::string>() == "auxiliary"
                         ? Representation::Auxiliary
                         : Representation::Direct;
    LhzInstance inst;
    inst.layout = build_layout(j.at("n_logical").get<int>(), rep);
    inst.seed = j.at("seed").get<uint64_t>();
    inst.j_low = j.at("j_range")[0].get<double>();
    inst.j_high = j.at("j_range")[1].get<double>();
    inst.local_fields = j.at("local_fields").get<std::vector<double>>();
    inst.constraint_strengths = j.at("constraint_strengths").get<std::vector<double>>();
    inst.aux_field = j.at("aux_field").get<double>();
    if (static_cast<int>(inst.local_fields.size()) != inst.layout.n_physical ||
        static_cast<int>(inst.constraint_strengths.size()) != inst.layout.n_constraints)
        throw std::invalid_argument("instance_from_json: size mismatch");
    // sanity: recorded plaquettes must match the layout rule
    const auto& plq = j.at("plaquettes");
    if (plq.size() != inst.layout.plaquettes.size())
        throw std::invalid_argument("instance_from_json: plaquette count mismatch");
    for (size_t l = 0; l < plq.size(); ++l)
        if (plq[l].get<std::vector<int>>() != inst.layout.plaquettes[l].members)
            throw std::invalid_argument("instance_from_json: plaquette mismatch");
    return inst;
}

}  // namespace lhz
