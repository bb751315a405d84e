#include "stratitr/simulate.hpp"

#include <algorithm>
#include <array>

#include "stratitr/error.hpp"
#include "stratitr/itr.hpp"

namespace stratitr {

AtomSampler::AtomSampler(const PopulationSpec& pop) : pop_(pop) {
    validate(pop_);
    cumulative_.reserve(pop_.atoms.size());
    double acc = 0.0;
    for (const auto& a : pop_.atoms) {
        acc += a.w;
        cumulative_.push_back(acc);
    }
}

AgentDraw AtomSampler::draw(double u) const {
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    const auto idx = std::min<std::size_t>(static_cast<std::size_t>(it - cumulative_.begin()),
                                           pop_.atoms.size() - 1);
    const auto& a = pop_.atoms[idx];
    return {a.y0, a.y1, a.t};
}

std::uint64_t dataset_stream_key(std::uint64_t seed) { return derive_key(seed, {0x5e7ULL}); }

void simulate_ssprct_into(const AtomSampler& sampler, const SspRctDesign& design, std::uint64_t key,
                          std::span<SspRctRecord> out) {
    // Each type's best response to the announced rule, evaluated once.
    const Itr announced = design.announced_rule();
    const std::array<PreferenceType, 2> stated_by_type{stated_preference(announced, PreferenceType::Zero),
                                                       stated_preference(announced, PreferenceType::One)};
    const std::array<double, 2> propensity_by_type{design.propensity(stated_by_type[0]),
                                                   design.propensity(stated_by_type[1])};
    CounterRng rng(key);
    for (auto& rec : out) {
        const AgentDraw agent = sampler.draw(rng.uniform01());
        const int t = to_int(agent.t);
        const PreferenceType stated = stated_by_type[t];
        const std::uint8_t d = rng.uniform01() < propensity_by_type[t] ? 1 : 0;
        rec = {agent.outcome(d), d, stated};
    }
}

void simulate_drpt_into(const AtomSampler& sampler, const DrptDesign& design, std::uint64_t key,
                        std::span<DrptRecord> out) {
    const double cut0 = design.q[0];
    const double cut1 = design.q[0] + design.q[1];
    CounterRng rng(key);
    for (auto& rec : out) {
        const AgentDraw agent = sampler.draw(rng.uniform01());
        const double u = rng.uniform01();
        const std::uint8_t z = u < cut0 ? 0 : u < cut1 ? 1 : 2;
        const std::uint8_t d = agent.potential_treatment(z);
        rec = {agent.outcome(d), d, z};
    }
}

SspRctDataset simulate_ssprct(const PopulationSpec& pop, const SspRctDesign& design, std::size_t n,
                              std::uint64_t seed) {
    require_valid(design);
    if (n == 0) throw ValidationError("sample size must be at least 1");
    const AtomSampler sampler(pop);
    std::vector<SspRctRecord> records(n);
    simulate_ssprct_into(sampler, design, dataset_stream_key(seed), records);
    SspRctDesign stored = design;
    stored.M = pop.M;
    return SspRctDataset(stored, std::move(records));
}

DrptDataset simulate_drpt(const PopulationSpec& pop, const DrptDesign& design, std::size_t n,
                          std::uint64_t seed) {
    require_valid(design);
    if (n == 0) throw ValidationError("sample size must be at least 1");
    const AtomSampler sampler(pop);
    std::vector<DrptRecord> records(n);
    simulate_drpt_into(sampler, design, dataset_stream_key(seed), records);
    DrptDesign stored = design;
    stored.M = pop.M;
    return DrptDataset(stored, std::move(records));
}

}  // namespace stratitr
