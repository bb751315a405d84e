#pragma once

#include <cstdint>

#include "stratitr/lottery.hpp"

namespace stratitr {

/// Individualized treatment rule: probability of treatment 1 for each stated type.
struct Itr {
    double delta1 = 0.0;
    double delta0 = 0.0;

    double for_type(PreferenceType stated) const {
        return stated == PreferenceType::One ? delta1 : delta0;
    }
    Lottery lottery_for(PreferenceType stated) const { return Lottery(for_type(stated)); }
    Itr swapped() const { return {delta0, delta1}; }

    friend bool operator==(const Itr&, const Itr&) = default;
};

/// Throws ValidationError unless both components lie in [0, 1].
void validate(const Itr& itr);
Itr make_itr(double delta1, double delta0);

/// What an agent states when the announced rule leaves it indifferent.
struct TiePolicy {
    enum class Mode { Truthful, Lie, Random };

    Mode mode = Mode::Truthful;
    std::uint64_t seed = 0;

    static TiePolicy truthful() { return {Mode::Truthful, 0}; }
    static TiePolicy lie() { return {Mode::Lie, 0}; }
    /// The coin for agent k is a pure function of (seed, k).
    static TiePolicy random(std::uint64_t seed) { return {Mode::Random, seed}; }
};

/// Utility-maximizing statement of an agent with true type t who knows the rule.
/// `agent` only matters for TiePolicy::Mode::Random.
PreferenceType stated_preference(const Itr& itr, PreferenceType t, const TiePolicy& tie = {},
                                 std::uint64_t agent = 0);

enum class StrategyProofness { Strict, Weak, LyingStrictlyOptimal };

StrategyProofness strategy_proofness(const Itr& itr);

const char* to_string(StrategyProofness sp);

}  // namespace stratitr
