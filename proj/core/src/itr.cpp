#include "stratitr/itr.hpp"

#include <cmath>

#include "stratitr/error.hpp"
#include "stratitr/random.hpp"

namespace stratitr {

void validate(const Itr& itr) {
    auto ok = [](double d) { return std::isfinite(d) && d >= 0.0 && d <= 1.0; };
    if (!ok(itr.delta1) || !ok(itr.delta0))
        throw ValidationError("ITR components must lie in [0, 1]");
}

Itr make_itr(double delta1, double delta0) {
    Itr itr{delta1, delta0};
    validate(itr);
    return itr;
}

PreferenceType stated_preference(const Itr& itr, PreferenceType t, const TiePolicy& tie,
                                 std::uint64_t agent) {
    validate(itr);
    if (itr.delta1 > itr.delta0) return t;
    if (itr.delta1 < itr.delta0) return opposite(t);
    switch (tie.mode) {
        case TiePolicy::Mode::Truthful:
            return t;
        case TiePolicy::Mode::Lie:
            return opposite(t);
        case TiePolicy::Mode::Random:
            return (CounterRng::at(tie.seed, agent) >> 63) != 0 ? opposite(t) : t;
    }
    return t;
}

StrategyProofness strategy_proofness(const Itr& itr) {
    validate(itr);
    if (itr.delta1 > itr.delta0) return StrategyProofness::Strict;
    if (itr.delta1 == itr.delta0) return StrategyProofness::Weak;
    return StrategyProofness::LyingStrictlyOptimal;
}

const char* to_string(StrategyProofness sp) {
    switch (sp) {
        case StrategyProofness::Strict:
            return "strict strategy-proof";
        case StrategyProofness::Weak:
            return "weak strategy-proof";
        case StrategyProofness::LyingStrictlyOptimal:
            return "not strategy-proof (lying strictly optimal)";
    }
    return "unknown";
}

}  // namespace stratitr
