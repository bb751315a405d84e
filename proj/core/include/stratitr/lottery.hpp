#pragma once

#include <cstdint>

namespace stratitr {

/// Strict preference over the two treatments. There is no indifference value.
enum class PreferenceType : std::uint8_t { Zero = 0, One = 1 };

constexpr PreferenceType opposite(PreferenceType t) {
    return t == PreferenceType::One ? PreferenceType::Zero : PreferenceType::One;
}

constexpr int to_int(PreferenceType t) { return static_cast<int>(t); }

/// Throws ValidationError unless v is 0 or 1.
PreferenceType preference_from_int(long long v);

/// Probability pair (p1, p0) over treatments 1 and 0.
///
/// Only p1 is stored; p0 is always 1 - p1, so the pair sums to one by
/// construction. In IEEE double arithmetic (1 - p1) + p1 == 1 holds exactly
/// for every p1 in [0, 1].
class Lottery {
   public:
    /// Throws ValidationError if p1 is not a number in [0, 1].
    explicit Lottery(double p1);

    /// Checked construction from both components; they must sum to exactly 1.
    static Lottery from_components(double p1, double p0);

    double p1() const { return p1_; }
    double p0() const { return 1.0 - p1_; }
    double probability_of(PreferenceType treatment) const {
        return treatment == PreferenceType::One ? p1() : p0();
    }

    friend bool operator==(const Lottery&, const Lottery&) = default;

   private:
    double p1_;
};

enum class Ordering { StrictlyPrefers, Indifferent, StrictlyDisprefers };

/// How an agent of type t ranks p against q: the lottery that gives the
/// preferred treatment with higher probability wins.
Ordering lottery_prefers(const Lottery& p, const Lottery& q, PreferenceType t);

}  // namespace stratitr
