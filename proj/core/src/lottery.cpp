#include "stratitr/lottery.hpp"

#include <cmath>
#include <string>

#include "stratitr/error.hpp"

namespace stratitr {

namespace {

bool is_probability(double p) { return std::isfinite(p) && p >= 0.0 && p <= 1.0; }

}  // namespace

PreferenceType preference_from_int(long long v) {
    if (v == 0) return PreferenceType::Zero;
    if (v == 1) return PreferenceType::One;
    throw ValidationError("preference type must be 0 or 1, got " + std::to_string(v));
}

Lottery::Lottery(double p1) : p1_(p1) {
    if (!is_probability(p1)) throw ValidationError("lottery probability must lie in [0, 1]");
}

Lottery Lottery::from_components(double p1, double p0) {
    if (!is_probability(p1) || !is_probability(p0))
        throw ValidationError("lottery components must lie in [0, 1]");
    if (p1 + p0 != 1.0) throw ValidationError("lottery components must sum to 1");
    return Lottery(p1);
}

Ordering lottery_prefers(const Lottery& p, const Lottery& q, PreferenceType t) {
    // Compare on p1 for both types: p0 > q0 iff p1 < q1, and this avoids the
    // rounding in 1 - p1 merging two distinct lotteries.
    const double a = p.p1();
    const double b = q.p1();
    if (a == b) return Ordering::Indifferent;
    const bool p_more_treatment1 = a > b;
    const bool prefers = (t == PreferenceType::One) == p_more_treatment1;
    return prefers ? Ordering::StrictlyPrefers : Ordering::StrictlyDisprefers;
}

}  // namespace stratitr
