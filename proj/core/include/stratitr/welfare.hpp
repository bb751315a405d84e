#pragma once

#include <optional>

#include "stratitr/itr.hpp"

namespace stratitr {

/// Population quantities that determine welfare under any ITR.
///
/// beta1 = P(T=1) * tau(1) and beta0 = P(T=0) * tau(0); beta1 + beta0 is the
/// average treatment effect. The share and CATEs are optional because many
/// callers (and every decision rule) only need the betas. A CATE is absent
/// when its preference type has no mass; the matching beta is then 0.
struct DerivedParams {
    double beta1 = 0.0;
    double beta0 = 0.0;
    double ey0 = 0.0;
    std::optional<double> share1;
    std::optional<double> tau1;
    std::optional<double> tau0;

    double ate() const { return beta1 + beta0; }

    static DerivedParams from_betas(double beta1, double beta0, double ey0 = 0.0);
    /// Throws ValidationError if share1 is outside [0, 1], or if a CATE is
    /// missing for a type with positive mass.
    static DerivedParams from_moments(double share1, std::optional<double> tau1,
                                      std::optional<double> tau0, double ey0);
};

/// Welfare when the planner observes true types.
double welfare_true(const DerivedParams& params, const Itr& itr);

/// Welfare when agents best-respond to the announced rule. Identical to
/// welfare_true for strategy-proof rules; the arguments swap roles when
/// lying is strictly optimal.
double welfare_stated(const DerivedParams& params, const Itr& itr);

/// Welfare maximizer that ignores strategic statements: sign rule on each beta,
/// with `epsilon` used for a zero beta.
Itr naive_itr(const DerivedParams& params, double epsilon);

/// The eleven sign configurations of (beta1, beta0, beta1 + beta0) that
/// select the optimal rule.
enum class RuleCase {
    PosPos,
    PosZero,
    PosNeg,
    ZeroPos,
    ZeroZero,
    ZeroNeg,
    NegPosSumNeg,
    NegPosSumZero,
    NegPosSumPos,
    NegZero,
    NegNeg,
};

RuleCase rule_case(double beta1, double beta0);
inline RuleCase rule_case(const DerivedParams& params) {
    return rule_case(params.beta1, params.beta0);
}

/// Short machine-friendly label, e.g. "pos_neg" or "neg_pos_sum_zero".
const char* to_string(RuleCase c);
/// Human-readable sign condition, e.g. "beta1>0, beta0<0".
const char* describe(RuleCase c);

/// Welfare maximizer under strategic statements. Always returns a rule with
/// delta1 >= delta0. The two free-epsilon cases resolve to (0, 0).
Itr optimal_itr(const DerivedParams& params);
Itr optimal_itr(double beta1, double beta0);

}  // namespace stratitr
