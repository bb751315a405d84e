#include "stratitr/welfare.hpp"

#include <cmath>

#include "stratitr/error.hpp"

namespace stratitr {

DerivedParams DerivedParams::from_betas(double beta1, double beta0, double ey0) {
    DerivedParams p;
    p.beta1 = beta1;
    p.beta0 = beta0;
    p.ey0 = ey0;
    return p;
}

DerivedParams DerivedParams::from_moments(double share1, std::optional<double> tau1,
                                          std::optional<double> tau0, double ey0) {
    if (!(share1 >= 0.0 && share1 <= 1.0)) throw ValidationError("share1 must lie in [0, 1]");
    const double share0 = 1.0 - share1;
    if (share1 > 0.0 && !tau1) throw ValidationError("tau1 is required when P(T=1) > 0");
    if (share0 > 0.0 && !tau0) throw ValidationError("tau0 is required when P(T=0) > 0");
    DerivedParams p;
    p.share1 = share1;
    p.tau1 = tau1;
    p.tau0 = tau0;
    p.ey0 = ey0;
    p.beta1 = tau1 ? share1 * *tau1 : 0.0;
    p.beta0 = tau0 ? share0 * *tau0 : 0.0;
    return p;
}

double welfare_true(const DerivedParams& params, const Itr& itr) {
    validate(itr);
    return params.beta1 * itr.delta1 + params.beta0 * itr.delta0 + params.ey0;
}

double welfare_stated(const DerivedParams& params, const Itr& itr) {
    validate(itr);
    if (itr.delta1 > itr.delta0) return welfare_true(params, itr);
    if (itr.delta1 == itr.delta0) return params.ate() * itr.delta1 + params.ey0;
    return welfare_true(params, itr.swapped());
}

Itr naive_itr(const DerivedParams& params, double epsilon) {
    if (!(epsilon >= 0.0 && epsilon <= 1.0)) throw ValidationError("epsilon must lie in [0, 1]");
    auto sign_rule = [epsilon](double beta) { return beta > 0.0 ? 1.0 : beta == 0.0 ? epsilon : 0.0; };
    return {sign_rule(params.beta1), sign_rule(params.beta0)};
}

RuleCase rule_case(double beta1, double beta0) {
    if (std::isnan(beta1) || std::isnan(beta0)) throw ValidationError("beta must not be NaN");
    if (beta1 > 0.0) {
        if (beta0 > 0.0) return RuleCase::PosPos;
        if (beta0 == 0.0) return RuleCase::PosZero;
        return RuleCase::PosNeg;
    }
    if (beta1 == 0.0) {
        if (beta0 > 0.0) return RuleCase::ZeroPos;
        if (beta0 == 0.0) return RuleCase::ZeroZero;
        return RuleCase::ZeroNeg;
    }
    if (beta0 > 0.0) {
        const double sum = beta1 + beta0;
        if (sum < 0.0) return RuleCase::NegPosSumNeg;
        if (sum == 0.0) return RuleCase::NegPosSumZero;
        return RuleCase::NegPosSumPos;
    }
    if (beta0 == 0.0) return RuleCase::NegZero;
    return RuleCase::NegNeg;
}

const char* to_string(RuleCase c) {
    switch (c) {
        case RuleCase::PosPos: return "pos_pos";
        case RuleCase::PosZero: return "pos_zero";
        case RuleCase::PosNeg: return "pos_neg";
        case RuleCase::ZeroPos: return "zero_pos";
        case RuleCase::ZeroZero: return "zero_zero";
        case RuleCase::ZeroNeg: return "zero_neg";
        case RuleCase::NegPosSumNeg: return "neg_pos_sum_neg";
        case RuleCase::NegPosSumZero: return "neg_pos_sum_zero";
        case RuleCase::NegPosSumPos: return "neg_pos_sum_pos";
        case RuleCase::NegZero: return "neg_zero";
        case RuleCase::NegNeg: return "neg_neg";
    }
    return "unknown";
}

const char* describe(RuleCase c) {
    switch (c) {
        case RuleCase::PosPos: return "beta1>0, beta0>0";
        case RuleCase::PosZero: return "beta1>0, beta0=0";
        case RuleCase::PosNeg: return "beta1>0, beta0<0";
        case RuleCase::ZeroPos: return "beta1=0, beta0>0";
        case RuleCase::ZeroZero: return "beta1=0, beta0=0";
        case RuleCase::ZeroNeg: return "beta1=0, beta0<0";
        case RuleCase::NegPosSumNeg: return "beta1<0, beta0>0, beta1+beta0<0";
        case RuleCase::NegPosSumZero: return "beta1<0, beta0>0, beta1+beta0=0";
        case RuleCase::NegPosSumPos: return "beta1<0, beta0>0, beta1+beta0>0";
        case RuleCase::NegZero: return "beta1<0, beta0=0";
        case RuleCase::NegNeg: return "beta1<0, beta0<0";
    }
    return "unknown";
}

Itr optimal_itr(double beta1, double beta0) {
    switch (rule_case(beta1, beta0)) {
        case RuleCase::PosPos:
        case RuleCase::PosZero:
        case RuleCase::ZeroPos:
        case RuleCase::NegPosSumPos:
            return {1.0, 1.0};
        case RuleCase::PosNeg:
            return {1.0, 0.0};
        case RuleCase::ZeroZero:
        case RuleCase::NegPosSumZero:
            // free epsilon, fixed to 0
            return {0.0, 0.0};
        case RuleCase::ZeroNeg:
        case RuleCase::NegPosSumNeg:
        case RuleCase::NegZero:
        case RuleCase::NegNeg:
            return {0.0, 0.0};
    }
    return {0.0, 0.0};
}

Itr optimal_itr(const DerivedParams& params) { return optimal_itr(params.beta1, params.beta0); }

}  // namespace stratitr
