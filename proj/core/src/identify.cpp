#include "stratitr/identify.hpp"

#include <cmath>

#include "stratitr/error.hpp"

namespace stratitr {

Identified identify_ssprct(double p_s1, double m11, double m01, double m10, double m00) {
    if (!(p_s1 >= 0.0 && p_s1 <= 1.0)) throw ValidationError("P(S=1) must lie in [0, 1]");
    return {p_s1, m11 - m01, m10 - m00};
}

Identified identify_drpt(double ey_z0, double ey_z1, double ey_z2, double pd1_z2) {
    if (!(pd1_z2 > 0.0 && pd1_z2 < 1.0))
        throw ValidationError(
            "P(D=1 | Z=2) must lie strictly inside (0, 1); a preference type is absent and its CATE "
            "is not identified");
    return {pd1_z2, (ey_z2 - ey_z0) / pd1_z2, (ey_z1 - ey_z2) / (1.0 - pd1_z2)};
}

double ssprct_summand(const SspRctDesign& design, const SspRctRecord& r, PreferenceType t) {
    if (r.s != t) return 0.0;
    const double p = design.propensity(t);
    return r.d == 1 ? r.y / p : -r.y / (1.0 - p);
}

BetaEstimates estimate_beta_ssprct(const SspRctDesign& design, std::span<const SspRctRecord> records) {
    if (records.empty()) throw ValidationError("cannot estimate from an empty dataset");
    const double p1 = design.p1;
    const double p0 = design.p0;
    double sum1 = 0.0;
    double sum0 = 0.0;
    for (const auto& r : records) {
        if (r.s == PreferenceType::One) sum1 += r.d == 1 ? r.y / p1 : -r.y / (1.0 - p1);
        else sum0 += r.d == 1 ? r.y / p0 : -r.y / (1.0 - p0);
    }
    const double n = static_cast<double>(records.size());
    return {sum1 / n, sum0 / n};
}

BetaEstimates estimate_beta_ssprct(const SspRctDataset& data) {
    return estimate_beta_ssprct(data.design(), data.records());
}

BetaEstimates estimate_beta_drpt(const DrptDesign& design, std::span<const DrptRecord> records) {
    if (records.empty()) throw ValidationError("cannot estimate from an empty dataset");
    const auto& q = design.q;
    double sum1 = 0.0;
    double sum0 = 0.0;
    for (const auto& r : records) {
        switch (r.z) {
            case 0:
                sum1 -= r.y / q[0];
                break;
            case 1:
                sum0 += r.y / q[1];
                break;
            default: {
                const double term = r.y / q[2];
                sum1 += term;
                sum0 -= term;
                break;
            }
        }
    }
    const double n = static_cast<double>(records.size());
    return {sum1 / n, sum0 / n};
}

BetaEstimates estimate_beta_drpt(const DrptDataset& data) {
    return estimate_beta_drpt(data.design(), data.records());
}

Itr str_decide(const BetaEstimates& est) {
    if (!std::isfinite(est.beta1_hat) || !std::isfinite(est.beta0_hat))
        throw ValidationError("beta estimates must be finite");
    return optimal_itr(est.beta1_hat, est.beta0_hat);
}

}  // namespace stratitr
