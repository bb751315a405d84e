#pragma once

#include <span>

#include "stratitr/dataset.hpp"
#include "stratitr/welfare.hpp"

namespace stratitr {

struct Identified {
    double share1 = 0.0;
    double tau1 = 0.0;
    double tau0 = 0.0;
};

/// Population-level identification from an SSP-RCT: the stated share is the
/// true share and each CATE is a within-stratum difference in means.
/// m_dt is E[Y | D=d, S=t].
Identified identify_ssprct(double p_s1, double m11, double m01, double m10, double m00);

/// Identification from a DRPT, treating the group as a three-valued instrument.
/// Throws ValidationError unless 0 < pd1_z2 < 1 (both types must be present).
Identified identify_drpt(double ey_z0, double ey_z1, double ey_z2, double pd1_z2);

struct BetaEstimates {
    double beta1_hat = 0.0;
    double beta0_hat = 0.0;
};

/// One record's contribution to the SSP-RCT estimate of beta_t, before
/// division by n. Lies in [-M/kappa, M/kappa] under the design's overlap.
double ssprct_summand(const SspRctDesign& design, const SspRctRecord& record, PreferenceType t);

/// Inverse-propensity-weighted estimates of beta1 and beta0. The sum is a
/// sequential fold in record order. Empty cells contribute nothing.
/// Throws ValidationError on an empty record span.
BetaEstimates estimate_beta_ssprct(const SspRctDesign& design, std::span<const SspRctRecord> records);
BetaEstimates estimate_beta_ssprct(const SspRctDataset& data);

BetaEstimates estimate_beta_drpt(const DrptDesign& design, std::span<const DrptRecord> records);
BetaEstimates estimate_beta_drpt(const DrptDataset& data);

/// Plug-in statistical treatment rule. Throws ValidationError on non-finite input.
Itr str_decide(const BetaEstimates& est);

}  // namespace stratitr
