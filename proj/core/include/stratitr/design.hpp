#pragma once

#include <array>
#include <limits>
#include <string>
#include <vector>

#include "stratitr/itr.hpp"

namespace stratitr {

inline constexpr double kUnboundedOutcome = std::numeric_limits<double>::infinity();

/// RCT with a pre-treatment preference survey. p1 and p0 are the announced
/// propensities P(D=1 | S=1) and P(D=1 | S=0).
struct SspRctDesign {
    double p1 = 0.5;
    double p0 = 0.25;
    double M = kUnboundedOutcome;
    double kappa = 0.25;

    double propensity(PreferenceType stated) const {
        return stated == PreferenceType::One ? p1 : p0;
    }
    /// The announced assignment rule seen by survey respondents.
    Itr announced_rule() const { return {p1, p0}; }
};

/// Three-arm trial: group 0 forces treatment 0, group 1 forces treatment 1,
/// group 2 lets agents choose.
struct DrptDesign {
    std::array<double, 3> q{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
    double M = kUnboundedOutcome;
    double kappa = 0.25;
};

enum class DesignViolation {
    NotStrictlyOrdered,
    OverlapViolated,
    BoundsViolated,
    ProbabilitiesDoNotSumToOne,
};

const char* to_string(DesignViolation v);

/// Empty result means the design is valid. A valid SSP-RCT design makes
/// truthful reporting the unique best response of every agent.
std::vector<DesignViolation> validate_ssprct_design(const SspRctDesign& design);
std::vector<DesignViolation> validate_drpt_design(const DrptDesign& design);

/// Throw ValidationError listing every violation.
void require_valid(const SspRctDesign& design);
void require_valid(const DrptDesign& design);

std::string describe_violations(const std::vector<DesignViolation>& violations);

}  // namespace stratitr
