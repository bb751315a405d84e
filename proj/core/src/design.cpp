#include "stratitr/design.hpp"

#include <cmath>

#include "stratitr/error.hpp"

namespace stratitr {

namespace {

bool valid_kappa(double kappa) { return std::isfinite(kappa) && kappa > 0.0 && kappa < 0.5; }
bool valid_bound(double M) { return !std::isnan(M) && M > 0.0; }

void add(std::vector<DesignViolation>& out, DesignViolation v) {
    for (auto existing : out)
        if (existing == v) return;
    out.push_back(v);
}

}  // namespace

const char* to_string(DesignViolation v) {
    switch (v) {
        case DesignViolation::NotStrictlyOrdered: return "NotStrictlyOrdered";
        case DesignViolation::OverlapViolated: return "OverlapViolated";
        case DesignViolation::BoundsViolated: return "BoundsViolated";
        case DesignViolation::ProbabilitiesDoNotSumToOne: return "ProbabilitiesDoNotSumToOne";
    }
    return "Unknown";
}

std::vector<DesignViolation> validate_ssprct_design(const SspRctDesign& d) {
    std::vector<DesignViolation> out;
    const bool p_in_open_unit = d.p0 > 0.0 && d.p0 < 1.0 && d.p1 > 0.0 && d.p1 < 1.0;
    if (!p_in_open_unit || !valid_kappa(d.kappa) || !valid_bound(d.M)) add(out, DesignViolation::BoundsViolated);
    if (!(d.p0 < d.p1)) add(out, DesignViolation::NotStrictlyOrdered);
    if (valid_kappa(d.kappa)) {
        for (double p : {d.p0, d.p1})
            if (!(p >= d.kappa && p <= 1.0 - d.kappa)) add(out, DesignViolation::OverlapViolated);
    }
    return out;
}

std::vector<DesignViolation> validate_drpt_design(const DrptDesign& d) {
    std::vector<DesignViolation> out;
    double total = 0.0;
    bool in_range = true;
    for (double q : d.q) {
        in_range = in_range && q > 0.0 && q < 1.0;
        total += q;
    }
    if (!in_range || !valid_kappa(d.kappa) || !valid_bound(d.M)) add(out, DesignViolation::BoundsViolated);
    if (!(std::abs(total - 1.0) <= 1e-12)) add(out, DesignViolation::ProbabilitiesDoNotSumToOne);
    if (valid_kappa(d.kappa)) {
        for (double q : d.q)
            if (!(q >= d.kappa && q <= 1.0 - d.kappa)) add(out, DesignViolation::OverlapViolated);
    }
    return out;
}

std::string describe_violations(const std::vector<DesignViolation>& violations) {
    std::string s;
    for (auto v : violations) {
        if (!s.empty()) s += ", ";
        s += to_string(v);
    }
    return s;
}

void require_valid(const SspRctDesign& design) {
    const auto v = validate_ssprct_design(design);
    if (!v.empty()) throw ValidationError("invalid SSP-RCT design: " + describe_violations(v));
}

void require_valid(const DrptDesign& design) {
    const auto v = validate_drpt_design(design);
    if (!v.empty()) throw ValidationError("invalid DRPT design: " + describe_violations(v));
}

}  // namespace stratitr
