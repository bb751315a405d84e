#include "stratitr/dataset.hpp"

#include <cmath>
#include <string>

namespace stratitr {

namespace {

void check_outcome(double y, double M, std::size_t i) {
    if (!std::isfinite(y)) throw ValidationError("record " + std::to_string(i) + ": outcome is not finite");
    if (std::abs(y) > M)
        throw ValidationError("record " + std::to_string(i) + ": |y| exceeds the outcome bound M");
}

}  // namespace

void validate_records(const SspRctDesign& design, std::span<const SspRctRecord> records) {
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        check_outcome(r.y, design.M, i);
        if (r.d > 1) throw ValidationError("record " + std::to_string(i) + ": d must be 0 or 1");
        if (to_int(r.s) > 1) throw ValidationError("record " + std::to_string(i) + ": s must be 0 or 1");
    }
}

void validate_records(const DrptDesign& design, std::span<const DrptRecord> records) {
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        check_outcome(r.y, design.M, i);
        if (r.d > 1) throw ValidationError("record " + std::to_string(i) + ": d must be 0 or 1");
        if (r.z > 2) throw ValidationError("record " + std::to_string(i) + ": z must be 0, 1 or 2");
        if ((r.z == 0 && r.d != 0) || (r.z == 1 && r.d != 1))
            throw ValidationError("record " + std::to_string(i) + ": forced arm z=" + std::to_string(r.z) +
                                  " requires d=" + std::to_string(r.z));
    }
}

}  // namespace stratitr
