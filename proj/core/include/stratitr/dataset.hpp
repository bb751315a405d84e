#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "stratitr/design.hpp"
#include "stratitr/error.hpp"

namespace stratitr {

struct SspRctRecord {
    double y = 0.0;
    std::uint8_t d = 0;
    PreferenceType s = PreferenceType::Zero;

    friend bool operator==(const SspRctRecord&, const SspRctRecord&) = default;
};

struct DrptRecord {
    double y = 0.0;
    std::uint8_t d = 0;
    std::uint8_t z = 0;

    friend bool operator==(const DrptRecord&, const DrptRecord&) = default;
};

/// Throws ValidationError on the first offending record (index in message).
void validate_records(const SspRctDesign& design, std::span<const SspRctRecord> records);
void validate_records(const DrptDesign& design, std::span<const DrptRecord> records);

/// Immutable, validated trial data together with the design that produced it.
template <class Design, class Record>
class TrialDataset {
   public:
    using design_type = Design;
    using record_type = Record;

    /// Throws ValidationError when records is empty or any record breaks
    /// the bound |y| <= M or the design's support constraints.
    TrialDataset(Design design, std::vector<Record> records)
        : design_(design), records_(std::move(records)) {
        if (records_.empty()) throw ValidationError("dataset must contain at least one record");
        validate_records(design_, records_);
    }

    const Design& design() const { return design_; }
    std::span<const Record> records() const { return records_; }
    std::size_t size() const { return records_.size(); }

   private:
    Design design_;
    std::vector<Record> records_;
};

using SspRctDataset = TrialDataset<SspRctDesign, SspRctRecord>;
using DrptDataset = TrialDataset<DrptDesign, DrptRecord>;

}  // namespace stratitr
