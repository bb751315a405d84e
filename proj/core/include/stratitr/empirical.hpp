#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "stratitr/welfare.hpp"

namespace stratitr {

struct CateEstimate {
    double value = 0.0;
    double se = 0.0;  // metadata only; never used in decisions
};

/// Effect of vocabulary training relative to mathematics training on the two
/// test scores, for one preference group.
struct GroupEffects {
    CateEstimate on_vocab;
    CateEstimate on_math;
};

struct VocabMathEffects {
    double share_vocab = 0.0;
    GroupEffects vocab_preferrers;
    GroupEffects math_preferrers;

    /// Published summary estimates of the vocabulary/mathematics DRPT.
    static VocabMathEffects reference_table();
};

/// Which preference group is labelled type 1. Treatment 1 is always
/// vocabulary training.
enum class TypeMapping { VocabPreferrersType1, MathPreferrersType1 };

const char* to_string(TypeMapping m);
/// Accepts "vocab" or "math". Throws ValidationError otherwise.
TypeMapping type_mapping_from_string(const char* name);

/// Betas for the outcome (1 - w) * vocab + w * math. E[Y(0)] is set to 0
/// since baseline means are unavailable; decisions do not depend on it.
/// Throws ValidationError unless w in [0, 1].
DerivedParams weighted_params(const VocabMathEffects& eff, double w,
                              TypeMapping mapping = TypeMapping::VocabPreferrersType1);

struct SweepRow {
    double w = 0.0;
    double beta1 = 0.0;
    double beta0 = 0.0;
    double sum = 0.0;
    RuleCase regime = RuleCase::ZeroZero;
    Itr itr;
};

/// Weights where a determinant crosses zero, from the linear-in-w closed
/// form. Absent when the determinant does not cross zero inside [0, 1] or
/// vanishes identically.
struct Breakpoints {
    std::optional<double> beta1_zero;
    std::optional<double> beta0_zero;
    std::optional<double> ate_zero;
};

struct SweepTable {
    TypeMapping mapping = TypeMapping::VocabPreferrersType1;
    std::vector<SweepRow> rows;
    Breakpoints breakpoints;
};

/// Evaluates the optimal rule on w_i = i / (grid - 1), i = 0..grid-1.
/// Throws ValidationError when grid < 2.
SweepTable sweep_weights(const VocabMathEffects& eff, std::size_t grid,
                         TypeMapping mapping = TypeMapping::VocabPreferrersType1);

Breakpoints weight_breakpoints(const VocabMathEffects& eff, TypeMapping mapping);

}  // namespace stratitr
