#include "stratitr/empirical.hpp"

#include <cmath>
#include <string>

#include "stratitr/error.hpp"

namespace stratitr {

namespace {

struct TypedEffects {
    double share1;
    const GroupEffects* type1;
    const GroupEffects* type0;
};

TypedEffects arrange(const VocabMathEffects& eff, TypeMapping mapping) {
    if (!(eff.share_vocab >= 0.0 && eff.share_vocab <= 1.0))
        throw ValidationError("share of vocabulary-preferrers must lie in [0, 1]");
    if (mapping == TypeMapping::VocabPreferrersType1)
        return {eff.share_vocab, &eff.vocab_preferrers, &eff.math_preferrers};
    return {1.0 - eff.share_vocab, &eff.math_preferrers, &eff.vocab_preferrers};
}

double weighted_cate(const GroupEffects& g, double w) {
    return (1.0 - w) * g.on_vocab.value + w * g.on_math.value;
}

// Zero of f(w) = (1 - w) a + w b inside [0, 1].
std::optional<double> linear_root(double a, double b) {
    if (a == b) return std::nullopt;
    const double w = a / (a - b);
    if (!(w >= 0.0 && w <= 1.0)) return std::nullopt;
    return w;
}

}  // namespace

VocabMathEffects VocabMathEffects::reference_table() {
    VocabMathEffects eff;
    eff.share_vocab = 0.62;
    eff.vocab_preferrers = {{8.5, 0.6}, {-3.4, 0.6}};
    eff.math_preferrers = {{7.4, 1.1}, {-5.5, 1.2}};
    return eff;
}

const char* to_string(TypeMapping m) {
    return m == TypeMapping::VocabPreferrersType1 ? "vocab" : "math";
}

TypeMapping type_mapping_from_string(const char* name) {
    const std::string s = name ? name : "";
    if (s == "vocab") return TypeMapping::VocabPreferrersType1;
    if (s == "math") return TypeMapping::MathPreferrersType1;
    throw ValidationError("type mapping must be 'vocab' or 'math', got '" + s + "'");
}

DerivedParams weighted_params(const VocabMathEffects& eff, double w, TypeMapping mapping) {
    if (!(w >= 0.0 && w <= 1.0)) throw ValidationError("weight w must lie in [0, 1]");
    const TypedEffects typed = arrange(eff, mapping);
    return DerivedParams::from_moments(typed.share1, weighted_cate(*typed.type1, w),
                                       weighted_cate(*typed.type0, w), 0.0);
}

Breakpoints weight_breakpoints(const VocabMathEffects& eff, TypeMapping mapping) {
    const TypedEffects typed = arrange(eff, mapping);
    const double share0 = 1.0 - typed.share1;
    Breakpoints bp;
    // beta_t(w) = share_t * tau_t(w) vanishes where tau_t does, unless share_t = 0.
    if (typed.share1 > 0.0) bp.beta1_zero = linear_root(typed.type1->on_vocab.value, typed.type1->on_math.value);
    if (share0 > 0.0) bp.beta0_zero = linear_root(typed.type0->on_vocab.value, typed.type0->on_math.value);
    const double ate_at_0 = typed.share1 * typed.type1->on_vocab.value + share0 * typed.type0->on_vocab.value;
    const double ate_at_1 = typed.share1 * typed.type1->on_math.value + share0 * typed.type0->on_math.value;
    bp.ate_zero = linear_root(ate_at_0, ate_at_1);
    return bp;
}

SweepTable sweep_weights(const VocabMathEffects& eff, std::size_t grid, TypeMapping mapping) {
    if (grid < 2) throw ValidationError("sweep grid needs at least 2 points");
    SweepTable table;
    table.mapping = mapping;
    table.rows.reserve(grid);
    for (std::size_t i = 0; i < grid; ++i) {
        const double w = static_cast<double>(i) / static_cast<double>(grid - 1);
        const DerivedParams p = weighted_params(eff, w, mapping);
        table.rows.push_back({w, p.beta1, p.beta0, p.ate(), rule_case(p), optimal_itr(p)});
    }
    table.breakpoints = weight_breakpoints(eff, mapping);
    return table;
}

}  // namespace stratitr
