#include "stratitr/population.hpp"

#include <cmath>
#include <string>

#include "stratitr/error.hpp"

namespace stratitr {

void validate(const PopulationSpec& pop) {
    if (!(std::isfinite(pop.M) && pop.M > 0.0)) throw ValidationError("population M must be positive and finite");
    if (pop.atoms.empty()) throw ValidationError("population needs at least one atom");
    double total = 0.0;
    for (std::size_t i = 0; i < pop.atoms.size(); ++i) {
        const auto& a = pop.atoms[i];
        const std::string where = "atom " + std::to_string(i) + ": ";
        if (!(std::isfinite(a.w) && a.w > 0.0)) throw ValidationError(where + "mass w must be positive");
        if (!std::isfinite(a.y0) || !std::isfinite(a.y1)) throw ValidationError(where + "outcomes must be finite");
        if (std::abs(a.y0) > pop.M || std::abs(a.y1) > pop.M)
            throw ValidationError(where + "|y| exceeds the outcome bound M");
        if (to_int(a.t) > 1) throw ValidationError(where + "t must be 0 or 1");
        total += a.w;
    }
    if (std::abs(total - 1.0) > 1e-12) throw ValidationError("atom masses must sum to 1");
}

DerivedParams population_params(const PopulationSpec& pop) {
    validate(pop);
    double mass1 = 0.0, mass0 = 0.0;
    double gap1 = 0.0, gap0 = 0.0;
    double ey0 = 0.0;
    for (const auto& a : pop.atoms) {
        const double gap = a.w * (a.y1 - a.y0);
        if (a.t == PreferenceType::One) {
            mass1 += a.w;
            gap1 += gap;
        } else {
            mass0 += a.w;
            gap0 += gap;
        }
        ey0 += a.w * a.y0;
    }
    const double total = mass1 + mass0;
    DerivedParams p;
    p.share1 = mass1 / total;
    p.ey0 = ey0 / total;
    if (mass1 > 0.0) {
        p.tau1 = gap1 / mass1;
        p.beta1 = gap1 / total;
    }
    if (mass0 > 0.0) {
        p.tau0 = gap0 / mass0;
        p.beta0 = gap0 / total;
    }
    return p;
}

PopulationSpec two_atom_population(double beta1, double beta0, double M) {
    if (!(std::isfinite(M) && M > 0.0)) throw ValidationError("M must be positive and finite");
    if (!(std::abs(beta1) <= M && std::abs(beta0) <= M))
        throw ValidationError("two-atom populations need |beta_t| <= M");
    auto atom = [M](double beta, PreferenceType t) {
        // Outcome gap 2*beta at mass 1/2; the larger outcome sits at +M.
        const double top = M;
        const double bottom = M - 2.0 * std::abs(beta);
        return beta >= 0.0 ? Atom{bottom, top, t, 0.5} : Atom{top, bottom, t, 0.5};
    };
    return {M, {atom(beta1, PreferenceType::One), atom(beta0, PreferenceType::Zero)}};
}

}  // namespace stratitr
