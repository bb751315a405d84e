#pragma once

#include <span>
#include <vector>

#include "stratitr/lottery.hpp"
#include "stratitr/welfare.hpp"

namespace stratitr {

/// One support point of the joint law of (Y(0), Y(1), T) with its mass.
struct Atom {
    double y0 = 0.0;
    double y1 = 0.0;
    PreferenceType t = PreferenceType::One;
    double w = 0.0;
};

/// Finite discrete population. Every moment is an exact weighted sum.
struct PopulationSpec {
    double M = 1.0;
    std::vector<Atom> atoms;
};

/// Throws ValidationError unless M > 0, every w > 0, the masses sum to 1
/// (within 1e-12) and every |y| <= M.
void validate(const PopulationSpec& pop);

/// Share, CATEs, E[Y(0)] and betas of the population. A type without mass
/// gets an absent CATE and beta 0.
DerivedParams population_params(const PopulationSpec& pop);

/// The population realizing (beta1, beta0) with two atoms of mass 1/2, one
/// per type. Each atom's larger potential outcome equals +M and its outcome
/// gap is 2 * beta_t. Requires |beta_t| <= M.
PopulationSpec two_atom_population(double beta1, double beta0, double M);

}  // namespace stratitr
