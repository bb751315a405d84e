#pragma once

#include <span>
#include <utility>

#include "stratitr/welfare.hpp"

namespace stratitr {

struct GridOptimum {
    Itr itr;
    double welfare = 0.0;
};

/// Brute-force maximizer of welfare_stated over {0, step, 2 step, ..., 1}^2.
///
/// Points are visited in lexicographic order of (delta1, delta0) and a welfare
/// at least as large replaces the incumbent, so the lexicographically largest
/// maximizer is returned. If 1 is not a multiple of step the grid
/// is closed with a final point at 1. Requires 0 < step <= 0.5.
GridOptimum grid_welfare_oracle(const DerivedParams& params, double step);

struct KinkSlopes {
    double left = 0.0;
    double right = 0.0;
};

/// One-sided finite-difference slopes of welfare_stated at `base` along
/// `direction`, evaluated at the smallest positive alpha in `alphas`.
///
/// `base` must lie on the diagonal (delta1 == delta0). Throws DomainError if
/// base +/- alpha * direction leaves the unit square for any probed alpha,
/// and ValidationError for a non-diagonal base or a non-positive alpha.
KinkSlopes welfare_kink_probe(const DerivedParams& params, const Itr& base,
                              std::pair<double, double> direction, std::span<const double> alphas);

}  // namespace stratitr
