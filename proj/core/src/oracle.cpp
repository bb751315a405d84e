#include "stratitr/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "stratitr/error.hpp"

namespace stratitr {

namespace {

std::vector<double> unit_grid(double step) {
    const auto count = static_cast<long long>(std::floor(1.0 / step + 1e-9));
    std::vector<double> points;
    points.reserve(static_cast<std::size_t>(count) + 2);
    for (long long k = 0; k <= count; ++k) points.push_back(std::min(1.0, static_cast<double>(k) * step));
    if (points.back() < 1.0) {
        if (1.0 - points.back() < 1e-9) points.back() = 1.0;
        else points.push_back(1.0);
    }
    return points;
}

bool in_unit_square(double a, double b) { return a >= 0.0 && a <= 1.0 && b >= 0.0 && b <= 1.0; }

}  // namespace

GridOptimum grid_welfare_oracle(const DerivedParams& params, double step) {
    if (!(step > 0.0 && step <= 0.5)) throw ValidationError("grid step must lie in (0, 0.5]");
    const std::vector<double> grid = unit_grid(step);
    GridOptimum best{{grid.front(), grid.front()}, welfare_stated(params, {grid.front(), grid.front()})};
    for (double d1 : grid) {
        for (double d0 : grid) {
            const double w = welfare_stated(params, {d1, d0});
            if (w >= best.welfare) best = {{d1, d0}, w};
        }
    }
    return best;
}

KinkSlopes welfare_kink_probe(const DerivedParams& params, const Itr& base,
                              std::pair<double, double> direction, std::span<const double> alphas) {
    validate(base);
    if (base.delta1 != base.delta0) throw ValidationError("kink probe base must satisfy delta1 == delta0");
    if (alphas.empty()) throw ValidationError("kink probe needs at least one alpha");
    const auto [h1, h0] = direction;
    for (double a : alphas) {
        if (!(a > 0.0)) throw ValidationError("kink probe alphas must be positive");
        if (!in_unit_square(base.delta1 + a * h1, base.delta0 + a * h0) ||
            !in_unit_square(base.delta1 - a * h1, base.delta0 - a * h0))
            throw DomainError("kink probe leaves the unit square");
    }
    const double alpha = *std::min_element(alphas.begin(), alphas.end());
    const double at_base = welfare_stated(params, base);
    const double above = welfare_stated(params, {base.delta1 + alpha * h1, base.delta0 + alpha * h0});
    const double below = welfare_stated(params, {base.delta1 - alpha * h1, base.delta0 - alpha * h0});
    return {(at_base - below) / alpha, (above - at_base) / alpha};
}

}  // namespace stratitr
