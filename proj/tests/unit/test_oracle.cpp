#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <random>

#include "stratitr/error.hpp"
#include "stratitr/oracle.hpp"

using namespace stratitr;
using Catch::Approx;

TEST_CASE("grid oracle: examples", "[oracle]") {
    const GridOptimum a = grid_welfare_oracle(DerivedParams::from_betas(1.0, -1.0), 0.01);
    REQUIRE(a.itr == Itr{1.0, 0.0});
    REQUIRE(a.welfare == 1.0);

    const GridOptimum flat = grid_welfare_oracle(DerivedParams::from_betas(0.0, 0.0, 2.5), 0.1);
    REQUIRE(flat.itr == Itr{1.0, 1.0});
    REQUIRE(flat.welfare == 2.5);

    const GridOptimum zero_sum = grid_welfare_oracle(DerivedParams::from_betas(-0.5, 0.5), 0.01);
    REQUIRE(zero_sum.welfare == Approx(0.0).margin(1e-15));
    REQUIRE(zero_sum.itr.delta1 == zero_sum.itr.delta0);
}

TEST_CASE("grid oracle: non-dividing step closes the grid at 1", "[oracle]") {
    const GridOptimum g = grid_welfare_oracle(DerivedParams::from_betas(1.0, 1.0), 0.3);
    REQUIRE(g.itr == Itr{1.0, 1.0});
    REQUIRE(g.welfare == 2.0);
}

TEST_CASE("grid oracle: invalid step", "[oracle][errors]") {
    const auto p = DerivedParams::from_betas(1.0, 1.0);
    REQUIRE_THROWS_AS(grid_welfare_oracle(p, 0.0), ValidationError);
    REQUIRE_THROWS_AS(grid_welfare_oracle(p, 0.6), ValidationError);
}

TEST_CASE("grid oracle: optimal rule is never beaten", "[oracle][property]") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> b(-1.0, 1.0);
    for (int i = 0; i < 500; ++i) {
        const auto p = DerivedParams::from_betas(b(rng), b(rng));
        const GridOptimum g = grid_welfare_oracle(p, 0.05);
        REQUIRE(welfare_stated(p, optimal_itr(p)) >= g.welfare - 1e-15);
    }
}

TEST_CASE("kink probe: one-sided slopes", "[oracle]") {
    const std::array<double, 3> alphas{0.1, 0.01, 0.001};
    const Itr base{0.5, 0.5};
    const KinkSlopes k = welfare_kink_probe(DerivedParams::from_betas(-1.0, 2.0), base, {1.0, 0.0}, alphas);
    REQUIRE(k.left == Approx(2.0).margin(1e-12));
    REQUIRE(k.right == Approx(-1.0).margin(1e-12));

    const KinkSlopes c = welfare_kink_probe(DerivedParams::from_betas(0.7, 0.7), base, {1.0, 0.0}, alphas);
    REQUIRE(c.left == Approx(0.7).margin(1e-12));
    REQUIRE(c.right == Approx(0.7).margin(1e-12));

    const KinkSlopes d = welfare_kink_probe(DerivedParams::from_betas(1.0, 0.0), base, {1.0, 0.0}, alphas);
    REQUIRE(d.left == Approx(0.0).margin(1e-12));
    REQUIRE(d.right == Approx(1.0).margin(1e-12));
}

TEST_CASE("kink probe: errors", "[oracle][errors]") {
    const auto p = DerivedParams::from_betas(1.0, 0.0);
    const std::array<double, 1> big{0.6};
    const std::array<double, 1> bad{-0.1};
    REQUIRE_THROWS_AS(welfare_kink_probe(p, {0.5, 0.5}, {1.0, 0.0}, big), DomainError);
    REQUIRE_THROWS_AS(welfare_kink_probe(p, {0.5, 0.5}, {1.0, 0.0}, bad), ValidationError);
    const std::array<double, 1> ok{0.1};
    REQUIRE_THROWS_AS(welfare_kink_probe(p, {0.6, 0.5}, {1.0, 0.0}, ok), ValidationError);
}
