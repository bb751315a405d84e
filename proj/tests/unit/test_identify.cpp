#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "stratitr/error.hpp"
#include "stratitr/identify.hpp"
#include "stratitr/simulate.hpp"
#include "test_oracles.hpp"

using namespace stratitr;
using Catch::Approx;

TEST_CASE("identify_ssprct: examples", "[identify]") {
    const Identified a = identify_ssprct(0.62, 10.5, 2.0, 0.0, 0.0);
    REQUIRE(a.share1 == 0.62);
    REQUIRE(a.tau1 == 8.5);
    const Identified null = identify_ssprct(0.4, 3.0, 3.0, 3.0, 3.0);
    REQUIRE(null.tau1 == 0.0);
    REQUIRE(null.tau0 == 0.0);
    const Identified c = identify_ssprct(0.6, 2.0, 1.0, 0.0, 2.0);
    REQUIRE(c.share1 == 0.6);
    REQUIRE(c.tau1 == 1.0);
    REQUIRE(c.tau0 == -2.0);
    REQUIRE_THROWS_AS(identify_ssprct(1.5, 0, 0, 0, 0), ValidationError);
}

TEST_CASE("identify_drpt: examples", "[identify]") {
    const Identified a = identify_drpt(1.4, 1.2, 2.0, 0.6);
    REQUIRE(a.share1 == 0.6);
    REQUIRE(a.tau1 == Approx(1.0).margin(1e-12));
    REQUIRE(a.tau0 == Approx(-2.0).margin(1e-12));
    const Identified null = identify_drpt(1.0, 1.0, 1.0, 0.3);
    REQUIRE(null.tau1 == 0.0);
    REQUIRE(null.tau0 == 0.0);
    REQUIRE_THROWS_AS(identify_drpt(1.0, 1.0, 1.0, 1.0), ValidationError);
    REQUIRE_THROWS_AS(identify_drpt(1.0, 1.0, 1.0, 0.0), ValidationError);
}

TEST_CASE("identification round-trip from analytic moments", "[identify][property]") {
    std::mt19937_64 rng(51);
    for (int i = 0; i < 200; ++i) {
        const PopulationSpec pop = testing::random_population(rng, 2 + i % 7, 3.0);
        const testing::AnalyticMoments m = testing::analytic_moments(pop);
        const testing::TruePrimitives truth = testing::true_primitives(pop);
        const Identified s = identify_ssprct(m.p_t1, m.mean_potential[1][1], m.mean_potential[0][1],
                                             m.mean_potential[1][0], m.mean_potential[0][0]);
        const Identified d = identify_drpt(m.ey0, m.ey1, m.ey_choice, m.p_t1);
        for (const Identified& id : {s, d}) {
            REQUIRE(std::abs(id.share1 - truth.share1) <= 1e-12);
            REQUIRE(std::abs(id.tau1 - truth.tau1) <= 1e-12);
            REQUIRE(std::abs(id.tau0 - truth.tau0) <= 1e-12);
        }
        REQUIRE(std::abs(s.tau1 - d.tau1) <= 1e-12);
        REQUIRE(std::abs(s.tau0 - d.tau0) <= 1e-12);
    }
}

TEST_CASE("estimate_beta_ssprct: hand dataset", "[identify]") {
    const SspRctDesign design{0.5, 0.25, 3.0, 0.25};
    const SspRctDataset data(design, {{2.0, 1, PreferenceType::One},
                                      {1.0, 0, PreferenceType::One},
                                      {3.0, 1, PreferenceType::Zero},
                                      {1.0, 0, PreferenceType::Zero}});
    const BetaEstimates est = estimate_beta_ssprct(data);
    REQUIRE(std::abs(est.beta1_hat - 0.5) <= 1e-12);
    REQUIRE(std::abs(est.beta0_hat - (12.0 - 4.0 / 3.0) / 4.0) <= 1e-12);
    REQUIRE(str_decide(est) == Itr{1.0, 1.0});
}

TEST_CASE("estimate_beta_drpt: hand dataset", "[identify]") {
    const DrptDesign design{{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0}, 3.0, 0.25};
    const DrptDataset data(design, {{3.0, 1, 2}, {1.0, 0, 0}, {2.0, 1, 1}});
    const BetaEstimates est = estimate_beta_drpt(data);
    REQUIRE(std::abs(est.beta1_hat - 2.0) <= 1e-12);
    REQUIRE(std::abs(est.beta0_hat + 1.0) <= 1e-12);
}

TEST_CASE("estimators: zero outcomes and empty cells", "[identify]") {
    const SspRctDesign ssp{0.5, 0.25, 1.0, 0.25};
    const SspRctDataset zeros(ssp, {{0.0, 1, PreferenceType::One}, {0.0, 0, PreferenceType::Zero}});
    REQUIRE(estimate_beta_ssprct(zeros).beta1_hat == 0.0);
    REQUIRE(estimate_beta_ssprct(zeros).beta0_hat == 0.0);
    // Only treated type-1 records: the other cells contribute nothing.
    const SspRctDataset one_cell(ssp, {{1.0, 1, PreferenceType::One}, {0.5, 1, PreferenceType::One}});
    const BetaEstimates e = estimate_beta_ssprct(one_cell);
    REQUIRE(e.beta1_hat == Approx(1.5));
    REQUIRE(e.beta0_hat == 0.0);

    const DrptDesign drpt{{0.25, 0.25, 0.5}, 1.0, 0.25};
    const DrptDataset dz(drpt, {{0.0, 0, 0}, {0.0, 1, 1}, {0.0, 1, 2}});
    REQUIRE(estimate_beta_drpt(dz).beta1_hat == 0.0);
    REQUIRE(estimate_beta_drpt(dz).beta0_hat == 0.0);
    REQUIRE_THROWS_AS(estimate_beta_drpt(drpt, std::span<const DrptRecord>{}), ValidationError);
    REQUIRE_THROWS_AS(estimate_beta_ssprct(ssp, std::span<const SspRctRecord>{}), ValidationError);
}

TEST_CASE("ssprct summand stays within M/kappa", "[identify][property]") {
    const SspRctDesign design{0.6, 0.3, 2.0, 0.25};
    std::mt19937_64 rng(52);
    std::uniform_real_distribution<double> y(-2.0, 2.0);
    const double cap = design.M / design.kappa;
    for (int i = 0; i < 10000; ++i) {
        const SspRctRecord r{i % 13 == 0 ? 2.0 : y(rng), static_cast<std::uint8_t>(rng() % 2),
                             rng() % 2 ? PreferenceType::One : PreferenceType::Zero};
        for (auto t : {PreferenceType::Zero, PreferenceType::One}) {
            const double s = ssprct_summand(design, r, t);
            REQUIRE(s <= cap);
            REQUIRE(s >= -cap);
        }
    }
}

TEST_CASE("str_decide: plug-in rule", "[identify]") {
    REQUIRE(str_decide({0.5, -0.3}) == Itr{1.0, 0.0});
    REQUIRE(str_decide({0.0, 0.0}) == Itr{0.0, 0.0});
    REQUIRE(str_decide({-1.0, 2.0}) == Itr{1.0, 1.0});
    REQUIRE(str_decide({-1.0, 1.0}) == Itr{0.0, 0.0});
    REQUIRE(str_decide({0.0, 0.5}) == Itr{1.0, 1.0});
    REQUIRE(str_decide({0.0, -0.5}) == Itr{0.0, 0.0});
    REQUIRE_THROWS_AS(str_decide({std::nan(""), 0.0}), ValidationError);
    REQUIRE_THROWS_AS(str_decide({INFINITY, 0.0}), ValidationError);
}

TEST_CASE("estimators are unbiased", "[identify][montecarlo]") {
    const PopulationSpec pop = two_atom_population(0.6, -0.8, 2.0);
    constexpr std::size_t reps = 20000;
    constexpr std::size_t n = 50;
    const SspRctDesign ssp{0.5, 0.25, 2.0, 0.25};
    const DrptDesign drpt{{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0}, 2.0, 0.25};
    std::vector<double> s1, s0, d1, d0;
    for (std::size_t r = 0; r < reps; ++r) {
        const BetaEstimates es = estimate_beta_ssprct(simulate_ssprct(pop, ssp, n, r));
        const BetaEstimates ed = estimate_beta_drpt(simulate_drpt(pop, drpt, n, r));
        s1.push_back(es.beta1_hat);
        s0.push_back(es.beta0_hat);
        d1.push_back(ed.beta1_hat);
        d0.push_back(ed.beta0_hat);
        REQUIRE(str_decide(es).delta1 >= str_decide(es).delta0);
        REQUIRE(str_decide(ed).delta1 >= str_decide(ed).delta0);
    }
    for (const auto& [xs, target] : {std::pair{&s1, 0.6}, {&s0, -0.8}, {&d1, 0.6}, {&d0, -0.8}}) {
        const auto ms = testing::mean_se(*xs);
        REQUIRE(std::abs(ms.mean - target) <= 3.0 * ms.se);
    }
}
