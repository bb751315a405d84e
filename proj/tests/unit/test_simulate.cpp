#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cmath>

#include "stratitr/error.hpp"
#include "stratitr/random.hpp"
#include "stratitr/simulate.hpp"
#include "test_oracles.hpp"

using namespace stratitr;

namespace {

PopulationSpec four_atoms() {
    return {2.0,
            {{1.0, 2.0, PreferenceType::One, 0.3},
             {-1.0, 0.5, PreferenceType::One, 0.3},
             {2.0, 0.0, PreferenceType::Zero, 0.25},
             {0.0, -2.0, PreferenceType::Zero, 0.15}}};
}

}  // namespace

TEST_CASE("CounterRng: positions are addressable", "[simulate][random]") {
    CounterRng rng(derive_key(1, {2, 3}));
    for (std::uint64_t k = 0; k < 100; ++k) REQUIRE(rng() == CounterRng::at(rng.key(), k));
    REQUIRE(derive_key(1, {2, 3}) != derive_key(1, {3, 2}));
    REQUIRE(derive_key(1, {2}) != derive_key(2, {2}));
    CounterRng u(7);
    double sum = 0.0;
    for (int i = 0; i < 100000; ++i) {
        const double x = u.uniform01();
        REQUIRE(x >= 0.0);
        REQUIRE(x < 1.0);
        sum += x;
    }
    REQUIRE(std::abs(sum / 100000 - 0.5) < 4.0 * std::sqrt(1.0 / 12.0 / 100000));
}

TEST_CASE("simulate_ssprct: truthful statements and bounded outcomes", "[simulate]") {
    const PopulationSpec pop = four_atoms();
    const SspRctDesign design{0.7, 0.3, 2.0, 0.25};
    const SspRctDataset data = simulate_ssprct(pop, design, 20000, 5);
    const AtomSampler sampler(pop);
    const std::uint64_t key = dataset_stream_key(5);
    for (std::size_t i = 0; i < data.size(); ++i) {
        const auto& r = data.records()[i];
        const AgentDraw a = sampler.draw(CounterRng(key, 2 * i).uniform01());
        REQUIRE(r.s == a.t);
        REQUIRE(r.y == a.outcome(r.d));
        REQUIRE(std::abs(r.y) <= pop.M);
    }
}

TEST_CASE("simulate_ssprct: constant outcomes", "[simulate]") {
    const PopulationSpec pop{1.0, {{0.25, 0.25, PreferenceType::One, 0.5}, {0.25, 0.25, PreferenceType::Zero, 0.5}}};
    for (const auto& r : simulate_ssprct(pop, SspRctDesign{}, 1000, 1).records()) REQUIRE(r.y == 0.25);
}

TEST_CASE("simulate_ssprct: large-sample moments match the population", "[simulate][montecarlo]") {
    const PopulationSpec pop = four_atoms();
    const SspRctDesign design{0.5, 0.25, 2.0, 0.25};
    constexpr std::size_t n = 1000000;
    const SspRctDataset data = simulate_ssprct(pop, design, n, 99);
    const auto m = testing::analytic_moments(pop);
    // Share of stated type 1 and treated share within each stratum.
    double s1 = 0.0, treated1 = 0.0, treated0 = 0.0;
    std::array<std::array<double, 2>, 2> ysum{}, count{};
    for (const auto& r : data.records()) {
        const int t = to_int(r.s);
        s1 += t;
        (t ? treated1 : treated0) += r.d;
        ysum[r.d][t] += r.y;
        count[r.d][t] += 1.0;
    }
    const double share = s1 / n;
    REQUIRE(std::abs(share - m.p_t1) <= 4.0 * std::sqrt(m.p_t1 * (1 - m.p_t1) / n));
    REQUIRE(std::abs(treated1 / s1 - 0.5) <= 4.0 * std::sqrt(0.25 / s1));
    REQUIRE(std::abs(treated0 / (n - s1) - 0.25) <= 4.0 * std::sqrt(0.1875 / (n - s1)));
    for (int d = 0; d < 2; ++d)
        for (int t = 0; t < 2; ++t) {
            // Outcomes lie in [-2, 2], so the conditional SD is at most 2.
            REQUIRE(std::abs(ysum[d][t] / count[d][t] - m.mean_potential[d][t]) <= 4.0 * 2.0 / std::sqrt(count[d][t]));
        }
}

TEST_CASE("simulate_ssprct: refuses invalid inputs", "[simulate][errors]") {
    const PopulationSpec pop = four_atoms();
    REQUIRE_THROWS_AS(simulate_ssprct(pop, SspRctDesign{0.3, 0.6, 2.0, 0.25}, 10, 1), ValidationError);
    REQUIRE_THROWS_AS(simulate_ssprct(pop, SspRctDesign{}, 0, 1), ValidationError);
    REQUIRE_THROWS_AS(simulate_ssprct(PopulationSpec{1.0, {}}, SspRctDesign{}, 10, 1), ValidationError);
    REQUIRE_THROWS_AS(simulate_drpt(pop, DrptDesign{{0.5, 0.5, 0.5}, 2.0, 0.25}, 10, 1), ValidationError);
}

TEST_CASE("simulate_drpt: compliance, free choice and group counts", "[simulate]") {
    const PopulationSpec pop = four_atoms();
    const DrptDesign design{{0.25, 0.25, 0.5}, 2.0, 0.25};
    const AtomSampler sampler(pop);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const DrptDataset data = simulate_drpt(pop, design, 450, seed);
        const std::uint64_t key = dataset_stream_key(seed);
        std::array<double, 3> counts{};
        for (std::size_t i = 0; i < data.size(); ++i) {
            const auto& r = data.records()[i];
            counts[r.z] += 1.0;
            if (r.z == 0) REQUIRE(r.d == 0);
            if (r.z == 1) REQUIRE(r.d == 1);
            const AgentDraw a = sampler.draw(CounterRng(key, 2 * i).uniform01());
            if (r.z == 2) REQUIRE(r.d == to_int(a.t));
            REQUIRE(r.y == a.outcome(r.d));
        }
        for (int z = 0; z < 3; ++z) {
            const double q = design.q[z];
            REQUIRE(std::abs(counts[z] - 450 * q) <= 4.0 * std::sqrt(450 * q * (1 - q)));
        }
    }
}

TEST_CASE("simulate_drpt: agent draws are independent of the group", "[simulate][montecarlo]") {
    const PopulationSpec pop = four_atoms();
    const DrptDesign design{{0.25, 0.25, 0.5}, 2.0, 0.25};
    constexpr std::size_t n = 400000;
    const DrptDataset data = simulate_drpt(pop, design, n, 3);
    const AtomSampler sampler(pop);
    const std::uint64_t key = dataset_stream_key(3);
    std::array<double, 3> type1{}, counts{};
    for (std::size_t i = 0; i < n; ++i) {
        const auto& r = data.records()[i];
        counts[r.z] += 1;
        type1[r.z] += to_int(sampler.draw(CounterRng(key, 2 * i).uniform01()).t);
    }
    for (int z = 0; z < 3; ++z) REQUIRE(std::abs(type1[z] / counts[z] - 0.6) <= 4.0 * std::sqrt(0.24 / counts[z]));
}

TEST_CASE("simulation is deterministic in the seed", "[simulate]") {
    const PopulationSpec pop = four_atoms();
    const auto a = simulate_ssprct(pop, SspRctDesign{}, 500, 42);
    const auto b = simulate_ssprct(pop, SspRctDesign{}, 500, 42);
    const auto c = simulate_ssprct(pop, SspRctDesign{}, 500, 43);
    REQUIRE(std::equal(a.records().begin(), a.records().end(), b.records().begin()));
    REQUIRE_FALSE(std::equal(a.records().begin(), a.records().end(), c.records().begin()));
    const auto d = simulate_drpt(pop, DrptDesign{}, 500, 42);
    const auto e = simulate_drpt(pop, DrptDesign{}, 500, 42);
    REQUIRE(std::equal(d.records().begin(), d.records().end(), e.records().begin()));
    // A prefix of a longer dataset is the shorter dataset.
    const auto longer = simulate_drpt(pop, DrptDesign{}, 800, 42);
    REQUIRE(std::equal(d.records().begin(), d.records().end(), longer.records().begin()));
}

TEST_CASE("AtomSampler: inverse CDF", "[simulate]") {
    const AtomSampler s(four_atoms());
    REQUIRE(s.draw(0.0).y1 == 2.0);
    REQUIRE(s.draw(0.31).y1 == 0.5);
    REQUIRE(s.draw(0.61).y0 == 2.0);
    REQUIRE(s.draw(0.9999999).y1 == -2.0);
}
