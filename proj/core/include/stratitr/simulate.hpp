#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "stratitr/dataset.hpp"
#include "stratitr/population.hpp"
#include "stratitr/random.hpp"

namespace stratitr {

/// One agent drawn from a population, with its potential treatment in each
/// DRPT group: D(0) = 0, D(1) = 1, D(2) = T.
struct AgentDraw {
    double y0 = 0.0;
    double y1 = 0.0;
    PreferenceType t = PreferenceType::One;

    double outcome(std::uint8_t d) const { return d == 1 ? y1 : y0; }
    std::uint8_t potential_treatment(std::uint8_t z) const {
        return z == 0 ? 0 : z == 1 ? 1 : static_cast<std::uint8_t>(to_int(t));
    }
};

/// Inverse-CDF sampler over a validated population's atoms.
class AtomSampler {
   public:
    explicit AtomSampler(const PopulationSpec& pop);

    /// Maps u in [0, 1) to an atom; the last atom absorbs rounding slack.
    AgentDraw draw(double u) const;
    const PopulationSpec& population() const { return pop_; }

   private:
    PopulationSpec pop_;
    std::vector<double> cumulative_;
};

/// Stream key used for a dataset simulated from a user seed.
std::uint64_t dataset_stream_key(std::uint64_t seed);

// Record i consumes stream positions 2i (atom draw) and 2i+1 (assignment
// draw), so record i depends only on (key, i).

void simulate_ssprct_into(const AtomSampler& sampler, const SspRctDesign& design, std::uint64_t key,
                          std::span<SspRctRecord> out);
void simulate_drpt_into(const AtomSampler& sampler, const DrptDesign& design, std::uint64_t key,
                        std::span<DrptRecord> out);

/// n iid agents report a preference after seeing the design's propensities,
/// then receive D ~ Bernoulli(p(S)). Throws ValidationError for an invalid
/// design, an invalid population or n == 0. The dataset's outcome bound is
/// the population's M.
SspRctDataset simulate_ssprct(const PopulationSpec& pop, const SspRctDesign& design, std::size_t n,
                              std::uint64_t seed);

/// n iid agents are assigned a group Z ~ Categorical(q); D = D(Z) and Y = Y(D).
DrptDataset simulate_drpt(const PopulationSpec& pop, const DrptDesign& design, std::size_t n,
                          std::uint64_t seed);

}  // namespace stratitr
