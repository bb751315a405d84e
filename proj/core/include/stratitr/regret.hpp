#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "stratitr/design.hpp"
#include "stratitr/population.hpp"

namespace stratitr {

/// Highest attainable welfare under strategic statements, by the three-case
/// closed form: beta1 + E[Y(0)] when beta1 > 0 > beta0, beta1 + beta0 + E[Y(0)]
/// when otherwise the average effect is positive, E[Y(0)] in the remaining cases.
double oracle_welfare(const DerivedParams& params);

/// Finite-sample ceiling 2 e^{-1/2} M / (kappa sqrt(n)) on the maximum
/// regret of both plug-in rules. Throws DomainError when n < kappa^-2 and
/// ValidationError unless M > 0 and kappa in (0, 1/2).
double hoeffding_bound(double M, double kappa, std::size_t n);

struct Dgp {
    std::string id;
    PopulationSpec population;
};

/// Two-atom populations whose (beta1, beta0) lie on a (2k+1) x (2k+1) grid
/// over [-m, m]^2 with m = min(M, 2M / (kappa sqrt(n))). The grid covers all
/// three regret cases, the anti-diagonal beta1 = -beta0, and (for even k)
/// the magnitude M / (kappa sqrt(n)) at which the bound's proof is tight.
std::vector<Dgp> adversarial_family(double M, double kappa, std::size_t n, int half_points = 6);

using TrialDesign = std::variant<SspRctDesign, DrptDesign>;

struct RegretExperimentConfig {
    TrialDesign design;
    std::vector<Dgp> dgps;
    std::vector<std::size_t> sample_sizes;
    std::size_t replications = 1000;
    std::uint64_t seed = 0;
    /// Worker threads; 0 means std::thread::hardware_concurrency().
    unsigned threads = 0;
};

struct RegretRow {
    std::string dgp_id;
    std::size_t n = 0;
    double beta1 = 0.0;
    double beta0 = 0.0;
    double mean_regret = 0.0;
    double se = 0.0;
    double min_regret = 0.0;
    std::size_t replications = 0;
    double bound = 0.0;
    bool pass = false;
};

struct RegretSummary {
    std::size_t n = 0;
    double max_mean_regret = 0.0;
    std::string argmax_dgp;
    double max_se = 0.0;
    double bound = 0.0;
    /// 3 * max_se.
    double margin = 0.0;
    bool pass = false;
};

struct RegretReport {
    std::string design_kind;
    double M = 0.0;
    double kappa = 0.0;
    std::size_t replications = 0;
    std::uint64_t seed = 0;
    std::vector<RegretRow> rows;
    std::vector<RegretSummary> per_n;

    bool all_pass() const;
};

/// Outcome bound used for the regret ceiling: the design's M when finite,
/// otherwise the largest population M.
double effective_outcome_bound(const RegretExperimentConfig& config);

/// Throws ValidationError or DomainError describing the first problem.
void validate(const RegretExperimentConfig& config);

/// Simulates `replications` datasets per (DGP, n), applies the matching
/// estimator and plug-in rule, and averages the regret against the oracle.
/// Replication r of DGP j at size n uses stream derive_key(seed, {j, n, r});
/// reductions run in replication order, so the report does not depend on
/// the thread count.
RegretReport run_regret_experiment(const RegretExperimentConfig& config);

/// Regret of a single replication: oracle welfare minus the welfare of the
/// rule chosen from a freshly simulated dataset.
double replication_regret(const TrialDesign& design, const PopulationSpec& pop, std::size_t n,
                          std::uint64_t key);

}  // namespace stratitr
