#include "stratitr/regret.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "parallel.hpp"
#include "stratitr/error.hpp"
#include "stratitr/identify.hpp"
#include "stratitr/random.hpp"
#include "stratitr/simulate.hpp"

namespace stratitr {

namespace {

double design_kappa(const TrialDesign& design) {
    return std::visit([](const auto& d) { return d.kappa; }, design);
}

double design_bound(const TrialDesign& design) {
    return std::visit([](const auto& d) { return d.M; }, design);
}

std::string kind_name(const TrialDesign& design) {
    return std::holds_alternative<SspRctDesign>(design) ? "ssprct" : "drpt";
}

// Reusable per-thread state: one record buffer per design kind.
class ReplicationRunner {
   public:
    ReplicationRunner(const TrialDesign& design, const AtomSampler& sampler, std::size_t n)
        : design_(design), sampler_(sampler), n_(n) {}

    Itr decide(std::uint64_t key) {
        if (const auto* ssp = std::get_if<SspRctDesign>(&design_)) {
            ssp_.resize(n_);
            simulate_ssprct_into(sampler_, *ssp, key, ssp_);
            return str_decide(estimate_beta_ssprct(*ssp, ssp_));
        }
        const auto& drpt = std::get<DrptDesign>(design_);
        drpt_.resize(n_);
        simulate_drpt_into(sampler_, drpt, key, drpt_);
        return str_decide(estimate_beta_drpt(drpt, drpt_));
    }

   private:
    const TrialDesign& design_;
    const AtomSampler& sampler_;
    std::size_t n_;
    std::vector<SspRctRecord> ssp_;
    std::vector<DrptRecord> drpt_;
};

}  // namespace

double oracle_welfare(const DerivedParams& p) {
    if (p.beta1 > 0.0 && p.beta0 < 0.0) return p.beta1 + p.ey0;
    if (p.beta1 + p.beta0 > 0.0) return p.beta1 + p.beta0 + p.ey0;
    return p.ey0;
}

double hoeffding_bound(double M, double kappa, std::size_t n) {
    if (!(std::isfinite(M) && M > 0.0)) throw ValidationError("bound needs a finite M > 0");
    if (!(kappa > 0.0 && kappa < 0.5)) throw ValidationError("bound needs kappa in (0, 1/2)");
    const double nd = static_cast<double>(n);
    // Relative slack absorbs the rounding of kappa^-2 for decimal kappa.
    if (nd * kappa * kappa < 1.0 - 1e-12)
        throw DomainError("bound is valid only for n >= kappa^-2 (n = " + std::to_string(n) + ")");
    return 2.0 * std::exp(-0.5) * M / (kappa * std::sqrt(nd));
}

std::vector<Dgp> adversarial_family(double M, double kappa, std::size_t n, int half_points) {
    if (half_points < 1) throw ValidationError("adversarial grid needs half_points >= 1");
    if (!(std::isfinite(M) && M > 0.0)) throw ValidationError("adversarial family needs a finite M > 0");
    if (!(kappa > 0.0 && kappa < 0.5)) throw ValidationError("adversarial family needs kappa in (0, 1/2)");
    if (n == 0) throw ValidationError("adversarial family needs n >= 1");
    const double extent = std::min(M, 2.0 * M / (kappa * std::sqrt(static_cast<double>(n))));
    std::vector<Dgp> out;
    out.reserve(static_cast<std::size_t>((2 * half_points + 1) * (2 * half_points + 1)));
    for (int i = -half_points; i <= half_points; ++i) {
        for (int j = -half_points; j <= half_points; ++j) {
            const double b1 = extent * i / half_points;
            const double b0 = extent * j / half_points;
            std::string id = "adv_n" + std::to_string(n) + "_" + std::to_string(i) + "_" + std::to_string(j);
            out.push_back({std::move(id), two_atom_population(b1, b0, M)});
        }
    }
    return out;
}

bool RegretReport::all_pass() const {
    return std::all_of(per_n.begin(), per_n.end(), [](const RegretSummary& s) { return s.pass; });
}

double effective_outcome_bound(const RegretExperimentConfig& config) {
    const double design_M = design_bound(config.design);
    if (std::isfinite(design_M)) return design_M;
    double M = 0.0;
    for (const auto& dgp : config.dgps) M = std::max(M, dgp.population.M);
    return M;
}

void validate(const RegretExperimentConfig& config) {
    std::visit([](const auto& d) { require_valid(d); }, config.design);
    if (config.dgps.empty()) throw ValidationError("regret experiment needs at least one DGP");
    if (config.sample_sizes.empty()) throw ValidationError("regret experiment needs at least one sample size");
    if (config.replications < 1) throw ValidationError("regret experiment needs replications >= 1");
    const double M = effective_outcome_bound(config);
    std::set<std::string> ids;
    for (const auto& dgp : config.dgps) {
        if (!ids.insert(dgp.id).second) throw ValidationError("duplicate DGP id: " + dgp.id);
        validate(dgp.population);
        if (dgp.population.M > M) throw ValidationError("DGP " + dgp.id + " exceeds the design outcome bound");
    }
    std::set<std::size_t> sizes;
    for (std::size_t n : config.sample_sizes) {
        if (!sizes.insert(n).second) throw ValidationError("duplicate sample size: " + std::to_string(n));
        hoeffding_bound(M, design_kappa(config.design), n);
    }
}

double replication_regret(const TrialDesign& design, const PopulationSpec& pop, std::size_t n,
                          std::uint64_t key) {
    const AtomSampler sampler(pop);
    const DerivedParams params = population_params(pop);
    ReplicationRunner runner(design, sampler, n);
    return oracle_welfare(params) - welfare_stated(params, runner.decide(key));
}

RegretReport run_regret_experiment(const RegretExperimentConfig& config) {
    validate(config);
    const double M = effective_outcome_bound(config);
    const double kappa = design_kappa(config.design);
    const unsigned threads = detail::resolve_threads(config.threads);
    const std::size_t R = config.replications;

    RegretReport report;
    report.design_kind = kind_name(config.design);
    report.M = M;
    report.kappa = kappa;
    report.replications = R;
    report.seed = config.seed;

    std::vector<double> regrets(R);
    for (std::size_t j = 0; j < config.dgps.size(); ++j) {
        const Dgp& dgp = config.dgps[j];
        const AtomSampler sampler(dgp.population);
        const DerivedParams params = population_params(dgp.population);
        const double best = oracle_welfare(params);
        for (std::size_t n : config.sample_sizes) {
            std::vector<ReplicationRunner> runners;
            runners.reserve(threads);
            for (unsigned w = 0; w < threads; ++w) runners.emplace_back(config.design, sampler, n);
            detail::parallel_for(R, threads, [&](std::size_t r, unsigned w) {
                const std::uint64_t key = derive_key(config.seed, {j, n, r});
                regrets[r] = best - welfare_stated(params, runners[w].decide(key));
            });

            double sum = 0.0;
            double lowest = regrets.front();
            for (double v : regrets) {
                sum += v;
                lowest = std::min(lowest, v);
            }
            const double mean = sum / static_cast<double>(R);
            double ss = 0.0;
            for (double v : regrets) ss += (v - mean) * (v - mean);
            const double se = R > 1 ? std::sqrt(ss / static_cast<double>(R - 1)) / std::sqrt(static_cast<double>(R)) : 0.0;

            RegretRow row;
            row.dgp_id = dgp.id;
            row.n = n;
            row.beta1 = params.beta1;
            row.beta0 = params.beta0;
            row.mean_regret = mean;
            row.se = se;
            row.min_regret = lowest;
            row.replications = R;
            row.bound = hoeffding_bound(M, kappa, n);
            row.pass = mean <= row.bound + 3.0 * se;
            report.rows.push_back(std::move(row));
        }
    }

    for (std::size_t n : config.sample_sizes) {
        RegretSummary s;
        s.n = n;
        s.bound = hoeffding_bound(M, kappa, n);
        bool first = true;
        for (const auto& row : report.rows) {
            if (row.n != n) continue;
            if (first || row.mean_regret > s.max_mean_regret) {
                s.max_mean_regret = row.mean_regret;
                s.argmax_dgp = row.dgp_id;
            }
            s.max_se = first ? row.se : std::max(s.max_se, row.se);
            first = false;
        }
        s.margin = 3.0 * s.max_se;
        s.pass = s.max_mean_regret <= s.bound + s.margin;
        report.per_n.push_back(std::move(s));
    }
    return report;
}

}  // namespace stratitr
