#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "stratitr/empirical.hpp"
#include "stratitr/error.hpp"
#include "stratitr/identify.hpp"
#include "stratitr/io.hpp"
#include "stratitr/regret.hpp"
#include "stratitr/simulate.hpp"

namespace stratitr::cli {

namespace {

using io::format_number;

std::string format_itr(const Itr& itr) {
    return "(" + format_number(itr.delta1) + "," + format_number(itr.delta0) + ")";
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

unsigned threads_from_env() {
    const char* raw = std::getenv(kThreadsEnv);
    if (raw == nullptr || *raw == '\0') return 0;
    char* end = nullptr;
    const long v = std::strtol(raw, &end, 10);
    if (*end != '\0' || v < 1) throw ValidationError(std::string(kThreadsEnv) + " must be an integer >= 1");
    return static_cast<unsigned>(v);
}

void emit_or_write(const std::string& path, const std::string& contents, std::ostream& out) {
    if (path.empty() || path == "-") out << contents;
    else io::write_file(path, contents);
}

struct OptimalItrArgs {
    double beta1 = 0.0;
    double beta0 = 0.0;
    double ey0 = 0.0;
    bool json = false;
};

void cmd_optimal_itr(const OptimalItrArgs& a, std::ostream& out) {
    const DerivedParams params = DerivedParams::from_betas(a.beta1, a.beta0, a.ey0);
    const Itr itr = optimal_itr(params);
    const RuleCase c = rule_case(params);
    const StrategyProofness sp = strategy_proofness(itr);
    if (a.json) {
        nlohmann::ordered_json doc{{"delta1", itr.delta1},       {"delta0", itr.delta0},
                                   {"case", to_string(c)},       {"condition", describe(c)},
                                   {"strategy_proofness", to_string(sp)}, {"welfare", welfare_stated(params, itr)}};
        out << doc.dump(2) << '\n';
        return;
    }
    out << format_itr(itr) << ' ' << to_string(sp) << '\n';
    out << "case: " << to_string(c) << " (" << describe(c) << ")\n";
    out << "welfare: " << format_number(welfare_stated(params, itr)) << '\n';
}

struct SimulateArgs {
    std::string design;
    std::string pop;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::string output;
};

void cmd_simulate(const SimulateArgs& a, std::ostream& out) {
    const TrialDesign design = io::design_from_json(io::read_file(a.design));
    const PopulationSpec pop = io::population_from_json(io::read_file(a.pop));
    std::ostringstream csv;
    if (const auto* ssp = std::get_if<SspRctDesign>(&design)) {
        const SspRctDataset data = simulate_ssprct(pop, *ssp, a.n, a.seed);
        io::write_ssprct_csv(csv, data.records());
    } else {
        const DrptDataset data = simulate_drpt(pop, std::get<DrptDesign>(design), a.n, a.seed);
        io::write_drpt_csv(csv, data.records());
    }
    emit_or_write(a.output, csv.str(), out);
}

struct EstimateArgs {
    std::string design;
    std::string data;
    bool json = false;
};

void cmd_estimate(const EstimateArgs& a, std::ostream& out) {
    const TrialDesign design = io::design_from_json(io::read_file(a.design));
    std::istringstream csv(io::read_file(a.data));
    BetaEstimates est;
    std::size_t n = 0;
    if (const auto* ssp = std::get_if<SspRctDesign>(&design)) {
        require_valid(*ssp);
        const SspRctDataset data(*ssp, io::read_ssprct_csv(csv));
        est = estimate_beta_ssprct(data);
        n = data.size();
    } else {
        const auto& drpt = std::get<DrptDesign>(design);
        require_valid(drpt);
        const DrptDataset data(drpt, io::read_drpt_csv(csv));
        est = estimate_beta_drpt(data);
        n = data.size();
    }
    const Itr itr = str_decide(est);
    const RuleCase c = rule_case(est.beta1_hat, est.beta0_hat);
    if (a.json) {
        nlohmann::ordered_json doc{{"n", n},
                                   {"beta1_hat", est.beta1_hat},
                                   {"beta0_hat", est.beta0_hat},
                                   {"delta1", itr.delta1},
                                   {"delta0", itr.delta0},
                                   {"case", to_string(c)},
                                   {"strategy_proofness", to_string(strategy_proofness(itr))}};
        out << doc.dump(2) << '\n';
        return;
    }
    out << "n: " << n << '\n';
    out << "beta1_hat: " << format_number(est.beta1_hat) << '\n';
    out << "beta0_hat: " << format_number(est.beta0_hat) << '\n';
    out << "decision: " << format_itr(itr) << ' ' << to_string(strategy_proofness(itr)) << '\n';
    out << "case: " << to_string(c) << " (" << describe(c) << ")\n";
}

struct RegretArgs {
    std::string config;
    std::string output;
    std::string csv;
};

void cmd_regret(const RegretArgs& a, std::ostream& out) {
    const std::string text = io::read_file(a.config);
    RegretExperimentConfig config = io::regret_config_from_json(text);
    const bool threads_in_config = nlohmann::json::parse(text).contains("threads");
    if (!threads_in_config) config.threads = threads_from_env();
    const RegretReport report = run_regret_experiment(config);

    if (!a.output.empty()) {
        io::write_file(a.output, ends_with(a.output, ".csv") ? io::regret_report_to_csv(report)
                                                             : io::regret_report_to_json(report));
    }
    if (!a.csv.empty()) io::write_file(a.csv, io::regret_report_to_csv(report));

    out << "design: " << report.design_kind << ", DGPs: " << config.dgps.size()
        << ", replications: " << report.replications << '\n';
    for (const auto& s : report.per_n) {
        out << "n=" << s.n << " max_mean_regret=" << format_number(s.max_mean_regret) << " (" << s.argmax_dgp
            << ") bound=" << format_number(s.bound) << " margin=" << format_number(s.margin) << ' '
            << (s.pass ? "PASS" : "FAIL") << '\n';
    }
}

struct SweepArgs {
    std::string effects;
    std::size_t grid = 1001;
    std::string mapping = "vocab";
    std::string output;
};

void cmd_sweep(const SweepArgs& a, std::ostream& out) {
    const VocabMathEffects eff =
        a.effects.empty() ? VocabMathEffects::reference_table() : io::effects_from_json(io::read_file(a.effects));
    const SweepTable table = sweep_weights(eff, a.grid, type_mapping_from_string(a.mapping.c_str()));
    const std::string csv = io::sweep_to_csv(table);
    if (a.output.empty() || a.output == "-") {
        out << csv;
        return;
    }
    io::write_file(a.output, csv);
    auto show = [&out](const char* name, const std::optional<double>& w) {
        out << name << ": " << (w ? format_number(*w) : std::string("none")) << '\n';
    };
    out << "mapping: " << to_string(table.mapping) << '\n';
    show("beta1_zero", table.breakpoints.beta1_zero);
    show("beta0_zero", table.breakpoints.beta0_zero);
    show("ate_zero", table.breakpoints.ate_zero);
}

void report_error(std::ostream& err, bool as_json, int code, const char* kind, const std::string& message) {
    if (as_json) {
        nlohmann::ordered_json doc{{"error", {{"code", code}, {"kind", kind}, {"message", message}}}};
        err << doc.dump() << '\n';
    } else {
        err << "error: " << message << '\n';
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Strategy-proof individualized treatment rules from stated preferences", "stratitr"};
    app.require_subcommand(1);
    bool error_json = false;
    app.add_flag("--error-json", error_json, "Report errors as a JSON object on stderr");

    OptimalItrArgs opt;
    auto* c_opt = app.add_subcommand("optimal-itr", "Optimal rule for given beta1, beta0");
    c_opt->add_option("--beta1", opt.beta1, "P(T=1) * tau(1)")->required();
    c_opt->add_option("--beta0", opt.beta0, "P(T=0) * tau(0)")->required();
    c_opt->add_option("--ey0", opt.ey0, "E[Y(0)], only shifts the reported welfare");
    c_opt->add_flag("--json", opt.json, "Print JSON");

    SimulateArgs sim;
    auto* c_sim = app.add_subcommand("simulate", "Simulate a trial dataset");
    c_sim->add_option("--design", sim.design, "Design JSON")->required();
    c_sim->add_option("--pop", sim.pop, "Population JSON")->required();
    c_sim->add_option("-n", sim.n, "Number of records")->required();
    c_sim->add_option("-s,--seed", sim.seed, "Random seed");
    c_sim->add_option("-o,--output", sim.output, "Output CSV (default: stdout)");

    EstimateArgs est;
    auto* c_est = app.add_subcommand("estimate", "Estimate betas and the plug-in rule from trial data");
    c_est->add_option("--design", est.design, "Design JSON")->required();
    c_est->add_option("--data", est.data, "Trial CSV")->required();
    c_est->add_flag("--json", est.json, "Print JSON");

    RegretArgs reg;
    auto* c_reg = app.add_subcommand("regret", "Monte Carlo regret experiment");
    c_reg->add_option("--config", reg.config, "Experiment JSON")->required();
    c_reg->add_option("-o,--output", reg.output, "Report path (.csv for CSV, otherwise JSON)");
    c_reg->add_option("--csv", reg.csv, "Additional flat CSV report");

    SweepArgs sw;
    auto* c_sw = app.add_subcommand("sweep", "Optimal rule across outcome weights");
    c_sw->add_option("--effects", sw.effects, "Effects JSON (default: built-in reference table)");
    c_sw->add_option("--grid", sw.grid, "Number of grid points")->check(CLI::Range(2, 100000000));
    c_sw->add_option("--mapping", sw.mapping, "Which preference group is type 1")
        ->check(CLI::IsMember({"vocab", "math"}));
    c_sw->add_option("-o,--output", sw.output, "Output CSV (default: stdout)");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    if (argv.empty()) argv.push_back("stratitr");

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
            app.exit(e, out, err);
            return kSuccess;
        }
        report_error(err, error_json, kValidationError, "usage", e.what());
        return kValidationError;
    }

    try {
        if (*c_opt) cmd_optimal_itr(opt, out);
        else if (*c_sim) cmd_simulate(sim, out);
        else if (*c_est) cmd_estimate(est, out);
        else if (*c_reg) cmd_regret(reg, out);
        else if (*c_sw) cmd_sweep(sw, out);
    } catch (const IoError& e) {
        report_error(err, error_json, kIoError, "io", e.what());
        return kIoError;
    } catch (const ValidationError& e) {
        report_error(err, error_json, kValidationError, "validation", e.what());
        return kValidationError;
    } catch (const DomainError& e) {
        report_error(err, error_json, kValidationError, "domain", e.what());
        return kValidationError;
    } catch (const std::exception& e) {
        report_error(err, error_json, kValidationError, "error", e.what());
        return kValidationError;
    }
    return kSuccess;
}

}  // namespace stratitr::cli
