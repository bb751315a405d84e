#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "stratitr/dataset.hpp"
#include "stratitr/empirical.hpp"
#include "stratitr/population.hpp"
#include "stratitr/regret.hpp"

namespace stratitr::io {

/// Shortest decimal text that parses back to the same double.
std::string format_number(double v);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

// JSON documents. Malformed or out-of-schema content throws ValidationError.

/// { "M": number, "atoms": [ {"y0":..., "y1":..., "t":0|1, "w":...}, ... ] }
PopulationSpec population_from_json(std::string_view text);
std::string population_to_json(const PopulationSpec& pop);

/// { "type":"ssprct", "p0":..., "p1":..., "kappa":..., ["M":...] } or
/// { "type":"drpt", "q":[q0,q1,q2], "kappa":..., ["M":...] }
TrialDesign design_from_json(std::string_view text);

/// {
///   "design": <design>,
///   "family": {"kind":"adversarial", "M":1, "n":[...], "half_points":6}
///          | {"kind":"populations", "populations":[{"id":..., "M":..., "atoms":[...]}, ...]},
///   "n": [16, 100, 400], "replications": 10000, "seed": 1, ["threads": 0]
/// }
/// An adversarial family without "n" is built for every listed sample size
/// and deduplicated.
RegretExperimentConfig regret_config_from_json(std::string_view text);

/// { "share_vocab": 0.62,
///   "vocab_preferrers": {"vocab": 8.5, "math": -3.4, "se_vocab": 0.6, "se_math": 0.6},
///   "math_preferrers":  {"vocab": 7.4, "math": -5.5, "se_vocab": 1.1, "se_math": 1.2} }
VocabMathEffects effects_from_json(std::string_view text);

std::string regret_report_to_json(const RegretReport& report);
/// Columns: dgp_id,n,mean_regret,se,bound,pass
std::string regret_report_to_csv(const RegretReport& report);

/// Columns: w,beta1,beta0,sum,regime,delta1,delta0
std::string sweep_to_csv(const SweepTable& table);

// Trial CSV: header row "y,d,s" (SSP-RCT) or "y,d,z" (DRPT), then one
// record per line. Parse errors carry the 1-based line number.

void write_ssprct_csv(std::ostream& out, std::span<const SspRctRecord> records);
void write_drpt_csv(std::ostream& out, std::span<const DrptRecord> records);
std::vector<SspRctRecord> read_ssprct_csv(std::istream& in);
std::vector<DrptRecord> read_drpt_csv(std::istream& in);

}  // namespace stratitr::io
