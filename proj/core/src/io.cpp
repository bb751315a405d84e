#include "stratitr/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "stratitr/error.hpp"

namespace stratitr::io {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

json parse_json(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed JSON: ") + e.what());
    }
}

const json& member(const json& obj, const char* key) {
    if (!obj.is_object()) throw ValidationError(std::string("expected a JSON object holding '") + key + "'");
    auto it = obj.find(key);
    if (it == obj.end()) throw ValidationError(std::string("missing field '") + key + "'");
    return *it;
}

double number(const json& obj, const char* key) {
    const json& v = member(obj, key);
    if (!v.is_number()) throw ValidationError(std::string("field '") + key + "' must be a number");
    return v.get<double>();
}

double number_or(const json& obj, const char* key, double fallback) {
    return obj.contains(key) ? number(obj, key) : fallback;
}

long long integer(const json& v, const char* what) {
    if (v.is_number_integer()) return v.get<long long>();
    if (v.is_number_float()) {
        const double d = v.get<double>();
        if (std::floor(d) == d && std::abs(d) < 9.0e15) return static_cast<long long>(d);
    }
    throw ValidationError(std::string(what) + " must be an integer");
}

std::uint64_t unsigned_integer(const json& v, const char* what) {
    if (v.is_number_unsigned()) return v.get<std::uint64_t>();
    const long long i = integer(v, what);
    if (i < 0) throw ValidationError(std::string(what) + " must be non-negative");
    return static_cast<std::uint64_t>(i);
}

PopulationSpec population_from(const json& doc) {
    PopulationSpec pop;
    pop.M = number(doc, "M");
    const json& atoms = member(doc, "atoms");
    if (!atoms.is_array()) throw ValidationError("'atoms' must be an array");
    for (const json& a : atoms)
        pop.atoms.push_back({number(a, "y0"), number(a, "y1"), preference_from_int(integer(member(a, "t"), "atom t")),
                             number(a, "w")});
    validate(pop);
    return pop;
}

TrialDesign design_from(const json& doc) {
    const json& type = member(doc, "type");
    if (!type.is_string()) throw ValidationError("design 'type' must be a string");
    const std::string kind = type.get<std::string>();
    if (kind == "ssprct") {
        SspRctDesign d;
        d.p0 = number(doc, "p0");
        d.p1 = number(doc, "p1");
        d.kappa = number(doc, "kappa");
        d.M = number_or(doc, "M", kUnboundedOutcome);
        return d;
    }
    if (kind == "drpt") {
        DrptDesign d;
        const json& q = member(doc, "q");
        if (!q.is_array() || q.size() != 3 || !std::all_of(q.begin(), q.end(), [](const json& x) { return x.is_number(); }))
            throw ValidationError("DRPT 'q' must be an array of three numbers");
        for (std::size_t z = 0; z < 3; ++z) d.q[z] = q[z].get<double>();
        d.kappa = number(doc, "kappa");
        d.M = number_or(doc, "M", kUnboundedOutcome);
        return d;
    }
    throw ValidationError("design 'type' must be \"ssprct\" or \"drpt\", got \"" + kind + "\"");
}

std::vector<std::size_t> size_list(const json& v) {
    if (!v.is_array() || v.empty()) throw ValidationError("'n' must be a non-empty array of sample sizes");
    std::vector<std::size_t> out;
    for (const json& x : v) out.push_back(static_cast<std::size_t>(unsigned_integer(x, "sample size")));
    return out;
}

ordered_json to_json_number(double v) {
    if (std::isfinite(v)) return v;
    return nullptr;
}

template <class Record, class Emit>
void write_csv(std::ostream& out, const char* header, std::span<const Record> records, Emit emit) {
    out << header << '\n';
    for (const auto& r : records) {
        emit(out, r);
        out << '\n';
    }
    if (!out) throw IoError("failed writing CSV");
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::array<std::string_view, 3> split3(std::string_view line, std::size_t lineno) {
    std::array<std::string_view, 3> out;
    std::size_t field = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
        if (i == line.size() || line[i] == ',') {
            if (field >= 3) throw ValidationError("line " + std::to_string(lineno) + ": expected 3 fields");
            out[field++] = trim(line.substr(start, i - start));
            start = i + 1;
        }
    }
    if (field != 3) throw ValidationError("line " + std::to_string(lineno) + ": expected 3 fields");
    return out;
}

double parse_double(std::string_view s, std::size_t lineno) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty() || !std::isfinite(v))
        throw ValidationError("line " + std::to_string(lineno) + ": invalid number '" + std::string(s) + "'");
    return v;
}

long long parse_int(std::string_view s, std::size_t lineno) {
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw ValidationError("line " + std::to_string(lineno) + ": invalid integer '" + std::string(s) + "'");
    return v;
}

template <class Record, class Parse>
std::vector<Record> read_csv(std::istream& in, std::string_view expected_header, Parse parse) {
    std::string line;
    std::size_t lineno = 0;
    if (!std::getline(in, line)) throw ValidationError("CSV is empty; header row is mandatory");
    ++lineno;
    std::string_view header = trim(line);
    if (header.substr(0, 3) == "\xEF\xBB\xBF") header.remove_prefix(3);
    std::string compact;
    for (char c : header)
        if (c != ' ' && c != '\t') compact.push_back(c);
    if (compact != expected_header)
        throw ValidationError("CSV header must be '" + std::string(expected_header) + "', got '" + std::string(header) + "'");
    std::vector<Record> out;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string_view body = trim(line);
        if (body.empty()) continue;
        out.push_back(parse(split3(body, lineno), lineno));
    }
    if (in.bad()) throw IoError("failed reading CSV");
    return out;
}

}  // namespace

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) return "0";  // folds -0
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    if (ec != std::errc()) throw ValidationError("number formatting failed");
    return std::string(buf.data(), ptr);
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw IoError("failed reading '" + path.string() + "'");
    return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw IoError("failed writing '" + path.string() + "'");
}

PopulationSpec population_from_json(std::string_view text) { return population_from(parse_json(text)); }

std::string population_to_json(const PopulationSpec& pop) {
    ordered_json doc;
    doc["M"] = pop.M;
    doc["atoms"] = ordered_json::array();
    for (const auto& a : pop.atoms)
        doc["atoms"].push_back({{"y0", a.y0}, {"y1", a.y1}, {"t", to_int(a.t)}, {"w", a.w}});
    return doc.dump(2) + "\n";
}

TrialDesign design_from_json(std::string_view text) { return design_from(parse_json(text)); }

RegretExperimentConfig regret_config_from_json(std::string_view text) {
    const json doc = parse_json(text);
    RegretExperimentConfig config;
    config.design = design_from(member(doc, "design"));
    config.sample_sizes = size_list(member(doc, "n"));
    config.replications = static_cast<std::size_t>(unsigned_integer(member(doc, "replications"), "replications"));
    config.seed = unsigned_integer(member(doc, "seed"), "seed");
    if (doc.contains("threads")) config.threads = static_cast<unsigned>(unsigned_integer(doc["threads"], "threads"));

    const json& family = member(doc, "family");
    const json& kind_field = member(family, "kind");
    if (!kind_field.is_string()) throw ValidationError("family 'kind' must be a string");
    const std::string kind = kind_field.get<std::string>();
    if (kind == "adversarial") {
        const double design_M = std::visit([](const auto& d) { return d.M; }, config.design);
        const double M = number_or(family, "M", design_M);
        if (!std::isfinite(M)) throw ValidationError("adversarial family needs 'M' (in the family or the design)");
        const double kappa = std::visit([](const auto& d) { return d.kappa; }, config.design);
        const int half = family.contains("half_points")
                             ? static_cast<int>(integer(family["half_points"], "half_points"))
                             : 6;
        const auto sizes = family.contains("n") ? size_list(family["n"]) : config.sample_sizes;
        std::set<std::pair<double, double>> seen;
        for (std::size_t n : sizes) {
            for (auto& dgp : adversarial_family(M, kappa, n, half)) {
                const DerivedParams p = population_params(dgp.population);
                if (seen.insert({p.beta1, p.beta0}).second) config.dgps.push_back(std::move(dgp));
            }
        }
    } else if (kind == "populations") {
        const json& pops = member(family, "populations");
        if (!pops.is_array()) throw ValidationError("'populations' must be an array");
        std::size_t index = 0;
        for (const json& p : pops) {
            std::string id = "dgp" + std::to_string(index++);
            if (p.contains("id")) {
                if (!p["id"].is_string()) throw ValidationError("population 'id' must be a string");
                id = p["id"].get<std::string>();
            }
            config.dgps.push_back({std::move(id), population_from(p)});
        }
    } else {
        throw ValidationError("family 'kind' must be \"adversarial\" or \"populations\"");
    }
    validate(config);
    return config;
}

VocabMathEffects effects_from_json(std::string_view text) {
    const json doc = parse_json(text);
    auto group = [](const json& g) {
        GroupEffects e;
        e.on_vocab = {number(g, "vocab"), number_or(g, "se_vocab", 0.0)};
        e.on_math = {number(g, "math"), number_or(g, "se_math", 0.0)};
        return e;
    };
    VocabMathEffects eff;
    eff.share_vocab = number(doc, "share_vocab");
    if (!(eff.share_vocab >= 0.0 && eff.share_vocab <= 1.0)) throw ValidationError("'share_vocab' must lie in [0, 1]");
    eff.vocab_preferrers = group(member(doc, "vocab_preferrers"));
    eff.math_preferrers = group(member(doc, "math_preferrers"));
    return eff;
}

std::string regret_report_to_json(const RegretReport& report) {
    ordered_json doc;
    doc["design"] = report.design_kind;
    doc["M"] = report.M;
    doc["kappa"] = report.kappa;
    doc["replications"] = report.replications;
    doc["seed"] = report.seed;
    doc["all_pass"] = report.all_pass();
    doc["summary"] = ordered_json::array();
    for (const auto& s : report.per_n) {
        doc["summary"].push_back({{"n", s.n},
                                  {"max_mean_regret", to_json_number(s.max_mean_regret)},
                                  {"argmax_dgp", s.argmax_dgp},
                                  {"max_se", to_json_number(s.max_se)},
                                  {"bound", to_json_number(s.bound)},
                                  {"margin", to_json_number(s.margin)},
                                  {"pass", s.pass}});
    }
    doc["rows"] = ordered_json::array();
    for (const auto& r : report.rows) {
        doc["rows"].push_back({{"dgp_id", r.dgp_id},
                               {"n", r.n},
                               {"beta1", to_json_number(r.beta1)},
                               {"beta0", to_json_number(r.beta0)},
                               {"mean_regret", to_json_number(r.mean_regret)},
                               {"se", to_json_number(r.se)},
                               {"min_regret", to_json_number(r.min_regret)},
                               {"replications", r.replications},
                               {"bound", to_json_number(r.bound)},
                               {"pass", r.pass}});
    }
    return doc.dump(2) + "\n";
}

std::string regret_report_to_csv(const RegretReport& report) {
    std::string out = "dgp_id,n,mean_regret,se,bound,pass\n";
    for (const auto& r : report.rows) {
        out += r.dgp_id + ',' + std::to_string(r.n) + ',' + format_number(r.mean_regret) + ',' + format_number(r.se) +
               ',' + format_number(r.bound) + ',' + (r.pass ? "true" : "false") + '\n';
    }
    return out;
}

std::string sweep_to_csv(const SweepTable& table) {
    std::string out = "w,beta1,beta0,sum,regime,delta1,delta0\n";
    for (const auto& r : table.rows) {
        out += format_number(r.w) + ',' + format_number(r.beta1) + ',' + format_number(r.beta0) + ',' +
               format_number(r.sum) + ',' + to_string(r.regime) + ',' + format_number(r.itr.delta1) + ',' +
               format_number(r.itr.delta0) + '\n';
    }
    return out;
}

void write_ssprct_csv(std::ostream& out, std::span<const SspRctRecord> records) {
    write_csv(out, "y,d,s", records, [](std::ostream& o, const SspRctRecord& r) {
        o << format_number(r.y) << ',' << int{r.d} << ',' << to_int(r.s);
    });
}

void write_drpt_csv(std::ostream& out, std::span<const DrptRecord> records) {
    write_csv(out, "y,d,z", records, [](std::ostream& o, const DrptRecord& r) {
        o << format_number(r.y) << ',' << int{r.d} << ',' << int{r.z};
    });
}

std::vector<SspRctRecord> read_ssprct_csv(std::istream& in) {
    return read_csv<SspRctRecord>(in, "y,d,s", [](const std::array<std::string_view, 3>& f, std::size_t lineno) {
        const long long d = parse_int(f[1], lineno);
        const long long s = parse_int(f[2], lineno);
        if (d != 0 && d != 1) throw ValidationError("line " + std::to_string(lineno) + ": d must be 0 or 1");
        if (s != 0 && s != 1) throw ValidationError("line " + std::to_string(lineno) + ": s must be 0 or 1");
        return SspRctRecord{parse_double(f[0], lineno), static_cast<std::uint8_t>(d), preference_from_int(s)};
    });
}

std::vector<DrptRecord> read_drpt_csv(std::istream& in) {
    return read_csv<DrptRecord>(in, "y,d,z", [](const std::array<std::string_view, 3>& f, std::size_t lineno) {
        const long long d = parse_int(f[1], lineno);
        const long long z = parse_int(f[2], lineno);
        if (d != 0 && d != 1) throw ValidationError("line " + std::to_string(lineno) + ": d must be 0 or 1");
        if (z < 0 || z > 2) throw ValidationError("line " + std::to_string(lineno) + ": z must be 0, 1 or 2");
        return DrptRecord{parse_double(f[0], lineno), static_cast<std::uint8_t>(d), static_cast<std::uint8_t>(z)};
    });
}

}  // namespace stratitr::io
