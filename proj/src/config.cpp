#include "nls/config.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <stdexcept>

#include "nls/snapshot.hpp"

namespace nls::config {

namespace {

// Pulls typed values out of a JSON object while tracking which keys were
// consumed; finish() rejects anything left over (fail-closed).
class StrictReader {
public:
    explicit StrictReader(const json& obj, std::string context)
        : obj_(obj), context_(std::move(context)) {
        if (!obj.is_object())
            throw std::invalid_argument(context_ + ": config must be a JSON object");
    }

    template <typename T>
    T require(const char* key) {
        if (!obj_.contains(key))
            throw std::invalid_argument(context_ + ": missing required key `" + key + "`");
        return take<T>(key);
    }

    template <typename T>
    T optional(const char* key, T fallback) {
        if (!obj_.contains(key)) return fallback;
        return take<T>(key);
    }

    bool has(const char* key) const { return obj_.contains(key); }

    void finish() {
        for (auto it = obj_.begin(); it != obj_.end(); ++it)
            if (!seen_.contains(it.key()))
                throw std::invalid_argument(context_ + ": unknown key `" + it.key() + "`");
    }

private:
    template <typename T>
    T take(const char* key) {
        seen_.insert(key);
        try {
            return obj_.at(key).get<T>();
        } catch (const json::exception&) {
            throw std::invalid_argument(context_ + ": key `" + key + "` has the wrong type");
        }
    }

    const json& obj_;
    std::string context_;
    std::set<std::string> seen_;
};

std::vector<double> default_taus() {
    std::vector<double> taus;
    for (int j = 6; j <= 13; ++j) taus.push_back(std::ldexp(1.0, -j));
    return taus;
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

json load(const std::filesystem::path& path, const std::vector<std::string>& overrides) {
    std::ifstream is(path);
    if (!is) throw std::invalid_argument("config file not found: " + path.string());
    json obj;
    try {
        obj = json::parse(is);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("config file is not valid JSON: " + path.string() + ": " +
                                    e.what());
    }
    for (const auto& kv : overrides) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0)
            throw std::invalid_argument("override must look like key=value, got `" + kv + "`");
        const std::string key = kv.substr(0, eq);
        const std::string value = kv.substr(eq + 1);
        const json parsed = json::parse(value, nullptr, /*allow_exceptions=*/false);
        obj[key] = parsed.is_discarded() ? json(value) : parsed;
    }
    return obj;
}

void apply_seed_env(json& obj) {
    if (const char* env = std::getenv("NLS_SEED")) {
        char* end = nullptr;
        const unsigned long long seed = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0')
            throw std::invalid_argument("NLS_SEED must be an unsigned integer");
        obj["seed"] = seed;
    }
}

GenerateConfig parse_generate(const json& obj) {
    StrictReader r(obj, "generate");
    GenerateConfig cfg;
    cfg.M = r.require<int>("M");
    cfg.s = r.require<double>("s");
    cfg.seed = r.require<std::uint64_t>("seed");
    cfg.output = r.optional<std::string>("output", "field");
    r.finish();
    Grid2D grid(cfg.M);                    // validates M
    RoughDataSpec probe(cfg.s, cfg.seed, grid); // validates s
    (void)probe;
    return cfg;
}

RunConfig parse_run(const json& obj) {
    StrictReader r(obj, "run");
    RunConfig cfg;
    cfg.input = r.require<std::string>("input");
    cfg.tau = r.require<double>("tau");
    cfg.n_steps = r.require<long>("n_steps");
    cfg.mu = r.optional<int>("mu", -1);
    cfg.filtered = r.optional<bool>("filtered", true);
    cfg.dealias = r.optional<bool>("dealias", false);
    if (r.has("snapshot_every")) cfg.snapshot_every = r.optional<long>("snapshot_every", 0);
    cfg.output = r.optional<std::string>("output", "final");
    r.finish();
    StepperConfig probe(cfg.tau, cfg.mu, cfg.filtered, cfg.dealias); // validates tau, mu
    (void)probe;
    if (cfg.n_steps < 0) throw std::invalid_argument("run: key `n_steps` must be >= 0");
    return cfg;
}

ExperimentConfig parse_converge(const json& obj) {
    StrictReader r(obj, "converge");
    const int m = r.optional<int>("M", 128);
    const double s = r.require<double>("s");
    const std::uint64_t seed = r.require<std::uint64_t>("seed");

    Grid2D grid(m);
    ExperimentConfig cfg{grid, RoughDataSpec(s, seed, grid)};
    cfg.mu = r.optional<int>("mu", -1);
    cfg.T = r.optional<double>("T", 1.0);
    cfg.taus = r.optional<std::vector<double>>("taus", default_taus());
    cfg.tau_ref = r.optional<double>("tau_ref", std::ldexp(1.0, -16));
    cfg.reference_filtered = r.optional<bool>("reference_filtered", true);
    cfg.dealias = r.optional<bool>("dealias", false);
    cfg.fit_skip_largest = r.optional<int>("fit_skip_largest", 0);
    cfg.output = r.optional<std::string>("output", "converge");
    r.finish();
    cfg.validate();
    return cfg;
}

ResolutionConfig parse_resolution(const json& obj) {
    json base = obj;
    std::vector<int> grids;
    if (base.contains("grids")) {
        try {
            grids = base.at("grids").get<std::vector<int>>();
        } catch (const json::exception&) {
            throw std::invalid_argument("resolution: key `grids` has the wrong type");
        }
        base.erase("grids");
    } else {
        grids = {64, 256};
    }
    if (grids.empty()) throw std::invalid_argument("resolution: key `grids` must be nonempty");

    ResolutionConfig cfg{parse_converge(base), grids};
    // Re-validate against each grid so a bad entry is named before any run.
    for (int m : grids) {
        ExperimentConfig probe = cfg.base;
        probe.grid = Grid2D(m);
        probe.data = RoughDataSpec(cfg.base.data.s, cfg.base.data.seed, probe.grid);
        probe.validate();
    }
    return cfg;
}

DiagnoseConfig parse_diagnose(const json& obj) {
    StrictReader r(obj, "diagnose");
    DiagnoseConfig cfg;
    cfg.M = r.optional<int>("M", 16);
    cfg.s = r.require<double>("s");
    cfg.seed = r.require<std::uint64_t>("seed");
    cfg.tau = r.require<double>("tau");
    cfg.n_fields = r.require<long>("n_fields");
    cfg.mu = r.optional<int>("mu", -1);
    cfg.bourgain_s = r.optional<double>("bourgain_s", 0.5);
    cfg.bourgain_b = r.optional<double>("bourgain_b", 0.25);
    cfg.b1 = r.optional<double>("b1", 0.55);
    cfg.output = r.optional<std::string>("output", "diagnose");
    r.finish();
    Grid2D grid(cfg.M);
    RoughDataSpec probe(cfg.s, cfg.seed, grid);
    (void)probe;
    StepperConfig sprobe(cfg.tau, cfg.mu);
    (void)sprobe;
    if (cfg.n_fields < 1) throw std::invalid_argument("diagnose: key `n_fields` must be >= 1");
    if (!(cfg.b1 > 0.5)) throw std::invalid_argument("diagnose: key `b1` must be > 1/2");
    return cfg;
}

std::string report_csv(const ConvergenceReport& report) {
    std::string out = "tau,l2_error\n";
    for (const auto& [tau, err] : report.rows)
        out += format_double(tau) + "," + format_double(err) + "\n";
    return out;
}

json report_json(const ConvergenceReport& report) {
    json j;
    j["config"] = json::parse(report.config_echo);
    json rows = json::array();
    for (const auto& [tau, err] : report.rows) rows.push_back({{"tau", tau}, {"l2_error", err}});
    j["rows"] = rows;
    j["fitted_order"] = report.fitted_order;
    j["fit_range"] = {report.fit_range.first, report.fit_range.second};
    j["reference_self_check"] = {{"delta", report.reference_check.delta},
                                 {"smallest_error", report.reference_check.smallest_error},
                                 {"passed", report.reference_check.passed}};
    return j;
}

void write_convergence_report(const ConvergenceReport& report,
                              const std::filesystem::path& base) {
    auto csv_path = base;
    csv_path += ".csv";
    auto json_path = base;
    json_path += ".json";
    write_text_atomic(csv_path, report_csv(report));
    write_text_atomic(json_path, report_json(report).dump(2) + "\n");
}

} // namespace nls::config
