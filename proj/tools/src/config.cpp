#include "workbench/config.hpp"

#include <cmath>
#include <fstream>
#include <set>

#include <CLI11.hpp>

namespace workbench {

using nlohmann::json;

namespace {

// Typed reads from one config object; every key must be consumed exactly by a reader call.
class Fields {
public:
    Fields(const json& obj, std::string where, std::set<std::string> allowed) : obj_(obj), where_(std::move(where)) {
        if (!obj_.is_object()) throw ConfigError(where_ + " must be an object");
        for (const auto& [key, value] : obj_.items())
            if (!allowed.count(key)) throw ConfigError("unknown field '" + key + "' in " + where_);
    }

    bool has(const std::string& key) const { return obj_.contains(key); }

    int integer(const std::string& key, std::optional<int> fallback = {}) const {
        const json* v = find(key, fallback.has_value());
        if (!v) return *fallback;
        if (!v->is_number_integer()) throw bad(key, "an integer");
        return v->get<int>();
    }

    double real(const std::string& key, std::optional<double> fallback = {}) const {
        const json* v = find(key, fallback.has_value());
        if (!v) return *fallback;
        if (!v->is_number()) throw bad(key, "a number");
        const double x = v->get<double>();
        if (!std::isfinite(x)) throw bad(key, "finite");
        return x;
    }

    std::optional<double> maybe_real(const std::string& key) const {
        if (!has(key)) return std::nullopt;
        return real(key);
    }

    // a number or a [re, im] pair
    std::optional<cplx> maybe_complex(const std::string& key) const {
        if (!has(key)) return std::nullopt;
        const json& v = obj_.at(key);
        if (v.is_number()) return cplx(v.get<double>(), 0.0);
        if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
            return cplx(v[0].get<double>(), v[1].get<double>());
        throw bad(key, "a number or [re, im]");
    }

    bool boolean(const std::string& key, bool fallback) const {
        const json* v = find(key, true);
        if (!v) return fallback;
        if (!v->is_boolean()) throw bad(key, "true or false");
        return v->get<bool>();
    }

    std::string string(const std::string& key, std::optional<std::string> fallback = {}) const {
        const json* v = find(key, fallback.has_value());
        if (!v) return *fallback;
        if (!v->is_string()) throw bad(key, "a string");
        return v->get<std::string>();
    }

    std::vector<int> integers(const std::string& key) const {
        const json& v = obj_.at(key);
        if (v.is_number_integer()) return {v.get<int>()};
        if (!v.is_array()) throw bad(key, "an integer or a list of integers");
        std::vector<int> out;
        for (const auto& x : v) {
            if (!x.is_number_integer()) throw bad(key, "a list of integers");
            out.push_back(x.get<int>());
        }
        return out;
    }

    const json& raw(const std::string& key) const { return obj_.at(key); }

private:
    const json* find(const std::string& key, bool optional) const {
        if (obj_.contains(key)) return &obj_.at(key);
        if (!optional) throw ConfigError("missing field '" + key + "' in " + where_);
        return nullptr;
    }

    ConfigError bad(const std::string& key, const std::string& what) const {
        return ConfigError("field '" + key + "' in " + where_ + " must be " + what);
    }

    const json& obj_;
    std::string where_;
};

qis::Model parse_model(const std::string& s) {
    if (s == "xxz") return qis::Model::xxz;
    if (s == "xxx") return qis::Model::xxx;
    throw ConfigError("model must be xxx or xxz, got '" + s + "'");
}

std::vector<qis::Gradation> parse_gradations(const std::string& s) {
    if (s == "principal") return {qis::Gradation::principal};
    if (s == "homogeneous") return {qis::Gradation::homogeneous};
    if (s == "both") return {qis::Gradation::principal, qis::Gradation::homogeneous};
    throw ConfigError("gradation must be principal, homogeneous or both, got '" + s + "'");
}

qis::KSpec::Kind parse_k(const std::string& s) {
    if (s == "identity") return qis::KSpec::Kind::identity;
    if (s == "gz_dvgr") return qis::KSpec::Kind::gz_dvgr;
    if (s == "blob") return qis::KSpec::Kind::blob;
    throw ConfigError("k must be identity, gz_dvgr or blob, got '" + s + "'");
}

int dimension_from_spin(double s) {
    const double twice = 2.0 * s;
    if (s <= 0.0 || std::abs(twice - std::round(twice)) > 1e-12) throw ConfigError("spin must be a positive half-integer");
    return static_cast<int>(std::lround(twice)) + 1;
}

void require(bool ok, const std::string& msg) {
    if (!ok) throw ConfigError(msg);
}

std::optional<cplx> mu_or_delta(const Fields& f) { return f.has("mu") || f.has("delta") ? std::optional<cplx>(mu_from_inputs(f.maybe_real("delta"), f.maybe_complex("mu"))) : std::nullopt; }

VerifyConfig parse_verify(const json& obj) {
    const Fields f(obj, "verify", {"suite", "model", "mu", "delta", "gradation", "N", "n", "pairs", "k", "xi", "kappa",
                                   "blob_m", "blob_gamma", "blob_c", "corruption"});
    VerifyConfig c;
    c.suite = f.string("suite");
    require(std::set<std::string>{"ybe", "re", "braid", "frt", "symmetry"}.count(c.suite) == 1,
            "suite must be one of ybe, re, braid, frt, symmetry");
    c.model = parse_model(f.string("model", "xxz"));
    if (auto mu = mu_or_delta(f)) c.mu = *mu;
    c.k.kind = parse_k(f.string("k", "identity"));
    // the blob K is written in the homogeneous gradation
    c.gradations = parse_gradations(f.string("gradation", c.k.kind == qis::KSpec::Kind::blob ? "homogeneous" : "both"));
    c.N = f.integer("N", 3);
    c.n = f.integer("n", 2);
    c.pairs = f.integer("pairs", 20);
    if (auto xi = f.maybe_complex("xi")) c.k.xi = *xi;
    if (auto kappa = f.maybe_complex("kappa")) c.k.kappa = *kappa;
    c.k.blob_m = f.real("blob_m", c.k.blob_m);
    c.k.blob_gamma = f.real("blob_gamma", c.k.blob_gamma);
    if (auto bc = f.maybe_complex("blob_c")) c.k.blob_c = *bc;
    c.corruption = f.real("corruption", 0.0);
    require(c.N >= 2 && c.N <= 8, "N must be in [2, 8]");
    require(c.n >= 2 && c.n <= 4, "n must be in [2, 4]");
    require(c.pairs >= 1 && c.pairs <= 1000, "pairs must be in [1, 1000]");
    return c;
}

SpectrumConfig parse_spectrum(const json& obj) {
    const Fields f(obj, "spectrum", {"N", "delta", "mu", "periodic"});
    SpectrumConfig c;
    c.N = f.integer("N");
    const cplx mu = mu_from_inputs(f.maybe_real("delta"), f.maybe_complex("mu"));
    const cplx delta = std::cos(mu);
    require(std::abs(delta.imag()) < 1e-12, "cos(mu) must be real for a Hermitian chain");
    c.delta = f.has("delta") ? f.real("delta") : delta.real();
    c.periodic = f.boolean("periodic", true);
    require(c.N >= 1 && c.N <= 12, "N must be in [1, 12]");
    return c;
}

BetheConfig parse_bethe(const json& obj) {
    const Fields f(obj, "bethe", {"N", "s", "mu", "delta", "M", "restarts", "box", "validate"});
    BetheConfig c;
    c.N = f.integer("N");
    c.n = dimension_from_spin(f.real("s", 0.5));
    c.mu = mu_from_inputs(f.maybe_real("delta"), f.maybe_complex("mu"));
    if (f.has("M")) c.Ms = f.integers("M");
    c.restarts = f.integer("restarts", 64);
    c.box = f.real("box", 1.5);
    c.validate = f.boolean("validate", true);
    require(c.N >= 1, "N must be positive");
    require(c.restarts >= 0, "restarts must be non-negative");
    require(c.box > 0.0, "box must be positive");
    return c;
}

PhaseScanConfig parse_phase_scan(const json& obj) {
    const Fields f(obj, "phase-scan", {"N", "deltas", "grid"});
    PhaseScanConfig c;
    c.N = f.integer("N");
    require(f.has("deltas") != f.has("grid"), "give exactly one of deltas or grid");
    if (f.has("deltas")) {
        const json& d = f.raw("deltas");
        require(d.is_array(), "deltas must be a list of numbers");
        for (const auto& x : d) {
            require(x.is_number(), "deltas must be a list of numbers");
            c.deltas.push_back(x.get<double>());
        }
    } else {
        const Fields g(f.raw("grid"), "phase-scan.grid", {"from", "to", "steps"});
        const double a = g.real("from"), b = g.real("to");
        const int steps = g.integer("steps");
        require(steps >= 1, "grid.steps must be positive");
        for (int k = 0; k <= steps; ++k) c.deltas.push_back(a + (b - a) * k / steps);
    }
    require(!c.deltas.empty(), "empty delta grid");
    for (double d : c.deltas) require(std::isfinite(d), "delta grid must be finite");
    require(c.N >= 1 && c.N <= 12, "N must be in [1, 12]");
    return c;
}

CasimirConfig parse_casimir(const json& obj) {
    const Fields f(obj, "casimir", {"mu", "delta", "n"});
    CasimirConfig c;
    if (auto mu = mu_or_delta(f)) c.mu = *mu;
    if (f.has("n")) c.dims = f.integers("n");
    for (int n : c.dims) require(n >= 1 && n <= 16, "n must be in [1, 16]");
    return c;
}

}  // namespace

Command parse_command(const std::string& name) {
    if (name == "verify") return Command::verify;
    if (name == "spectrum") return Command::spectrum;
    if (name == "bethe") return Command::bethe;
    if (name == "phase-scan") return Command::phase_scan;
    if (name == "casimir") return Command::casimir;
    throw ConfigError("unknown command '" + name + "'");
}

std::string command_name(Command c) {
    switch (c) {
        case Command::verify: return "verify";
        case Command::spectrum: return "spectrum";
        case Command::bethe: return "bethe";
        case Command::phase_scan: return "phase-scan";
        case Command::casimir: return "casimir";
    }
    return "";
}

cplx mu_from_inputs(const std::optional<double>& delta, const std::optional<cplx>& mu) {
    if (delta && mu) throw ConfigError("give delta or mu, not both");
    if (mu) return *mu;
    if (!delta) throw ConfigError("missing anisotropy: give delta or mu");
    const double d = *delta;
    if (!std::isfinite(d)) throw ConfigError("delta must be finite");
    if (d > 1.0) return {0.0, std::acosh(d)};
    if (d < -1.0) return {M_PI, std::acosh(-d)};
    return {std::acos(d), 0.0};
}

std::optional<RunOptions> parse_args(int argc, const char* const* argv, std::ostream& help_out) {
    CLI::App app{"Quantum integrable chain workbench", "workbench"};
    std::string command, format = "json";
    RunOptions opt;
    std::uint64_t seed = 0;
    app.add_option("command", command, "verify | spectrum | bethe | phase-scan | casimir")->required();
    app.add_option("--config", opt.config_path, "JSON config file")->required();
    auto* out = app.add_option("--out", "Output file (default stdout)");
    app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    auto* seed_opt = app.add_option("--seed", seed, "Random seed for solver restarts");
    app.add_option("--threads", opt.threads, "Worker threads")->check(CLI::Range(1, 256));
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        help_out << app.help();
        return std::nullopt;
    } catch (const CLI::ParseError& e) {
        throw ConfigError(e.what());
    }
    opt.command = parse_command(command);
    opt.format = format == "csv" ? Format::csv : Format::json;
    if (*out) opt.out = out->as<std::string>();
    if (*seed_opt) opt.seed = seed;
    return opt;
}

RunConfig parse_config(const json& doc, Command command) {
    const std::string name = command_name(command);
    const Fields top(doc, "config", {name, "seed"});
    if (!top.has(name)) throw ConfigError("config has no '" + name + "' section");
    RunConfig rc;
    rc.command = command;
    if (top.has("seed")) {
        const json& s = top.raw("seed");
        require(s.is_number_unsigned(), "seed must be a non-negative integer");
        rc.seed = s.get<std::uint64_t>();
    }
    const json& body = top.raw(name);
    switch (command) {
        case Command::verify: rc.params = parse_verify(body); break;
        case Command::spectrum: rc.params = parse_spectrum(body); break;
        case Command::bethe: rc.params = parse_bethe(body); break;
        case Command::phase_scan: rc.params = parse_phase_scan(body); break;
        case Command::casimir: rc.params = parse_casimir(body); break;
    }
    return rc;
}

RunConfig load_config(const std::string& path, Command command) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("invalid JSON in config: ") + e.what());
    }
    return parse_config(doc, command);
}

}  // namespace workbench
