#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include <qis/chain.hpp>

namespace workbench {

using qis::cplx;

enum class Command { verify, spectrum, bethe, phase_scan, casimir };
enum class Format { json, csv };

// Anything wrong with the invocation or the config file; maps to exit code 2.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunOptions {
    Command command = Command::verify;
    std::string config_path;
    std::optional<std::string> out;
    Format format = Format::json;
    std::optional<std::uint64_t> seed;
    int threads = 1;
};

struct VerifyConfig {
    std::string suite;  // ybe, re, braid, frt, symmetry
    qis::Model model = qis::Model::xxz;
    cplx mu{0.3, 0.0};
    std::vector<qis::Gradation> gradations{qis::Gradation::principal, qis::Gradation::homogeneous};
    int N = 3;
    int n = 2;
    int pairs = 20;
    qis::KSpec k;
    double corruption = 0.0;  // added as eps (sz (x) 1) to the R-matrix
};

struct SpectrumConfig {
    int N = 2;
    double delta = 0.5;
    bool periodic = true;
};

struct BetheConfig {
    int N = 2;
    int n = 2;
    cplx mu{0.7, 0.0};
    std::vector<int> Ms;  // empty means every sector
    int restarts = 64;
    double box = 1.5;
    bool validate = true;
};

struct PhaseScanConfig {
    int N = 2;
    std::vector<double> deltas;
};

struct CasimirConfig {
    cplx mu{0.3, 0.0};
    std::vector<int> dims{2, 3};
};

struct RunConfig {
    Command command = Command::verify;
    std::uint64_t seed = 0;
    std::variant<VerifyConfig, SpectrumConfig, BetheConfig, PhaseScanConfig, CasimirConfig> params;
};

Command parse_command(const std::string& name);
std::string command_name(Command c);

// argv[1] is the command; throws ConfigError on any usage problem.
// Returns nullopt when help was requested (text written to help_out).
std::optional<RunOptions> parse_args(int argc, const char* const* argv, std::ostream& help_out);

// The document holds one object keyed by the command name.
RunConfig parse_config(const nlohmann::json& doc, Command command);
RunConfig load_config(const std::string& path, Command command);

// Exactly one of delta, mu; delta = cos(mu), with mu on the imaginary axis for |delta| > 1.
cplx mu_from_inputs(const std::optional<double>& delta, const std::optional<cplx>& mu);

}  // namespace workbench
