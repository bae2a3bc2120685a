#pragma once

#include <iosfwd>
#include <string>

#include "workbench/config.hpp"

namespace workbench {

enum ExitCode : int { exit_ok = 0, exit_check_failed = 1, exit_usage = 2 };

struct Outcome {
    int code = exit_ok;
    std::string report;  // serialized in the requested format
};

Outcome run_verify(const VerifyConfig& c, std::uint64_t seed, Format fmt);
Outcome run_spectrum(const SpectrumConfig& c, Format fmt);
Outcome run_bethe(const BetheConfig& c, std::uint64_t seed, int threads, Format fmt);
Outcome run_phase_scan(const PhaseScanConfig& c, int threads, Format fmt);
Outcome run_casimir(const CasimirConfig& c, Format fmt);

Outcome run(const RunOptions& opt, const RunConfig& config);

// Full process behaviour: parse, run, write; returns the exit code.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace workbench
