#ifndef ORTHOQ_CLI_HPP
#define ORTHOQ_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "orthoq/json_io.hpp"

namespace orthoq {

enum class Command { Construct, Verify, Coeffs, Classify };
enum class Format { Json, Csv };

/// Stable process exit codes.
enum ExitCode : int {
    kExitOk = 0,
    kExitIdentityFailure = 1,
    kExitInputError = 2,
    kExitDegenerate = 3,
    kExitClassificationScope = 4,
};

struct JobConfig {
    Command command = Command::Construct;
    std::optional<std::string> family;
    std::optional<Json> lattice;
    std::vector<Rational> params;
    std::optional<long> n;
    std::optional<long> n_max;
    /// first, second or ttrr; coeffs only.
    std::string relation = "first";
    /// Classify input when no family is given.
    std::optional<Polynomial> phi, psi;
    /// Added to every lambda_n in the verify suite; a perturbation control.
    long lambda_shift = 0;
    long cap = 12;
    std::string output;
    Format format = Format::Json;
};

struct CommandResult {
    int exit_code = kExitOk;
    std::string text;
    /// One line per failed check, for stderr.
    std::vector<std::string> failures;
};

Command parse_command(std::string_view name);
Format parse_format(std::string_view name);

/// The family named in the config on its lattice (default p = 1/2).
FamilySpec family_from_config(const JobConfig& cfg);

/// Runs one job.  Library exceptions propagate; run_cli maps them to exit codes.
CommandResult execute(const JobConfig& cfg);

/// Full front end: flags, optional --config file, error mapping, output file.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace orthoq

#endif  // ORTHOQ_CLI_HPP
