#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "toric/lattice.hpp"

namespace toric {

inline constexpr const char* kReportSchema = "toricperf.report/1";

enum class Command {
    Validate,
    ClassGroup,
    Picard,
    Cocycle,
    Polytope,
    Cohomology,
    Demazure,
    BatyrevBorisov,
    PerfPic,
    PerfCohomology,
    PerfDemazure,
    PerfBB,
};

std::string command_name(Command c);
std::optional<Command> parse_command(const std::string& name);
const std::vector<std::string>& command_names();

struct JobSpec {
    Command command = Command::Validate;
    /// "named:NAME" or a path to a fan document.
    std::string fan_source;
    std::optional<IntVector> divisor;
    std::optional<unsigned long> p;
    std::size_t level = 0;
    std::optional<std::size_t> degree;
    std::size_t n_max = 3;
    bool graded = false;
    bool assume_trivialization = false;
    std::optional<unsigned long> modp_check;
};

enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitInputError = 2 };

struct Report {
    int exit_code = kExitOk;
    /// schema, command, inputs, ray_labels, results, status, diagnostics, timing.
    nlohmann::ordered_json document;
    std::vector<std::string> diagnostics;
};

/// "a0,a1,..." -> coefficients. Throws InputError.
IntVector parse_divisor(const std::string& text);

Report run(const JobSpec& job);

}  // namespace toric
