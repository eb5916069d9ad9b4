#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace gsf::cli {

inline constexpr const char* kToolName = "gsfid";
inline constexpr const char* kToolVersion = "0.1.0";

enum ExitCode : int { kExitOk = 0, kExitConfig = 2, kExitNumeric = 3, kExitIO = 4 };

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IntRange {
    std::int64_t lo = 0, hi = 0, step = 1;  // inclusive
    std::vector<std::int64_t> values() const;
};

struct RealRange {
    double lo = 0.0, hi = 0.0;
    std::int64_t count = 1;  // points, endpoints included
    std::vector<double> values() const;
};

IntRange parse_int_range(const std::string& text);   // "lo:hi:step"
RealRange parse_real_range(const std::string& text); // "lo:hi:count"

/// Fully resolved run description. Every field has a value after merging.
struct RunConfig {
    std::string command;  // fidelity, sweep, scaling, crossover, quench, verify
    std::string path = "A";
    double gamma = 1.0;
    double g = 0.0;
    double alpha = 1.0;
    double delta = 0.0;
    double c = 0.0;
    std::optional<std::int64_t> N;
    std::optional<std::string> N_range;
    std::optional<std::string> c_range;
    std::string function = "A";                 // scaling
    std::string quantity = "gamma_three_halves"; // crossover
    int per_decade = 20;
    std::string format = "csv";
    std::string output;  // empty: stdout
    unsigned parallelism = 1;
};

nlohmann::json to_json(const RunConfig& cfg);

/// Missing keys keep their defaults; unknown keys are a ConfigError. A full
/// output document {config, manifest, rows} is accepted and its config used.
RunConfig config_from_json(const nlohmann::json& j);

/// Checks every parameter combination the run will touch. ConfigError.
void validate(const RunConfig& cfg);

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<nlohmann::json>> rows;
};

/// Runs the computation. gsf errors propagate.
Table compute(const RunConfig& cfg);

std::string format_csv(const Table& t, const nlohmann::json& manifest);
nlohmann::json format_json(const Table& t, const nlohmann::json& manifest);

/// validate, compute, write. Diagnostics go to err.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Command-line entry point.
int main_entry(int argc, char** argv);

}  // namespace gsf::cli
