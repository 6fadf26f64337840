#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dpa/model.hpp"

namespace dpa::cli {

// Invalid flags or flag values; maps to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// --help was given; carries the help text. Maps to exit code 0.
struct HelpRequested {
    std::string text;
};

struct TimeGrid {
    double start = 0.0, stop = 0.0;
    int count = 1;

    std::vector<double> points() const;
};

enum class Format { Csv, Json };

struct RunConfig {
    std::string command;
    ModelParams model;
    InitialData init;
    TimeGrid times;
    bool time_given = false;
    Format format = Format::Csv;
    std::string out_path;                         // empty: standard output
    std::optional<int> nmax;                      // empty: adaptive
    double level = 2.0;                           // contour level of Q
    int points = 0;                               // grid or contour resolution, 0: command default
    std::optional<std::pair<double, double>> x_range, p_range;
    std::string input_path;                       // propagate: CSV of x, Re psi, Im psi
    bool quick = false;                           // verify
};

// Throws UsageError for malformed flags and DomainError for invalid physics.
RunConfig parse_args(int argc, const char* const* argv);

// Writes the command output; returns the process exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// parse_args + run with the exit-code contract: 0 ok, 1 runtime error, 2 usage, 3 domain.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Shortest round-trip decimal form.
std::string format_number(double v);

// key=value lines; '#' starts a comment. Throws UsageError on malformed lines.
std::vector<std::pair<std::string, std::string>> read_config_file(const std::string& path);

}  // namespace dpa::cli
