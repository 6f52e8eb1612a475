#pragma once

// Command implementations behind the `threefold` executable. Each command
// returns a Report; `run` does argument parsing, rendering and exit codes.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "threefold/errors.hpp"
#include "threefold/representations.hpp"

namespace threefold::cli {

class UsageError : public Error { public: using Error::Error; };

/// Malformed input file. line and column are 1-based, 0 when unknown.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0);
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_, column_;
};

struct Item {
    std::string label;
    bool pass = false;
    std::string summary;
    nlohmann::ordered_json values = nlohmann::ordered_json::object();
};

struct Report {
    std::string command;
    std::vector<Item> items;
    std::int64_t elapsed_ms = 0;

    bool pass() const;
};

struct Options {
    std::uint64_t seed = 0;
    std::optional<double> tol;  // overrides each command's default tolerance
};

/// A group table with its representations, as read from a fixture file.
/// Representations are not validated here.
struct GroupFile {
    FiniteGroup group;
    std::vector<FiniteGroupRep> reps;
};

/// Throws ParseError for malformed JSON or schema violations and
/// ValidationError for a table that is not a group.
GroupFile parse_group_file(std::string_view text);
GroupFile load_group_file(const std::string& path);

Report cmd_classify(const GroupFile& file, const Options& opts);
Report cmd_su2(std::optional<double> j, std::optional<double> max_j, int points, const Options& opts);
Report cmd_jordan(std::string_view algebra, int samples, const Options& opts);
Report cmd_tensor_table(const Options& opts);
Report cmd_functors(std::size_t dim, const Options& opts);
Report cmd_spectrum(std::string_view system, std::size_t dim, int count, const Options& opts);

/// {"command", "pass", "items", "elapsed_ms"}; doubles at full precision.
std::string render_json(const Report& report);
std::string render_text(const Report& report, bool show_timing);

/// Entry point: 0 pass, 1 failed check, 2 usage or input error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace threefold::cli
