#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bohrlab {

/// One emitted record. Field names and order are fixed: CSV columns and JSON
/// keys are exactly functional, m, root, residual, bracket_width.
struct OutputRecord {
    std::string functional;  // "h1".."h4"
    double m;
    double root;
    double residual;
    double bracket_width;

    bool operator==(const OutputRecord&) const = default;
};

enum class OutputFormat { Csv, Json };

std::optional<OutputFormat> parse_format(std::string_view text) noexcept;
std::string_view format_name(OutputFormat f) noexcept;

/// CSV with the single header line `functional,m,root,residual,bracket_width`.
/// Numbers use the shortest round-trip decimal form, '.' separator, no
/// locale dependence; parse-and-re-emit is byte-identical.
void write_csv(std::ostream& out, std::span<const OutputRecord> records);

/// Parses what write_csv emits. Throws std::runtime_error on a malformed
/// header or row.
std::vector<OutputRecord> read_csv(std::istream& in);

/// JSON array of objects with exactly the OutputRecord fields, full
/// precision.
void write_json(std::ostream& out, std::span<const OutputRecord> records);

/// Runtime defaults, adjustable through a `key = value` config file.
/// Recognized keys: tolerance, steps, format. Blank lines and lines starting
/// with '#' are ignored.
struct Config {
    double tolerance = 1e-12;          // default solver tolerance
    int steps = 100;                   // default sweep step count
    OutputFormat format = OutputFormat::Json;
};

/// Parses a config stream. Unknown keys produce a warning string, not an
/// error; malformed values throw std::runtime_error naming the key.
Config load_config(std::istream& in, std::vector<std::string>& warnings);

}  // namespace bohrlab
