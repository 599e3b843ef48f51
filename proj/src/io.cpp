#include "bohrlab/io.hpp"

#include <array>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include <json.hpp>

namespace bohrlab {

namespace {

constexpr std::string_view kCsvHeader = "functional,m,root,residual,bracket_width";

std::string shortest(double value) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc{}) throw std::runtime_error("double formatting failed");
    return std::string(buf, ptr);
}

double parse_double(std::string_view text, const char* what) {
    double value = 0.0;
    const auto [ptr, ec] =
        std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw std::runtime_error(std::string("bad numeric field for ") + what +
                                 ": '" + std::string(text) + "'");
    }
    return value;
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

}  // namespace

std::optional<OutputFormat> parse_format(std::string_view text) noexcept {
    if (text == "csv") return OutputFormat::Csv;
    if (text == "json") return OutputFormat::Json;
    return std::nullopt;
}

std::string_view format_name(OutputFormat f) noexcept {
    return f == OutputFormat::Csv ? "csv" : "json";
}

void write_csv(std::ostream& out, std::span<const OutputRecord> records) {
    out << kCsvHeader << '\n';
    for (const OutputRecord& rec : records) {
        out << rec.functional << ',' << shortest(rec.m) << ','
            << shortest(rec.root) << ',' << shortest(rec.residual) << ','
            << shortest(rec.bracket_width) << '\n';
    }
}

std::vector<OutputRecord> read_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || trim(line) != kCsvHeader) {
        throw std::runtime_error("csv: missing or malformed header line");
    }
    std::vector<OutputRecord> records;
    while (std::getline(in, line)) {
        const std::string_view row = trim(line);
        if (row.empty()) continue;
        std::array<std::string_view, 5> fields;
        std::size_t start = 0;
        for (int i = 0; i < 5; ++i) {
            const bool last = i == 4;
            const std::size_t comma = last ? row.size() : row.find(',', start);
            if (comma == std::string_view::npos) {
                throw std::runtime_error("csv: row with fewer than 5 fields: '" +
                                         std::string(row) + "'");
            }
            fields[static_cast<std::size_t>(i)] = row.substr(start, comma - start);
            start = comma + 1;
        }
        if (row.find(',', start) != std::string_view::npos) {
            throw std::runtime_error("csv: row with more than 5 fields");
        }
        records.push_back(OutputRecord{
            std::string(fields[0]), parse_double(fields[1], "m"),
            parse_double(fields[2], "root"), parse_double(fields[3], "residual"),
            parse_double(fields[4], "bracket_width")});
    }
    return records;
}

void write_json(std::ostream& out, std::span<const OutputRecord> records) {
    nlohmann::ordered_json array = nlohmann::ordered_json::array();
    for (const OutputRecord& rec : records) {
        nlohmann::ordered_json obj;
        obj["functional"] = rec.functional;
        obj["m"] = rec.m;
        obj["root"] = rec.root;
        obj["residual"] = rec.residual;
        obj["bracket_width"] = rec.bracket_width;
        array.push_back(std::move(obj));
    }
    out << array.dump(2) << '\n';
}

Config load_config(std::istream& in, std::vector<std::string>& warnings) {
    Config config;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view stripped = trim(line);
        if (stripped.empty() || stripped.front() == '#') continue;
        const std::size_t eq = stripped.find('=');
        if (eq == std::string_view::npos) {
            throw std::runtime_error("config line " + std::to_string(line_no) +
                                     ": expected 'key = value'");
        }
        const std::string_view key = trim(stripped.substr(0, eq));
        const std::string_view value = trim(stripped.substr(eq + 1));
        if (key == "tolerance") {
            config.tolerance = parse_double(value, "tolerance");
        } else if (key == "steps") {
            config.steps = static_cast<int>(parse_double(value, "steps"));
        } else if (key == "format") {
            const auto format = parse_format(value);
            if (!format) {
                throw std::runtime_error("config: format must be csv or json, got '" +
                                         std::string(value) + "'");
            }
            config.format = *format;
        } else {
            warnings.push_back("unknown config key '" + std::string(key) +
                               "' ignored");
        }
    }
    return config;
}

}  // namespace bohrlab
