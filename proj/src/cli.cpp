#include "bohrlab/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "bohrlab/io.hpp"
#include "bohrlab/reference_tables.hpp"
#include "bohrlab/verifier.hpp"

namespace bohrlab::cli {

namespace {

FunctionalKind require_tag(const std::string& text) {
    const auto kind = parse_tag(text);
    if (!kind) {
        throw std::domain_error("unknown functional tag '" + text +
                                "' (expected h1, h2, h3 or h4)");
    }
    return *kind;
}

OutputRecord to_record(const RadiusResult& result) {
    return OutputRecord{std::string(tag(result.kind)), result.m, result.root,
                        result.residual, result.bracket_hi - result.bracket_lo};
}

void emit(std::ostream& out, OutputFormat format,
          std::span<const OutputRecord> records) {
    if (format == OutputFormat::Csv) {
        write_csv(out, records);
    } else {
        write_json(out, records);
    }
}

/// Writes records to `path`, leaving no file behind on failure.
void emit_file(const std::string& path, OutputFormat format,
               std::span<const OutputRecord> records) {
    std::ostringstream buffer;
    emit(buffer, format, records);
    std::ofstream file(path, std::ios::trunc);
    if (!file) throw std::runtime_error("cannot open output file '" + path + "'");
    file << buffer.str();
    file.flush();
    if (!file) {
        file.close();
        std::remove(path.c_str());
        throw std::runtime_error("failed writing output file '" + path + "'");
    }
}

std::string sig6(double value) {
    std::ostringstream s;
    s << std::setprecision(6) << value;
    return s.str();
}

std::string sci(double value) {
    std::ostringstream s;
    s << std::scientific << std::setprecision(2) << value;
    return s.str();
}

Config resolve_config(const std::vector<std::string>& args, std::ostream& err) {
    std::string path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            path = args[i + 1];
        } else if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
        }
    }
    if (path.empty()) {
        if (const char* env = std::getenv("BOHR_LAB_CONFIG")) path = env;
    }
    if (path.empty()) return Config{};

    std::ifstream file(path);
    if (!file) {
        throw std::domain_error("cannot open config file '" + path + "'");
    }
    std::vector<std::string> warnings;
    Config config = load_config(file, warnings);
    for (const std::string& warning : warnings) {
        err << "warning: " << warning << '\n';
    }
    return config;
}

int run_table(std::ostream& out, const std::vector<FunctionalKind>& kinds) {
    int failures = 0;
    int rows = 0;
    out << "functional       m    computed   reference   deviation  status\n";
    for (FunctionalKind kind : kinds) {
        const auto entries = reference_radii(kind);
        std::vector<std::pair<double, double>> expected;
        expected.reserve(entries.size());
        for (const ReferenceEntry& entry : entries) {
            expected.emplace_back(entry.m, entry.root);
        }
        const TableReport report =
            table_check(kind, expected, kReferenceTolerance);
        for (std::size_t i = 0; i < report.rows.size(); ++i) {
            const TableRow& row = report.rows[i];
            ++rows;
            if (!row.pass) ++failures;
            out << std::left << std::setw(10) << tag(kind) << std::right
                << std::setw(6) << sig6(row.m) << "  " << std::setw(10)
                << sig6(row.computed) << "  " << std::setw(10)
                << sig6(row.expected) << "  " << std::setw(10)
                << sci(row.deviation) << "  " << (row.pass ? "ok" : "FAIL");
            if (entries[i].note != nullptr) out << "  (" << entries[i].note << ")";
            out << '\n';
        }
    }
    out << rows << " rows, " << (rows - failures) << " within "
        << kReferenceTolerance << ", " << failures << " beyond\n";
    return failures == 0 ? kExitOk : kExitComputeFailure;
}

int run_verify(std::ostream& out, const std::vector<FunctionalKind>& kinds,
               const std::vector<double>& ms, int samples, double delta) {
    int failures = 0;
    for (FunctionalKind kind : kinds) {
        for (double m : ms) {
            const ClassParameter p = validate_parameter(m);
            const SharpnessReport sharp = sharpness_check(kind, p, delta);
            if (!sharp.pass()) ++failures;
            out << tag(kind) << " m=" << sig6(m)
                << " sharpness(delta=" << delta
                << "): lhs(root-d)=" << sig6(sharp.lhs_below)
                << (sharp.holds_below ? " < " : " !< ") << "d=" << sig6(sharp.distance)
                << (sharp.fails_above ? " < " : " !< ")
                << "lhs(root+d)=" << sig6(sharp.lhs_above) << "  "
                << (sharp.pass() ? "ok" : "FAIL") << '\n';
            const ScanReport scan = inequality_scan(kind, p, samples);
            if (!scan.pass()) ++failures;
            out << tag(kind) << " m=" << sig6(m) << " scan(samples=" << samples
                << "): max excess " << sci(scan.max_excess) << " at r="
                << sig6(scan.worst_r) << "  " << (scan.pass() ? "ok" : "FAIL")
                << '\n';
        }
    }
    out << (failures == 0 ? "all checks passed" : "checks FAILED") << '\n';
    return failures == 0 ? kExitOk : kExitComputeFailure;
}

std::vector<double> reference_grid() {
    std::vector<double> ms;
    for (const ReferenceEntry& entry :
         reference_radii(FunctionalKind::H1_BohrRogosinski)) {
        ms.push_back(entry.m);
    }
    return ms;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"Sharp Bohr-type radii for the fully starlike harmonic class "
                 "P0_H(M)"};
    app.require_subcommand(1);

    std::string config_path;
    app.add_option("--config", config_path,
                   "Config file (key = value); BOHR_LAB_CONFIG is the "
                   "fallback, the flag wins");

    Config config;
    try {
        config = resolve_config(args, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    // radius
    auto* radius = app.add_subcommand("radius", "Solve one Bohr radius");
    std::string radius_tag;
    double radius_m = 0.0;
    double radius_tol = config.tolerance;
    std::string radius_format(format_name(config.format));
    radius->add_option("--functional", radius_tag, "h1, h2, h3 or h4")
        ->required();
    radius->add_option("--m", radius_m, "class parameter M")->required();
    radius->add_option("--tolerance", radius_tol, "bracket width target");
    radius->add_option("--format", radius_format, "csv or json");

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "Solve over a range of M");
    std::string sweep_tag, sweep_out;
    double sweep_lo = 0.0, sweep_hi = 0.0;
    int sweep_steps = config.steps;
    double sweep_tol = config.tolerance;
    std::string sweep_format(format_name(config.format));
    sweep_cmd->add_option("--functional", sweep_tag, "h1, h2, h3 or h4")
        ->required();
    sweep_cmd->add_option("--m-start", sweep_lo, "first M")->required();
    sweep_cmd->add_option("--m-end", sweep_hi, "last M")->required();
    sweep_cmd->add_option("--steps", sweep_steps, "row count (>= 2)");
    sweep_cmd->add_option("--out", sweep_out, "output file")->required();
    sweep_cmd->add_option("--tolerance", sweep_tol, "bracket width target");
    sweep_cmd->add_option("--format", sweep_format, "csv or json");

    // table
    auto* table_cmd =
        app.add_subcommand("table", "Compare solved radii with the published "
                                     "reference tables");
    std::string table_tag;
    table_cmd->add_option("--functional", table_tag,
                          "restrict to one functional");

    // verify
    auto* verify_cmd = app.add_subcommand(
        "verify", "Run sharpness and inequality-scan checks");
    std::string verify_tag;
    double verify_m = 0.0;
    bool verify_m_set = false;
    int verify_samples = 1000;
    double verify_delta = 1e-4;
    verify_cmd->add_option("--functional", verify_tag,
                           "restrict to one functional");
    auto* verify_m_opt =
        verify_cmd->add_option("--m", verify_m, "restrict to one M");
    verify_cmd->add_option("--samples", verify_samples, "scan samples (>= 10)");
    verify_cmd->add_option("--delta", verify_delta, "sharpness offset");

    // figure-data
    auto* figure_cmd = app.add_subcommand(
        "figure-data", "Emit a dense radius-vs-M curve as CSV");
    int figure_id = 0;
    int figure_points = 256;
    std::string figure_out;
    figure_cmd->add_option("--figure", figure_id, "curve id 1..4 (h1..h4)")
        ->required();
    figure_cmd->add_option("--points", figure_points, "samples along M");
    figure_cmd->add_option("--out", figure_out, "output file")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    verify_m_set = verify_m_opt->count() > 0;

    try {
        if (radius->parsed()) {
            const FunctionalKind kind = require_tag(radius_tag);
            const auto format = parse_format(radius_format);
            if (!format) {
                throw std::domain_error("format must be csv or json");
            }
            const RadiusResult result =
                solve(kind, validate_parameter(radius_m), radius_tol);
            const OutputRecord record = to_record(result);
            emit(out, *format, std::span{&record, 1});
            return kExitOk;
        }

        if (sweep_cmd->parsed()) {
            const FunctionalKind kind = require_tag(sweep_tag);
            const auto format = parse_format(sweep_format);
            if (!format) {
                throw std::domain_error("format must be csv or json");
            }
            const std::vector<RadiusResult> results =
                sweep_results(kind, sweep_lo, sweep_hi, sweep_steps, sweep_tol);
            std::vector<OutputRecord> records;
            records.reserve(results.size());
            for (const RadiusResult& result : results) {
                records.push_back(to_record(result));
            }
            emit_file(sweep_out, *format, records);
            return kExitOk;
        }

        if (table_cmd->parsed()) {
            std::vector<FunctionalKind> kinds;
            if (table_tag.empty()) {
                kinds.assign(kAllFunctionals.begin(), kAllFunctionals.end());
            } else {
                kinds.push_back(require_tag(table_tag));
            }
            return run_table(out, kinds);
        }

        if (verify_cmd->parsed()) {
            std::vector<FunctionalKind> kinds;
            if (verify_tag.empty()) {
                kinds.assign(kAllFunctionals.begin(), kAllFunctionals.end());
            } else {
                kinds.push_back(require_tag(verify_tag));
            }
            const std::vector<double> ms =
                verify_m_set ? std::vector<double>{verify_m} : reference_grid();
            if (verify_samples < 10) {
                throw std::domain_error("samples must be >= 10");
            }
            if (!(verify_delta > 0.0)) {
                throw std::domain_error("delta must be positive");
            }
            return run_verify(out, kinds, ms, verify_samples, verify_delta);
        }

        if (figure_cmd->parsed()) {
            if (figure_id < 1 || figure_id > 4) {
                throw std::domain_error("figure id must be 1, 2, 3 or 4");
            }
            const FunctionalKind kind =
                kAllFunctionals[static_cast<std::size_t>(figure_id - 1)];
            const std::vector<RadiusResult> results = sweep_results(
                kind, 0.02, 1.29, figure_points, config.tolerance);
            std::vector<OutputRecord> records;
            records.reserve(results.size());
            for (const RadiusResult& result : results) {
                records.push_back(to_record(result));
            }
            emit_file(figure_out, OutputFormat::Csv, records);
            return kExitOk;
        }
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitComputeFailure;
    }

    err << "error: no subcommand\n";
    return kExitUsage;
}

}  // namespace bohrlab::cli
