#include "bohrlab/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bohrlab {

namespace {

constexpr double kSolveTolerance = 1e-12;

}  // namespace

SharpnessReport sharpness_check(FunctionalKind kind, const ClassParameter& p,
                                double delta) {
    const RadiusResult solved = solve(kind, p, kSolveTolerance);
    const double root = solved.root;
    if (!(delta > 0.0) || delta >= std::min(root, 1.0 - root)) {
        throw std::domain_error(
            "sharpness_check: delta must lie in (0, min(root, 1 - root))");
    }
    const double distance = boundary_distance(p);
    const double lhs_below = theorem_lhs(kind, p, root - delta);
    const double lhs_above = theorem_lhs(kind, p, root + delta);
    return SharpnessReport{kind,      p.m(),     root,
                           delta,     lhs_below, lhs_above,
                           distance,  lhs_below < distance,
                           lhs_above > distance};
}

ScanReport inequality_scan(FunctionalKind kind, const ClassParameter& p,
                           int samples) {
    if (samples < 10) {
        throw std::domain_error("inequality_scan: samples must be >= 10");
    }
    const RadiusResult solved = solve(kind, p, kSolveTolerance);
    const double distance = boundary_distance(p);
    double max_excess = -std::numeric_limits<double>::infinity();
    double worst_r = 0.0;
    for (int i = 1; i <= samples; ++i) {
        const double r = solved.root * i / samples;
        const double excess = theorem_lhs(kind, p, r) - distance;
        if (excess > max_excess) {
            max_excess = excess;
            worst_r = r;
        }
    }
    return ScanReport{kind, p.m(), samples, max_excess, worst_r};
}

TableReport table_check(FunctionalKind kind,
                        std::span<const std::pair<double, double>> expected,
                        double tolerance) {
    TableReport report{kind, tolerance, {}, true};
    report.rows.reserve(expected.size());
    for (const auto& [m, value] : expected) {
        const RadiusResult solved =
            solve(kind, ClassParameter{m}, kSolveTolerance);
        const double deviation = std::abs(solved.root - value);
        const bool pass = deviation <= tolerance;
        report.rows.push_back(TableRow{m, value, solved.root, deviation, pass});
        report.pass = report.pass && pass;
    }
    return report;
}

}  // namespace bohrlab
