#pragma once

#include <span>
#include <utility>
#include <vector>

#include "bohrlab/functionals.hpp"
#include "bohrlab/harmonic_class.hpp"
#include "bohrlab/radius_solver.hpp"

namespace bohrlab {

/// Witness that the radius is best possible: the inequality holds strictly
/// below the root and fails strictly above it, both at the extremal map.
struct SharpnessReport {
    FunctionalKind kind;
    double m;
    double root;
    double delta;
    double lhs_below;   // theorem_lhs at root - delta
    double lhs_above;   // theorem_lhs at root + delta
    double distance;    // boundary_distance(m)
    bool holds_below;   // lhs_below < distance
    bool fails_above;   // lhs_above > distance
    bool pass() const noexcept { return holds_below && fails_above; }
};

/// Requires 0 < delta < min(root, 1 - root). A failed report signals a
/// functional or solver bug, not an input error, so it is returned rather
/// than thrown.
SharpnessReport sharpness_check(FunctionalKind kind, const ClassParameter& p,
                                double delta);

/// Scan of theorem_lhs - boundary_distance over (0, root].
struct ScanReport {
    FunctionalKind kind;
    double m;
    int samples;
    double max_excess;  // max of lhs - distance; <= slack at the root
    double worst_r;     // where the maximum was attained
    bool pass() const noexcept { return max_excess <= 1e-12; }
};

/// Evaluates at `samples` equispaced radii in (0, root]; samples >= 10.
ScanReport inequality_scan(FunctionalKind kind, const ClassParameter& p,
                           int samples);

/// Row-by-row comparison of solved roots against expected values.
struct TableRow {
    double m;
    double expected;
    double computed;
    double deviation;  // |computed - expected|
    bool pass;         // deviation <= tolerance
};

struct TableReport {
    FunctionalKind kind;
    double tolerance;
    std::vector<TableRow> rows;
    bool pass;  // every row passed
};

/// Solves each (m, expected) pair at tolerance 1e-12 and reports deviations.
TableReport table_check(FunctionalKind kind,
                        std::span<const std::pair<double, double>> expected,
                        double tolerance);

}  // namespace bohrlab
