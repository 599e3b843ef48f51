#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "bohrlab/functionals.hpp"
#include "bohrlab/harmonic_class.hpp"

namespace bohrlab {

/// A solved radius with its certification data.
///
/// Invariants on a returned value:
///   bracket_lo < root < bracket_hi, bracket_hi - bracket_lo <= tol,
///   eval(kind, m, bracket_lo) < 0 < eval(kind, m, bracket_hi),
///   |residual| <= 1e-10,
///   monotone_witness == true iff the slope was positive at every
///   uniqueness-check sample.
struct RadiusResult {
    FunctionalKind kind;
    double m;
    double root;
    double bracket_lo;
    double bracket_hi;
    double residual;
    int iterations;
    bool monotone_witness;
};

/// One record of a parameter sweep.
struct SweepRow {
    double m;
    double root;
    double residual;
};

class SolveError : public std::runtime_error {
public:
    enum class Code { kNoSignChange, kNoConvergence };

    SolveError(Code code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    Code code() const noexcept { return code_; }

private:
    Code code_;
};

/// Maximum accepted solver tolerance (bracket width). Tolerances must be in
/// (0, kMaxTolerance]; the default used by the CLI is 1e-12.
inline constexpr double kMaxTolerance = 1e-6;

/// Find the unique root of eval(kind, p, .) in (0, 1).
///
/// Bisection narrows the initial bracket [1e-15, 1 - 1e-9] to width 1e-3,
/// then a secant step safeguarded by bisection finishes the job. The final
/// residual is polished below 1e-10 regardless of tol. Deterministic.
///
/// Throws SolveError(kNoSignChange) when the functional does not change sign
/// over the initial bracket and SolveError(kNoConvergence) after 200
/// iterations; std::domain_error for tol outside (0, kMaxTolerance].
RadiusResult solve(FunctionalKind kind, const ClassParameter& p, double tol);

/// Solve at `steps` uniformly spaced M in [m_lo, m_hi], endpoints included,
/// rows in ascending M. Requires 0 < m_lo < m_hi < admissible_upper_bound()
/// and steps >= 2. Solve errors are rethrown annotated with the offending M.
std::vector<SweepRow> sweep(FunctionalKind kind, double m_lo, double m_hi,
                            int steps, double tol);

/// Same grid as sweep() but keeps the full per-row solver results.
std::vector<RadiusResult> sweep_results(FunctionalKind kind, double m_lo,
                                        double m_hi, int steps, double tol);

}  // namespace bohrlab
