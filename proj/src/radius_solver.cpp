#include "bohrlab/radius_solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace bohrlab {

namespace {

constexpr double kBracketLo = 1e-15;
constexpr double kBracketHi = 1.0 - 1e-9;
constexpr double kCoarseWidth = 1e-3;   // switch from bisection to secant
constexpr double kPolishWidth = 1e-13;  // residual lands well under 1e-10
constexpr int kIterationCap = 200;
constexpr int kWitnessSamples = 32;

std::string describe(FunctionalKind kind, double m) {
    std::ostringstream msg;
    msg.precision(17);
    msg << tag(kind) << " at m = " << m;
    return msg.str();
}

bool monotone_witness_holds(FunctionalKind kind, const ClassParameter& p) {
    for (int i = 1; i <= kWitnessSamples; ++i) {
        const double r = static_cast<double>(i) / (kWitnessSamples + 1);
        if (!slope_positive(kind, p, r).positive) return false;
    }
    return true;
}

}  // namespace

RadiusResult solve(FunctionalKind kind, const ClassParameter& p, double tol) {
    if (!(tol > 0.0) || tol > kMaxTolerance) {
        throw std::domain_error("solve: tol must lie in (0, 1e-6]");
    }

    double lo = kBracketLo;
    double hi = kBracketHi;
    double f_lo = eval(kind, p, lo);
    double f_hi = eval(kind, p, hi);
    if (!(f_hi > 0.0)) {
        throw SolveError(SolveError::Code::kNoSignChange,
                         "solve(" + describe(kind, p.m()) +
                             "): functional is not positive near r = 1");
    }
    if (!(f_lo < 0.0)) {
        throw SolveError(SolveError::Code::kNoSignChange,
                         "solve(" + describe(kind, p.m()) +
                             "): functional is not negative near r = 0; m is "
                             "too close to the admissible boundary");
    }

    int iterations = 0;
    const auto spend_iteration = [&] {
        if (++iterations > kIterationCap) {
            throw SolveError(SolveError::Code::kNoConvergence,
                             "solve(" + describe(kind, p.m()) + "): no "
                             "convergence after 200 iterations");
        }
    };

    while (hi - lo > kCoarseWidth) {
        spend_iteration();
        const double mid = 0.5 * (lo + hi);
        const double f_mid = eval(kind, p, mid);
        if (f_mid < 0.0) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
            f_hi = f_mid;
        }
    }

    const double width_target = std::min(tol, kPolishWidth);
    bool exact_hit = false;
    double root = 0.0;
    while (hi - lo > width_target) {
        spend_iteration();
        const double width = hi - lo;
        // Secant step, clipped away from the endpoints so the bracket keeps
        // shrinking; fall back to the midpoint when the step leaves (lo, hi).
        double x = hi - f_hi * width / (f_hi - f_lo);
        if (!(x > lo + 0.01 * width && x < hi - 0.01 * width)) {
            x = 0.5 * (lo + hi);
        }
        if (x <= lo || x >= hi) break;  // bracket cannot shrink further
        const double f_x = eval(kind, p, x);
        if (f_x == 0.0) {
            // Exact zero at double precision. Re-bracket tightly around it;
            // half a target width clears the region where the evaluation
            // rounds to zero, so the endpoint signs are strict again.
            const double h = 0.5 * width_target;
            const double lo2 = std::max(lo, x - h);
            const double hi2 = std::min(hi, x + h);
            if (eval(kind, p, lo2) < 0.0 && eval(kind, p, hi2) > 0.0) {
                lo = lo2;
                hi = hi2;
                root = x;
                exact_hit = true;
                break;
            }
            throw SolveError(SolveError::Code::kNoConvergence,
                             "solve(" + describe(kind, p.m()) +
                                 "): could not re-bracket an exact zero");
        }
        if (f_x < 0.0) {
            lo = x;
            f_lo = f_x;
        } else {
            hi = x;
            f_hi = f_x;
        }
    }

    if (!exact_hit) {
        root = 0.5 * (lo + hi);
        if (root <= lo || root >= hi) {
            // Endpoints are adjacent doubles; put the root on the interior side.
            root = std::nextafter(hi, lo);
            if (root <= lo) {
                throw SolveError(SolveError::Code::kNoConvergence,
                                 "solve(" + describe(kind, p.m()) +
                                     "): bracket degenerated");
            }
        }
    }
    const double residual = eval(kind, p, root);
    if (!(std::abs(residual) <= 1e-10)) {
        throw SolveError(SolveError::Code::kNoConvergence,
                         "solve(" + describe(kind, p.m()) +
                             "): residual failed to polish below 1e-10");
    }

    return RadiusResult{kind,     p.m(),    root,       lo,
                        hi,       residual, iterations, monotone_witness_holds(kind, p)};
}

std::vector<RadiusResult> sweep_results(FunctionalKind kind, double m_lo,
                                        double m_hi, int steps, double tol) {
    if (!(m_lo > 0.0) || !(m_lo < m_hi) || !(m_hi < admissible_upper_bound())) {
        throw std::domain_error(
            "sweep: need 0 < m_lo < m_hi < admissible_upper_bound()");
    }
    if (steps < 2) throw std::domain_error("sweep: steps must be >= 2");

    std::vector<RadiusResult> rows;
    rows.reserve(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) {
        const double m = (i == steps - 1)
                             ? m_hi
                             : m_lo + (m_hi - m_lo) * i / (steps - 1);
        try {
            rows.push_back(solve(kind, ClassParameter{m}, tol));
        } catch (const SolveError& e) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "sweep row at m = " << m << ": " << e.what();
            throw SolveError(e.code(), msg.str());
        }
    }
    return rows;
}

std::vector<SweepRow> sweep(FunctionalKind kind, double m_lo, double m_hi,
                            int steps, double tol) {
    const std::vector<RadiusResult> results =
        sweep_results(kind, m_lo, m_hi, steps, tol);
    std::vector<SweepRow> rows;
    rows.reserve(results.size());
    for (const RadiusResult& result : results) {
        rows.push_back(SweepRow{result.m, result.root, result.residual});
    }
    return rows;
}

}  // namespace bohrlab
