#include "bohrlab/series_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace bohrlab {

namespace {

constexpr double kPiSquaredOverSix =
    std::numbers::pi * std::numbers::pi / 6.0;

// Terms below this no longer move a double result of order one.
constexpr double kTermCutoff = 1e-17;

[[noreturn]] void domain_fail(const char* fn, double x) {
    throw std::domain_error(std::string(fn) + ": argument " +
                            std::to_string(x) + " outside the domain");
}

// Power series sum_{n>=1} x^n/n^2 for x in [0, 0.5]; ratio <= 1/2 keeps the
// term count under ~60.
double dilog_series(double x) {
    double term = x;
    double sum = x;
    for (int n = 2; std::abs(term) > kTermCutoff && n < 1000; ++n) {
        term *= x;
        sum += term / (static_cast<double>(n) * n);
    }
    return sum;
}

}  // namespace

double dilog(double x) {
    if (x < 0.0 || x > 1.0) domain_fail("dilog", x);
    if (x == 0.0) return 0.0;
    if (x == 1.0) return kPiSquaredOverSix;
    if (x <= 0.5) return dilog_series(x);
    // Reflection: Li2(x) + Li2(1-x) = pi^2/6 - log(x) log(1-x).
    return kPiSquaredOverSix - std::log(x) * std::log1p(-x) -
           dilog_series(1.0 - x);
}

double neg_log_one_minus(double r) {
    if (r < 0.0 || r >= 1.0) domain_fail("neg_log_one_minus", r);
    return -std::log1p(-r);
}

double sum_basic(double r) {
    if (r < 0.0 || r > 1.0) domain_fail("sum_basic", r);
    if (r == 1.0) return 1.0;  // telescoping limit; (1-r)log(1-r) -> 0
    // Cancellation below one ulp of r can land a hair negative for tiny r.
    return std::max(0.0, r + (1.0 - r) * std::log1p(-r));
}

double sum_area(double r) {
    if (r < 0.0 || r >= 1.0) domain_fail("sum_area", r);
    const double x = r * r;
    return std::max(0.0, x * dilog(x) - x - (1.0 - x) * std::log1p(-x));
}

double sum_refined(double r) {
    if (r < 0.0 || r >= 1.0) domain_fail("sum_refined", r);
    const double x = r * r;
    return std::max(0.0, (1.0 + x) * dilog(x) - 3.0 * x -
                             2.0 * (1.0 - x) * std::log1p(-x));
}

double alternating_constant() {
    return 1.0 - 2.0 * std::numbers::ln2;
}

double closed_form(SumKind kind, double r) {
    switch (kind) {
        case SumKind::Basic: return sum_basic(r);
        case SumKind::Area: return sum_area(r);
        case SumKind::Refined: return sum_refined(r);
        case SumKind::Dilog: return dilog(r);
        case SumKind::NegLogOneMinus: return neg_log_one_minus(r);
    }
    throw std::logic_error("closed_form: bad SumKind");
}

namespace {

int first_index(SumKind kind) {
    return (kind == SumKind::Dilog || kind == SumKind::NegLogOneMinus) ? 1 : 2;
}

double term(SumKind kind, double r, int n) {
    const double nn = static_cast<double>(n);
    switch (kind) {
        case SumKind::Basic:
            return std::pow(r, n) / (nn * (nn - 1.0));
        case SumKind::Area:
            return std::pow(r, 2 * n) / (nn * (nn - 1.0) * (nn - 1.0));
        case SumKind::Refined:
            return std::pow(r, 2 * n) /
                   (nn * nn * (nn - 1.0) * (nn - 1.0));
        case SumKind::Dilog:
            return std::pow(r, n) / (nn * nn);
        case SumKind::NegLogOneMinus:
            return std::pow(r, n) / nn;
    }
    throw std::logic_error("term: bad SumKind");
}

void check_open_unit(SumKind kind, double r, const char* fn) {
    const bool closed_at_one = kind == SumKind::Basic && r == 1.0;
    if (r < 0.0 || r > 1.0 || (r == 1.0 && !closed_at_one)) domain_fail(fn, r);
}

}  // namespace

double truncated_sum(SumKind kind, double r, const SeriesTruncation& trunc) {
    check_open_unit(kind, r, "truncated_sum");
    if (trunc.order < 2) {
        throw std::domain_error("truncated_sum: order must be >= 2");
    }
    double sum = 0.0;
    for (int n = first_index(kind); n <= trunc.order; ++n) {
        sum += term(kind, r, n);
    }
    return sum;
}

double tail_bound(SumKind kind, double r, int order) {
    if (r < 0.0 || r >= 1.0) domain_fail("tail_bound", r);
    if (order < 2) throw std::domain_error("tail_bound: order must be >= 2");
    // Every term ratio is bounded by r (or r^2 for the squared-argument
    // kinds), so the tail is at most the first discarded term over 1-ratio.
    const double ratio =
        (kind == SumKind::Area || kind == SumKind::Refined) ? r * r : r;
    return term(kind, r, order + 1) / (1.0 - ratio);
}

SeriesTruncation make_truncation(SumKind kind, double r, int order) {
    return SeriesTruncation{order, tail_bound(kind, r, order)};
}

}  // namespace bohrlab
