#pragma once

namespace bohrlab {

/// The coefficient series that show up in the radius equations.
///
///   Basic           sum_{n>=2} r^n / (n(n-1))
///   Area            sum_{n>=2} r^{2n} / (n(n-1)^2)
///   Refined         sum_{n>=2} r^{2n} / (n^2(n-1)^2)
///   Dilog           sum_{n>=1} x^n / n^2           (= Li_2(x))
///   NegLogOneMinus  sum_{n>=1} r^n / n             (= -log(1-r))
enum class SumKind { Basic, Area, Refined, Dilog, NegLogOneMinus };

/// Truncation certificate: `order` is the highest retained series index,
/// `tail_bound` a rigorous upper bound on the discarded tail at the
/// evaluation point, so |closed_form - truncated_sum| <= tail_bound.
struct SeriesTruncation {
    int order;          // >= 2
    double tail_bound;  // >= 0
};

/// Li_2(x) on [0, 1]. Absolute error <= 1e-13; dilog(1) == pi^2/6.
/// Throws std::domain_error outside [0, 1].
double dilog(double x);

/// -log(1-r) on [0, 1). Throws std::domain_error at r >= 1.
double neg_log_one_minus(double r);

/// sum_{n>=2} r^n/(n(n-1)) = r + (1-r)log(1-r) on [0, 1].
/// The (1-r)log(1-r) factor is guarded so that sum_basic(1) == 1 exactly.
double sum_basic(double r);

/// sum_{n>=2} r^{2n}/(n(n-1)^2) = r^2 Li_2(r^2) - r^2 - (1-r^2)log(1-r^2)
/// on [0, 1). Tends to pi^2/6 - 1 as r -> 1.
double sum_area(double r);

/// sum_{n>=2} r^{2n}/(n^2(n-1)^2)
///   = (1+r^2) Li_2(r^2) - 3r^2 - 2(1-r^2)log(1-r^2)  on [0, 1).
double sum_refined(double r);

/// sum_{n>=2} (-1)^{n-1}/(n(n-1)) = 1 - 2 log 2.
double alternating_constant();

/// Closed-form value of `kind` at r (dispatch over the functions above).
double closed_form(SumKind kind, double r);

/// Partial sum of `kind` over series indices n = first_index .. trunc.order.
/// Deterministic brute-force evaluation; intended for verification.
double truncated_sum(SumKind kind, double r, const SeriesTruncation& trunc);

/// Geometric-majorant bound on the tail sum_{n > order}. Requires r in [0, 1)
/// and order >= 2; monotone decreasing in order. Crude but rigorous: the
/// first discarded term divided by (1 - common ratio bound).
double tail_bound(SumKind kind, double r, int order);

/// Convenience: pair `order` with tail_bound(kind, r, order).
SeriesTruncation make_truncation(SumKind kind, double r, int order);

}  // namespace bohrlab
