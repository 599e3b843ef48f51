#include "bohrlab/functionals.hpp"

#include <cmath>
#include <stdexcept>

namespace bohrlab {

std::string_view tag(FunctionalKind kind) noexcept {
    switch (kind) {
        case FunctionalKind::H1_BohrRogosinski: return "h1";
        case FunctionalKind::H2_Area: return "h2";
        case FunctionalKind::H3_Jacobian: return "h3";
        case FunctionalKind::H4_Refined: return "h4";
    }
    return "??";
}

std::optional<FunctionalKind> parse_tag(std::string_view text) noexcept {
    for (FunctionalKind kind : kAllFunctionals) {
        if (text == tag(kind)) return kind;
    }
    return std::nullopt;
}

namespace {

void check_radius(double r) {
    if (r < 0.0 || r >= 1.0) {
        throw std::domain_error("functional: r must lie in [0, 1)");
    }
}

}  // namespace

double eval(FunctionalKind kind, const ClassParameter& p, double r) {
    check_radius(r);
    const double m = p.m();
    const double d = boundary_distance(p);
    switch (kind) {
        case FunctionalKind::H1_BohrRogosinski:
            return 2.0 * r + 4.0 * m * sum_basic(r) - d;
        case FunctionalKind::H2_Area:
            return r * r + r + 4.0 * m * sum_basic(r) +
                   4.0 * m * m * sum_area(r) - d;
        case FunctionalKind::H3_Jacobian:
            return 2.0 * r + 2.0 * m * (r + (1.0 - 2.0 * r) * std::log1p(-r)) -
                   d;
        case FunctionalKind::H4_Refined: {
            const double sb = sum_basic(r);
            const double growth = r + 2.0 * m * sb;
            return growth * growth + 2.0 * m * sb +
                   (4.0 * m * m * r / (1.0 - r)) * sum_refined(r) - d;
        }
    }
    throw std::logic_error("eval: bad FunctionalKind");
}

double eval_series(FunctionalKind kind, const ClassParameter& p, double r,
                   const SeriesTruncation& trunc) {
    check_radius(r);
    const double m = p.m();
    const double d = boundary_distance(p);
    const double sb = truncated_sum(SumKind::Basic, r, trunc);
    switch (kind) {
        case FunctionalKind::H1_BohrRogosinski:
            return 2.0 * r + 4.0 * m * sb - d;
        case FunctionalKind::H2_Area:
            return r * r + r + 4.0 * m * sb +
                   4.0 * m * m * truncated_sum(SumKind::Area, r, trunc) - d;
        case FunctionalKind::H3_Jacobian: {
            const double nl = truncated_sum(SumKind::NegLogOneMinus, r, trunc);
            return r + 2.0 * m * sb + (1.0 + 2.0 * m * nl) * r - d;
        }
        case FunctionalKind::H4_Refined: {
            const double growth = r + 2.0 * m * sb;
            return growth * growth + 2.0 * m * sb +
                   (4.0 * m * m * r / (1.0 - r)) *
                       truncated_sum(SumKind::Refined, r, trunc) -
                   d;
        }
    }
    throw std::logic_error("eval_series: bad FunctionalKind");
}

double series_error_bound(FunctionalKind kind, const ClassParameter& p,
                          double r, int order) {
    check_radius(r);
    const double m = p.m();
    const double tb = tail_bound(SumKind::Basic, r, order);
    switch (kind) {
        case FunctionalKind::H1_BohrRogosinski:
            return 4.0 * m * tb;
        case FunctionalKind::H2_Area:
            return 4.0 * m * tb +
                   4.0 * m * m * tail_bound(SumKind::Area, r, order);
        case FunctionalKind::H3_Jacobian:
            return 2.0 * m * tb +
                   2.0 * m * r * tail_bound(SumKind::NegLogOneMinus, r, order);
        case FunctionalKind::H4_Refined: {
            // |a^2 - b^2| <= |a - b| (|a| + |b|) with a the exact growth term.
            const double growth = r + 2.0 * m * sum_basic(r);
            const double diff = 2.0 * m * tb;
            return diff * (2.0 * growth + diff) + diff +
                   (4.0 * m * m * r / (1.0 - r)) *
                       tail_bound(SumKind::Refined, r, order);
        }
    }
    throw std::logic_error("series_error_bound: bad FunctionalKind");
}

double theorem_lhs(FunctionalKind kind, const ClassParameter& p, double r) {
    check_radius(r);
    switch (kind) {
        case FunctionalKind::H1_BohrRogosinski:
            return r + extremal_value(p, r) + majorant_tail(p, r);
        case FunctionalKind::H2_Area:
            return extremal_value(p, r) + majorant_tail(p, r) +
                   area_ratio(p, r);
        case FunctionalKind::H3_Jacobian:
            // The r slack term keeps this identical to eval + distance; the
            // majorized inequality carries it through from the growth bound.
            return r + majorant_tail(p, r) + jacobian_sqrt_bound(p, r) * r;
        case FunctionalKind::H4_Refined: {
            const double m = p.m();
            const double growth = extremal_value(p, r);
            return growth * growth + majorant_tail(p, r) +
                   (r / (1.0 - r)) * 4.0 * m * m * sum_refined(r);
        }
    }
    throw std::logic_error("theorem_lhs: bad FunctionalKind");
}

SlopeWitness slope_positive(FunctionalKind kind, const ClassParameter& p,
                            double r) {
    if (r <= 0.0 || r >= 1.0) {
        throw std::domain_error("slope_positive: r must lie in (0, 1)");
    }
    constexpr double kStep = 1e-6;
    const double lo = r - kStep;
    const double hi = r + kStep;
    if (lo <= 0.0 || hi >= 1.0) {
        throw std::domain_error("slope_positive: r too close to the boundary");
    }
    const double slope = (eval(kind, p, hi) - eval(kind, p, lo)) / (2.0 * kStep);
    return SlopeWitness{slope > 0.0, slope};
}

double eval_refined_log_variant(const ClassParameter& p, double r) {
    check_radius(r);
    const double m = p.m();
    const double sb = sum_basic(r);
    const double growth = r + 2.0 * m * sb;
    return growth * growth + 2.0 * m * sb - 2.0 * m * r * std::log1p(-r) -
           boundary_distance(p);
}

}  // namespace bohrlab
