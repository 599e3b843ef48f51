#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "bohrlab/harmonic_class.hpp"
#include "bohrlab/series_kernel.hpp"

namespace bohrlab {

/// The four Bohr functionals. Each is strictly increasing on (0, 1), negative
/// at 0, positive near 1; its unique root is the corresponding sharp radius.
enum class FunctionalKind {
    H1_BohrRogosinski,  // |z| + |f(z)| + majorant tail
    H2_Area,            // |f(z)| + majorant tail + image area ratio
    H3_Jacobian,        // majorant tail + sqrt(|J_f|) |z|, plus the |z| slack term
    H4_Refined,         // |f(z)|^2 + majorant tail + refined square-coefficient tail
};

inline constexpr std::array<FunctionalKind, 4> kAllFunctionals = {
    FunctionalKind::H1_BohrRogosinski,
    FunctionalKind::H2_Area,
    FunctionalKind::H3_Jacobian,
    FunctionalKind::H4_Refined,
};

/// Short tag used on the CLI and in output records: "h1".."h4".
std::string_view tag(FunctionalKind kind) noexcept;

/// Inverse of tag(); empty for anything else.
std::optional<FunctionalKind> parse_tag(std::string_view text) noexcept;

/// Closed-form value of the functional at radius r in [0, 1), with
/// D = boundary_distance(p) and M = p.m():
///
///   H1(r) = 2r + 4M sum_basic(r) - D
///   H2(r) = r^2 + r + 4M sum_basic(r) + 4M^2 sum_area(r) - D
///   H3(r) = 2r + 2M (r + (1-2r) log(1-r)) - D
///   H4(r) = (r + 2M sum_basic(r))^2 + 2M sum_basic(r)
///           + (4M^2 r/(1-r)) sum_refined(r) - D
double eval(FunctionalKind kind, const ClassParameter& p, double r);

/// Same functional with every r-dependent infinite sum replaced by its
/// truncated oracle of the given order. Agrees with eval() to within
/// series_error_bound(kind, p, r, trunc.order).
double eval_series(FunctionalKind kind, const ClassParameter& p, double r,
                   const SeriesTruncation& trunc);

/// Certified bound on |eval_series - eval| for the given truncation order.
double series_error_bound(FunctionalKind kind, const ClassParameter& p,
                          double r, int order);

/// Left-hand side of the radius inequality, evaluated at the extremal map:
///
///   H1: r + extremal_value + majorant_tail
///   H2: extremal_value + majorant_tail + area_ratio
///   H3: r + majorant_tail + jacobian_sqrt_bound * r
///   H4: extremal_value^2 + majorant_tail + (r/(1-r)) 4M^2 sum_refined(r)
///
/// Satisfies theorem_lhs - boundary_distance == eval identically.
double theorem_lhs(FunctionalKind kind, const ClassParameter& p, double r);

/// Central finite-difference slope of eval at r (step 1e-6) and whether it
/// is positive; the uniqueness witness for the root.
struct SlopeWitness {
    bool positive;
    double slope;
};
SlopeWitness slope_positive(FunctionalKind kind, const ClassParameter& p,
                            double r);

/// Variant of the refined functional with a -2Mr log(1-r) cross term in place
/// of the weighted dilogarithm tail. Its root does not match the published
/// refined radii; kept only as a comparison point for the canonical H4.
double eval_refined_log_variant(const ClassParameter& p, double r);

}  // namespace bohrlab
