#pragma once

namespace bohrlab {

/// Upper end of the admissible parameter range, 1/(2(log 4 - 1)) ~ 1.2943497.
/// Every radius equation has a root in (0, 1) exactly when 0 < M < this.
double admissible_upper_bound() noexcept;

/// Validated parameter M of the class P0_H(M) of harmonic mappings
/// f = h + conj(g), normalized, with Re(z h''(z)) > -M + |z g''(z)|.
/// Construction throws std::domain_error unless 0 < m < admissible_upper_bound().
class ClassParameter {
public:
    explicit ClassParameter(double m);
    double m() const noexcept { return m_; }

private:
    double m_;
};

/// Shorthand for ClassParameter{m_raw}.
ClassParameter validate_parameter(double m_raw);

/// Two-sided growth bound on |f(z)| at |z| = r, sharp for the extremal map.
struct GrowthEnvelope {
    double lower;
    double upper;
};

/// Coefficient of the extremal function f_M(z) = z + 2M sum z^n/(n(n-1)):
/// 1 for n = 1, 2M/(n(n-1)) for n >= 2. Also the sharp bound on |a_n|+|b_n|
/// over the whole class. Throws std::domain_error for n <= 0.
double extremal_coefficient(const ClassParameter& p, int n);

/// f_M(r) = r + 2M sum_basic(r) for r in [0, 1); the sharp upper growth bound.
double extremal_value(const ClassParameter& p, double r);

/// lower = r + 2M (r - (1+r)log(1+r)), upper = extremal_value(p, r).
/// lower <= |f(z)| <= upper for every class member at |z| = r.
GrowthEnvelope growth_envelope(const ClassParameter& p, double r);

/// d(f_M(0), boundary of f_M(D)) = 1 + 2M(1 - 2 log 2); positive on the
/// admissible range and the right-hand side of every radius inequality.
double boundary_distance(const ClassParameter& p) noexcept;

/// Sharp bound 2M sum_basic(r) on sum_{n>=2} (|a_n|+|b_n|) r^n.
double majorant_tail(const ClassParameter& p, double r);

/// S_r/pi = r^2 + 4M^2 sum_area(r): area of the image of |z| < r under f_M,
/// divided by pi; bounds the class-wide image area.
double area_ratio(const ClassParameter& p, double r);

/// 1 + 2M neg_log_one_minus(r) = 1 - 2M log(1-r): majorant of sqrt(|J_f|)
/// on |z| = r. Coincides with h'_M(r) since g vanishes for the extremal map.
double jacobian_sqrt_bound(const ClassParameter& p, double r);

}  // namespace bohrlab
