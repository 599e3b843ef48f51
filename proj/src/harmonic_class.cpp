#include "bohrlab/harmonic_class.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "bohrlab/series_kernel.hpp"

namespace bohrlab {

double admissible_upper_bound() noexcept {
    static const double bound = 1.0 / (2.0 * (std::log(4.0) - 1.0));
    return bound;
}

ClassParameter::ClassParameter(double m) : m_(m) {
    if (!(m > 0.0) || !(m < admissible_upper_bound())) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "class parameter m = " << m
            << " outside the admissible open interval (0, "
            << admissible_upper_bound() << ") = (0, 1/(2(log 4 - 1)))";
        throw std::domain_error(msg.str());
    }
}

ClassParameter validate_parameter(double m_raw) {
    return ClassParameter{m_raw};
}

double extremal_coefficient(const ClassParameter& p, int n) {
    if (n <= 0) throw std::domain_error("extremal_coefficient: n must be >= 1");
    if (n == 1) return 1.0;  // h'(0) = 1 normalization
    const double nn = static_cast<double>(n);
    return 2.0 * p.m() / (nn * (nn - 1.0));
}

double extremal_value(const ClassParameter& p, double r) {
    if (r < 0.0 || r >= 1.0) {
        throw std::domain_error("extremal_value: r must lie in [0, 1)");
    }
    return r + 2.0 * p.m() * sum_basic(r);
}

GrowthEnvelope growth_envelope(const ClassParameter& p, double r) {
    if (r < 0.0 || r >= 1.0) {
        throw std::domain_error("growth_envelope: r must lie in [0, 1)");
    }
    // Alternating lower sum in closed form:
    //   sum_{n>=2} (-1)^{n-1} r^n/(n(n-1)) = r - (1+r) log(1+r).
    const double alternating = r - (1.0 + r) * std::log1p(r);
    return GrowthEnvelope{r + 2.0 * p.m() * alternating, extremal_value(p, r)};
}

double boundary_distance(const ClassParameter& p) noexcept {
    return 1.0 + 2.0 * p.m() * (1.0 - 2.0 * std::numbers::ln2);
}

double majorant_tail(const ClassParameter& p, double r) {
    if (r < 0.0 || r >= 1.0) {
        throw std::domain_error("majorant_tail: r must lie in [0, 1)");
    }
    return 2.0 * p.m() * sum_basic(r);
}

double area_ratio(const ClassParameter& p, double r) {
    if (r < 0.0 || r >= 1.0) {
        throw std::domain_error("area_ratio: r must lie in [0, 1)");
    }
    const double m = p.m();
    return r * r + 4.0 * m * m * sum_area(r);
}

double jacobian_sqrt_bound(const ClassParameter& p, double r) {
    if (r < 0.0 || r >= 1.0) {
        throw std::domain_error("jacobian_sqrt_bound: r must lie in [0, 1)");
    }
    return 1.0 + 2.0 * p.m() * neg_log_one_minus(r);
}

}  // namespace bohrlab
