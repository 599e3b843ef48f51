// Brute-force reference computations used only by the tests. Everything here
// sums series term by term or integrates on a grid; nothing calls the
// closed-form code paths it is checking.
#pragma once

#include <cmath>
#include <complex>
#include <numbers>

namespace oracle {

// sum_{n=1}^{terms} x^n/n^2
inline double dilog_partial(double x, long terms) {
    double sum = 0.0;
    double power = 1.0;
    for (long n = 1; n <= terms; ++n) {
        power *= x;
        sum += power / (static_cast<double>(n) * static_cast<double>(n));
    }
    return sum;
}

// sum_{n=1}^{terms} r^n/n
inline double neg_log_partial(double r, long terms) {
    double sum = 0.0;
    double power = 1.0;
    for (long n = 1; n <= terms; ++n) {
        power *= r;
        sum += power / static_cast<double>(n);
    }
    return sum;
}

// sum_{n=2}^{terms+1} r^n/(n(n-1))
inline double basic_partial(double r, long terms) {
    double sum = 0.0;
    double power = r;
    for (long n = 2; n <= terms + 1; ++n) {
        power *= r;
        sum += power / (static_cast<double>(n) * static_cast<double>(n - 1));
    }
    return sum;
}

// sum_{n=2}^{terms+1} r^{2n}/(n(n-1)^2)
inline double area_partial(double r, long terms) {
    const double x = r * r;
    double sum = 0.0;
    double power = x;
    for (long n = 2; n <= terms + 1; ++n) {
        power *= x;
        const double nm1 = static_cast<double>(n - 1);
        sum += power / (static_cast<double>(n) * nm1 * nm1);
    }
    return sum;
}

// sum_{n=2}^{terms+1} r^{2n}/(n^2(n-1)^2)
inline double refined_partial(double r, long terms) {
    const double x = r * r;
    double sum = 0.0;
    double power = x;
    for (long n = 2; n <= terms + 1; ++n) {
        power *= x;
        const double nn = static_cast<double>(n);
        const double nm1 = static_cast<double>(n - 1);
        sum += power / (nn * nn * nm1 * nm1);
    }
    return sum;
}

// sum_{n=2}^{terms+1} (-1)^{n-1}/(n(n-1))
inline double alternating_partial(long terms) {
    double sum = 0.0;
    double sign = -1.0;  // (-1)^{n-1} at n = 2
    for (long n = 2; n <= terms + 1; ++n) {
        sum += sign / (static_cast<double>(n) * static_cast<double>(n - 1));
        sign = -sign;
    }
    return sum;
}

// (1/pi) * integral over the disk |z| < r of |h'(z)|^2, midpoint rule on an
// n_rho x n_theta polar grid, for h'(z) = 1 - 2m log(1 - z).
inline double area_ratio_quadrature(double m, double r, int n_rho = 400,
                                    int n_theta = 400) {
    const double d_rho = r / n_rho;
    const double d_theta = 2.0 * std::numbers::pi / n_theta;
    double integral = 0.0;
    for (int j = 0; j < n_rho; ++j) {
        const double rho = (j + 0.5) * d_rho;
        double ring = 0.0;
        for (int k = 0; k < n_theta; ++k) {
            const double theta = (k + 0.5) * d_theta;
            const std::complex<double> z = std::polar(rho, theta);
            const std::complex<double> h_prime = 1.0 - 2.0 * m * std::log(1.0 - z);
            ring += std::norm(h_prime);
        }
        integral += ring * rho * d_rho * d_theta;
    }
    return integral / std::numbers::pi;
}

}  // namespace oracle
