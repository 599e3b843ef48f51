#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "bohrlab/series_kernel.hpp"
#include "oracles.hpp"

using namespace bohrlab;

namespace {

constexpr double kPi2Over6 = std::numbers::pi * std::numbers::pi / 6.0;

constexpr SumKind kAllKinds[] = {SumKind::Basic, SumKind::Area,
                                 SumKind::Refined, SumKind::Dilog,
                                 SumKind::NegLogOneMinus};

}  // namespace

TEST_CASE("dilog anchors") {
    CHECK(dilog(0.0) == 0.0);
    CHECK(dilog(1.0) == doctest::Approx(kPi2Over6).epsilon(1e-15));
    // Frozen from the 10000-term power-series oracle.
    CHECK(dilog(0.25) == doctest::Approx(0.26765263908273261).epsilon(1e-14));
    CHECK(std::abs(dilog(0.25) - oracle::dilog_partial(0.25, 10000)) < 1e-13);
    CHECK(dilog(0.5) == doctest::Approx(0.58224052646501251).epsilon(1e-14));
}

TEST_CASE("dilog reflection identity on a grid") {
    for (int i = 1; i < 100; ++i) {
        const double x = i / 100.0;
        const double lhs = dilog(x) + dilog(1.0 - x);
        const double rhs = kPi2Over6 - std::log(x) * std::log(1.0 - x);
        CHECK(std::abs(lhs - rhs) <= 1e-11);
    }
}

TEST_CASE("dilog domain") {
    CHECK_THROWS_AS(dilog(-0.1), std::domain_error);
    CHECK_THROWS_AS(dilog(1.0 + 1e-12), std::domain_error);
}

TEST_CASE("neg_log_one_minus") {
    CHECK(neg_log_one_minus(0.0) == 0.0);
    CHECK(neg_log_one_minus(0.5) ==
          doctest::Approx(std::numbers::ln2).epsilon(1e-15));
    const double direct = oracle::neg_log_partial(0.9, 2000);
    const double tail = std::pow(0.9, 2001) / (2001.0 * 0.1);
    CHECK(std::abs(neg_log_one_minus(0.9) - direct) <= tail + 1e-12);
    CHECK_THROWS_AS(neg_log_one_minus(1.0), std::domain_error);
}

TEST_CASE("sum_basic anchors and endpoint") {
    CHECK(sum_basic(0.0) == 0.0);
    CHECK(sum_basic(1.0) == 1.0);
    CHECK(std::isfinite(sum_basic(1.0 - 1e-16)));
    // r_{0.1} from the h1 reference table; value frozen from the series oracle.
    CHECK(sum_basic(0.438485) ==
          doctest::Approx(0.11442526510053895).epsilon(1e-13));
    CHECK(std::abs(sum_basic(1.0 - 1e-6) - 1.0) < 1e-4);
}

TEST_CASE("sum_area anchors and limit") {
    CHECK(sum_area(0.0) == 0.0);
    CHECK(sum_area(0.5) == doctest::Approx(0.032674714109518847).epsilon(1e-13));
    CHECK(std::abs(sum_area(0.5) - oracle::area_partial(0.5, 5000)) < 1e-13);
    CHECK(std::abs(sum_area(1.0 - 1e-6) - (kPi2Over6 - 1.0)) < 1e-4);
    CHECK_THROWS_AS(sum_area(1.0), std::domain_error);
}

TEST_CASE("sum_refined anchors") {
    CHECK(sum_refined(0.0) == 0.0);
    // Root of the refined equation at m = 1; frozen from the series oracle.
    CHECK(sum_refined(0.281757) ==
          doctest::Approx(0.00158975601223152).epsilon(1e-12));
    // Partial-fraction recombination against plain summation.
    CHECK(std::abs(sum_refined(0.6) - oracle::refined_partial(0.6, 5000)) <=
          1e-12);
    CHECK(sum_refined(0.6) ==
          doctest::Approx(0.033830734951310815).epsilon(1e-13));
}

TEST_CASE("alternating constant") {
    const double value = alternating_constant();
    CHECK(value == doctest::Approx(1.0 - 2.0 * std::numbers::ln2).epsilon(1e-16));
    CHECK(value == doctest::Approx(-0.38629436111989062).epsilon(1e-15));
    // Alternating series: the error is below the first omitted term.
    const long terms = 1000000;
    const double partial = oracle::alternating_partial(terms);
    const double alt_tail =
        1.0 / (static_cast<double>(terms + 1) * static_cast<double>(terms + 2));
    CHECK(std::abs(value - partial) <= alt_tail + 1e-12);
}

TEST_CASE("truncated_sum basics") {
    const SeriesTruncation t50{50, 0.0};
    CHECK(truncated_sum(SumKind::Basic, 0.0, t50) == 0.0);
    CHECK(std::abs(truncated_sum(SumKind::Dilog, 0.5, t50) - dilog(0.5)) <=
          tail_bound(SumKind::Dilog, 0.5, 50) + 1e-12);
    const SeriesTruncation t200{200, 0.0};
    CHECK(std::abs(truncated_sum(SumKind::Area, 0.9, t200) - sum_area(0.9)) <=
          tail_bound(SumKind::Area, 0.9, 200) + 1e-12);
    CHECK_THROWS_AS(truncated_sum(SumKind::Basic, 0.3, SeriesTruncation{1, 0.0}),
                    std::domain_error);
    CHECK_THROWS_AS(truncated_sum(SumKind::Area, 1.0, t50), std::domain_error);
    // Basic is defined on the closed interval; its partial sums are too.
    CHECK(truncated_sum(SumKind::Basic, 1.0, t50) < 1.0);
}

TEST_CASE("tail_bound properties") {
    CHECK(tail_bound(SumKind::Basic, 0.0, 10) == 0.0);
    const SeriesTruncation t20{20, 0.0};
    CHECK(std::abs(sum_basic(0.5) - truncated_sum(SumKind::Basic, 0.5, t20)) <=
          tail_bound(SumKind::Basic, 0.5, 20));

    // Refined tail at order 100: actual tail from 1e5 further terms.
    double actual_tail = 0.0;
    for (long n = 101; n <= 100000; ++n) {
        const double nn = static_cast<double>(n);
        actual_tail += std::pow(0.9, 2.0 * nn) / (nn * nn * (nn - 1) * (nn - 1));
    }
    CHECK(tail_bound(SumKind::Refined, 0.9, 100) >= actual_tail);

    for (SumKind kind : kAllKinds) {
        CHECK(tail_bound(kind, 0.7, 10) > tail_bound(kind, 0.7, 50));
        CHECK(tail_bound(kind, 0.7, 50) > tail_bound(kind, 0.7, 200));
    }
    CHECK_THROWS_AS(tail_bound(SumKind::Basic, 1.0, 10), std::domain_error);
    CHECK_THROWS_AS(tail_bound(SumKind::Basic, 0.5, 1), std::domain_error);

    const SeriesTruncation made = make_truncation(SumKind::Area, 0.5, 30);
    CHECK(made.order == 30);
    CHECK(made.tail_bound == tail_bound(SumKind::Area, 0.5, 30));
}

TEST_CASE("closed form vs truncated sum within tail bound, dense grid") {
    for (SumKind kind : kAllKinds) {
        for (int order : {10, 50, 200}) {
            for (int i = 0; i < 1000; ++i) {
                const double r = i / 1000.0;
                const SeriesTruncation trunc{order, 0.0};
                const double closed = closed_form(kind, r);
                const double truncated = truncated_sum(kind, r, trunc);
                const double bound = tail_bound(kind, r, order);
                CHECK(std::abs(closed - truncated) <= bound + 1e-12);
            }
        }
    }
}

TEST_CASE("all sums nonnegative and strictly increasing") {
    for (SumKind kind : kAllKinds) {
        double previous = -1.0;
        for (int i = 0; i < 1000; ++i) {
            const double r = i * 0.000999;  // stays inside [0, 1)
            const double value = closed_form(kind, r);
            CHECK(value >= 0.0);
            CHECK(value > previous - 1e-14);
            previous = value;
        }
    }
}
