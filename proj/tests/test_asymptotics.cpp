#include <doctest.h>

#include <rquant/asymptotics.hpp>
#include <rquant/optimal.hpp>

#include <cmath>
#include <stdexcept>

using namespace rquant;

TEST_CASE("the scaling profile f on [1, 2]") {
    CHECK(f_coeff(frac(1, 1)) == frac(1, 6));
    CHECK(f_coeff(frac(2, 1)) == frac(10, 27));
    CHECK(f_coeff(frac(3, 2)) == frac(7, 24));
    CHECK(f_coeff(frac(5, 4)) == frac(25, 108));
    CHECK(f_coeff(frac(7, 4)) == frac(147, 432) * frac(2, 2)); // 49/144
    CHECK(f_coeff(frac(7, 4)) == frac(49, 144));
    CHECK_THROWS_AS(f_coeff(frac(9, 10)), std::domain_error);
    CHECK_THROWS_AS(f_coeff(frac(21, 10)), std::domain_error);

    // f is exactly the scaled error along exact multiples: for n = x 3^l
    // integral, n^2 V_n = f(x).
    for (int l = 1; l <= 6; ++l) {
        long long p = 1;
        for (int i = 0; i < l; ++i) p *= 3;
        for (long long num = 4; num <= 8; ++num) { // x = num/4 in [1, 2]
            if ((num * p) % 4 != 0) continue;
            long long n = num * p / 4;
            Rat scaled = Rat(static_cast<long>(n)) * Rat(static_cast<long>(n)) *
                         quantization_error(n);
            CHECK(scaled == f_coeff(frac(num, 4)));
        }
    }
}

TEST_CASE("dimension estimates converge to 1 along powers of three") {
    CHECK(dimension_estimate(1) == 0.0);
    CHECK(dimension_estimate(3) == doctest::Approx(0.5508).epsilon(1e-3));
    // 2 l ln 3 / (l ln 9 + ln 6) at l = 10.
    long long p10 = 59049;
    CHECK(dimension_estimate(p10) == doctest::Approx(0.9246).epsilon(1e-3));
    CHECK_THROWS_AS(dimension_estimate(0), std::invalid_argument);

    double prev = 0;
    long long p = 1;
    for (int l = 1; l <= 14; ++l) {
        p *= 3;
        double d = dimension_estimate(p);
        CHECK(d > prev);
        CHECK(d < 1.0);
        prev = d;
    }
    CHECK(prev > 0.94);

    // The estimate dips at the start of each level (V_{3^l} is the flat
    // spot of the profile), so global monotonicity genuinely fails.
    CHECK(dimension_estimate(26) > dimension_estimate(27));
}

TEST_CASE("dimension scan rows are internally consistent") {
    auto rows = dimension_scan(200);
    REQUIRE(rows.size() == 200);
    for (const auto& r : rows) {
        CHECK(r.vn == quantization_error(r.n));
        CHECK(r.scaled == Rat(static_cast<long>(r.n)) * Rat(static_cast<long>(r.n)) * r.vn);
        CHECK(r.scaled >= frac(1, 54));
        CHECK(r.scaled <= frac(3, 2));
    }
    CHECK(rows[0].n == 1);
    CHECK(rows[0].scaled == frac(1, 6));
    CHECK(rows[1].scaled == frac(10, 27)); // 4 * 5/54
    CHECK_THROWS_AS(dimension_scan(0), std::invalid_argument);
}

TEST_CASE("accumulation scans converge to f(x) exactly where possible") {
    // x = 1 and x = 2 give exact hits at every level.
    for (const auto& rec : accumulation_scan(frac(1, 1), 8)) {
        CHECK(rec.scaled == frac(1, 6));
        CHECK(rec.gap == 0);
    }
    for (const auto& rec : accumulation_scan(frac(2, 1), 8)) {
        CHECK(rec.scaled == frac(10, 27));
        CHECK(rec.gap == 0);
    }

    // Interior x: floor effects vanish as l grows.
    auto rows = accumulation_scan(frac(3, 2), 12);
    REQUIRE(rows.size() == 12);
    CHECK(rows[0].level == 1);
    CHECK(rows[0].n == 4);   // floor(4.5)
    CHECK(rows[1].n == 13);  // floor(13.5)
    Rat target = f_coeff(frac(3, 2));
    CHECK(rows.back().gap < frac(1, 1000));
    CHECK(rows.back().gap == (rows.back().scaled > target ? rows.back().scaled - target
                                                          : target - rows.back().scaled));
    // Gaps shrink: final is smaller than at level 2.
    CHECK(rows.back().gap < rows[1].gap);

    CHECK_THROWS_AS(accumulation_scan(frac(1, 2), 4), std::domain_error);
    CHECK_THROWS_AS(accumulation_scan(frac(5, 2), 4), std::domain_error);
    CHECK_THROWS_AS(accumulation_scan(frac(3, 2), 0), std::invalid_argument);
    CHECK_THROWS_AS(accumulation_scan(frac(3, 2), 25), std::invalid_argument);
}

TEST_CASE("coefficient range and per-level extremes") {
    auto [clo, chi] = coefficient_range();
    CHECK(clo == frac(1, 6));
    CHECK(chi == frac(10, 27));

    // Every level attains its minimum 1/6 exactly at n = 3^l; the level
    // maximum sits slightly above 10/27 (the profile peaks just past the
    // accumulation window at x = 13/6).
    for (int l = 2; l <= 8; ++l) {
        auto [mn, mx] = level_extremes(l);
        CHECK(mn == frac(1, 6));
        CHECK(mx >= frac(10, 27));
        CHECK(mx <= frac(10, 27) + frac(1, 100));
    }
    auto [mn0, mx0] = level_extremes(0);
    CHECK(mn0 == frac(1, 6));   // n = 1
    CHECK(mx0 == frac(10, 27)); // n = 2
    CHECK_THROWS_AS(level_extremes(-1), std::invalid_argument);
    CHECK_THROWS_AS(level_extremes(13), std::invalid_argument);
}
