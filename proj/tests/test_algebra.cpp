#include <doctest.h>

#include <rquant/algebra.hpp>
#include <rquant/rng.hpp>

#include <cmath>
#include <stdexcept>
#include <vector>

using namespace rquant;

namespace {

// Small random QuadNums with exactly reproducible streams.
QuadNum random_quad(Rng& rng) {
    auto small_rat = [&rng]() {
        long long num = static_cast<long long>(rng.next_below(1999)) - 999;
        long long den = static_cast<long long>(rng.next_below(999)) + 1;
        return frac(num, den);
    };
    return QuadNum(small_rat(), small_rat());
}

} // namespace

TEST_CASE("rational factory canonicalizes and rejects zero denominators") {
    CHECK(frac(2, 6) == frac(1, 3));
    CHECK(frac(-2, -6) == frac(1, 3));
    CHECK(frac(2, -6) == frac(-1, 3));
    CHECK(to_string(frac(2, -6)) == "-1/3");
    CHECK(to_string(frac(8, 4)) == "2");
    CHECK_THROWS_AS(frac(1, 0), std::domain_error);
    CHECK_THROWS_AS(frac(Int(0), Int(0)), std::domain_error);
}

TEST_CASE("rational parsing round-trips and rejects junk") {
    CHECK(rat_from_string("5/54") == frac(5, 54));
    CHECK(rat_from_string("-7") == frac(-7, 1));
    CHECK(rat_from_string("4/6") == frac(2, 3));
    for (const char* bad : {"", "/3", "3/", "1/0", "a/b", "1.5", "2/3/4"}) {
        CHECK_THROWS_AS(rat_from_string(bad), std::invalid_argument);
    }
    Rng rng(7, 1, 0);
    for (int i = 0; i < 200; ++i) {
        long long num = static_cast<long long>(rng.next_below(20001)) - 10000;
        long long den = static_cast<long long>(rng.next_below(9999)) + 1;
        Rat r = frac(num, den);
        CHECK(rat_from_string(to_string(r)) == r);
    }
}

TEST_CASE("integer helpers: powers, floor, isqrt") {
    CHECK(pow3(0) == 1);
    CHECK(pow3(5) == 243);
    CHECK(pow3q(-3) == frac(1, 27));
    CHECK(pow3q(4) == frac(81, 1));
    CHECK(rat_pow(frac(2, 3), 3) == frac(8, 27));
    CHECK(rat_pow(frac(2, 3), -2) == frac(9, 4));
    CHECK(rat_pow(frac(5, 1), 0) == frac(1, 1));
    CHECK_THROWS_AS(rat_pow(frac(0, 1), -1), std::domain_error);

    CHECK(rat_floor(frac(7, 2)) == 3);
    CHECK(rat_floor(frac(-7, 2)) == -4);
    CHECK(rat_floor(frac(6, 3)) == 2);

    CHECK(isqrt(Int(0)) == 0);
    CHECK(isqrt(Int(48)) == 6);
    CHECK(isqrt(Int(49)) == 7);
    CHECK_THROWS_AS(isqrt(Int(-1)), std::domain_error);
    // isqrt(3 * 10^12) is the floor of sqrt(3) * 10^6.
    Int three_e12 = Int(3) * rat_pow(frac(10, 1), 12).get_num();
    CHECK(isqrt(three_e12) == 1732050);
}

TEST_CASE("quadratic field arithmetic satisfies ring axioms") {
    Rng rng(11, 2, 0);
    const QuadNum zero(frac(0, 1)), one(frac(1, 1));
    for (int i = 0; i < 100; ++i) {
        QuadNum u = random_quad(rng), v = random_quad(rng), w = random_quad(rng);
        CHECK(u + v == v + u);
        CHECK(u * v == v * u);
        CHECK((u + v) + w == u + (v + w));
        CHECK((u * v) * w == u * (v * w));
        CHECK(u * (v + w) == u * v + u * w);
        CHECK(u + zero == u);
        CHECK(u * one == u);
        CHECK(u - u == zero);
        CHECK(u + (-u) == zero);
        CHECK(square(u) == u * u);
    }
    // sqrt(3)^2 = 3 exactly.
    QuadNum s(frac(0, 1), frac(1, 1));
    CHECK(square(s) == QuadNum(frac(3, 1)));
    CHECK((s * s).is_rational());
    CHECK_FALSE(s.is_rational());
}

TEST_CASE("exact sign agrees with floating evaluation away from zero") {
    Rng rng(13, 3, 0);
    for (int i = 0; i < 500; ++i) {
        QuadNum u = random_quad(rng);
        double f = to_double(u);
        if (std::fabs(f) > 1e-9) {
            CHECK(sign(u) == (f > 0 ? 1 : -1));
        }
    }
    CHECK(sign(QuadNum(frac(0, 1))) == 0);
    // 1.732 < sqrt(3) < 1.733, so these straddle zero from both sides.
    CHECK(sign(QuadNum(frac(-1732, 1000), frac(1, 1))) == 1);
    CHECK(sign(QuadNum(frac(1733, 1000), frac(-1, 1))) == 1);
    CHECK(sign(QuadNum(frac(-1733, 1000), frac(1, 1))) == -1);
    // a = -b*sqrt(3) is impossible for nonzero rationals, so ties only at 0.
    CHECK(sign(QuadNum(frac(0, 1), frac(0, 1))) == 0);
}

TEST_CASE("quadratic comparisons are a total order consistent with doubles") {
    Rng rng(17, 4, 0);
    for (int i = 0; i < 200; ++i) {
        QuadNum u = random_quad(rng), v = random_quad(rng);
        int c = quad_cmp(u, v);
        CHECK(c == -quad_cmp(v, u));
        if (c == 0) CHECK(u == v);
        double fu = to_double(u), fv = to_double(v);
        if (std::fabs(fu - fv) > 1e-9) {
            CHECK(c == (fu < fv ? -1 : 1));
        }
        CHECK((u < v) == (c < 0));
        CHECK((u >= v) == (c >= 0));
    }
    // A genuinely close pair decided exactly: 97/56 > sqrt(3), 1351/780 > sqrt(3),
    // but 989/571 < sqrt(3).  (Continued-fraction neighbors of sqrt 3.)
    QuadNum s(frac(0, 1), frac(1, 1));
    CHECK(quad_cmp(QuadNum(frac(97, 56)), s) > 0);
    CHECK(quad_cmp(QuadNum(frac(1351, 780)), s) > 0);
    CHECK(quad_cmp(QuadNum(frac(989, 571)), s) < 0);
}

TEST_CASE("format and parse round-trip the field exactly") {
    CHECK(format_quad(QuadNum(frac(1, 2))) == "1/2");
    CHECK(format_quad(QuadNum(frac(1, 2), frac(1, 18))) == "1/2 + 1/18√3");
    CHECK(format_quad(QuadNum(frac(1, 2), frac(-1, 18))) == "1/2 - 1/18√3");
    CHECK(format_quad(QuadNum(frac(0, 1), frac(7, 18))) == "0 + 7/18√3");
    CHECK(parse_quad("1/2 + 1/18√3") == QuadNum(frac(1, 2), frac(1, 18)));
    CHECK(parse_quad("0 + 7/18√3") == QuadNum(frac(0, 1), frac(7, 18)));
    CHECK(parse_quad("-5/6") == QuadNum(frac(-5, 6)));
    CHECK(parse_quad("2√3") == QuadNum(frac(0, 1), frac(2, 1)));

    Rng rng(19, 5, 0);
    for (int i = 0; i < 300; ++i) {
        QuadNum u = random_quad(rng);
        CHECK(parse_quad(format_quad(u)) == u);
    }
    for (const char* bad : {"", "1/2 +", "√3√3", "1/2 + /3√3", "x + y√3"}) {
        CHECK_THROWS_AS(parse_quad(bad), std::invalid_argument);
    }
}

TEST_CASE("decimal expansion is correctly rounded") {
    CHECK(to_decimal(QuadNum(frac(5, 54)), 7) == "0.0925926");
    CHECK(to_decimal(QuadNum(frac(1, 54)), 7) == "0.0185185");
    CHECK(to_decimal(QuadNum(frac(1, 2)), 3) == "0.500");
    CHECK(to_decimal(QuadNum(frac(1, 8)), 2) == "0.13");
    CHECK(to_decimal(QuadNum(frac(-1, 8)), 2) == "-0.13");
    CHECK(to_decimal(QuadNum(frac(0, 1), frac(1, 1)), 6) == "1.732051");
    CHECK(to_decimal(QuadNum(frac(0, 1), frac(-1, 1)), 4) == "-1.7321");
    CHECK(to_decimal(QuadNum(frac(2, 1)), 0) == "2");
    CHECK_THROWS_AS(to_decimal(QuadNum(frac(1, 2)), -1), std::invalid_argument);

    // Rounded value must sit within 10^-d of the true value.
    Rng rng(23, 6, 0);
    for (int i = 0; i < 100; ++i) {
        QuadNum u = random_quad(rng);
        std::string s = to_decimal(u, 9);
        double d = std::stod(s);
        CHECK(std::fabs(d - to_double(u)) < 1.0000001e-9);
    }
}

TEST_CASE("square root enclosures are sound and tight") {
    const Int scale = rat_pow(frac(10, 1), 20).get_num();
    Rng rng(29, 7, 0);
    for (int i = 0; i < 200; ++i) {
        Rat q = frac(static_cast<long long>(rng.next_below(100000)),
                     static_cast<long long>(rng.next_below(999)) + 1);
        Rat lo = sqrt_lower(q, scale), hi = sqrt_upper(q, scale);
        CHECK(lo <= hi);
        CHECK(lo * lo <= q);
        CHECK(hi * hi >= q);
        CHECK(hi - lo <= frac(2, 1) / Rat(scale));
    }
    CHECK(sqrt_lower(frac(0, 1), scale) == 0);
    CHECK(sqrt_upper(frac(0, 1), scale) >= 0);
    CHECK(sqrt_lower(frac(4, 1), scale) <= 2);
    CHECK(sqrt_upper(frac(4, 1), scale) >= 2);
    CHECK_THROWS_AS(sqrt_lower(frac(-1, 1), scale), std::domain_error);

    // quad enclosures bracket the value for either sign of b.
    for (int i = 0; i < 200; ++i) {
        long long na = static_cast<long long>(rng.next_below(2001)) - 1000;
        long long nb = static_cast<long long>(rng.next_below(2001)) - 1000;
        QuadNum u(frac(na, 7), frac(nb, 11));
        Rat lo = quad_lower(u, scale), hi = quad_upper(u, scale);
        CHECK(lo <= hi);
        double f = to_double(u);
        CHECK(to_double(lo) <= f + 1e-12);
        CHECK(to_double(hi) >= f - 1e-12);
        // Exactness on the rational side:
        CHECK(QuadNum(lo) <= u);
        CHECK(u <= QuadNum(hi));
    }
}

TEST_CASE("points: arithmetic, metric, lexicographic order") {
    PointQ p{QuadNum(frac(1, 2)), QuadNum(frac(0, 1), frac(1, 6))};
    PointQ q{QuadNum(frac(1, 6)), QuadNum(frac(0, 1), frac(1, 18))};
    PointQ sum = p + q;
    CHECK(sum.x == QuadNum(frac(2, 3)));
    CHECK(sum.y == QuadNum(frac(0, 1), frac(2, 9)));
    PointQ diff = p - q;
    CHECK(diff.x == QuadNum(frac(1, 3)));
    CHECK(sqnorm(diff) == square(diff.x) + square(diff.y));
    CHECK(sqdist(p, q) == sqnorm(diff));
    CHECK(sqdist(p, p) == QuadNum(frac(0, 1)));
    // ||(1/3, sqrt(3)/9)||^2 = 1/9 + 3/81 = 4/27
    CHECK(sqdist(p, q) == QuadNum(frac(4, 27)));

    PointQ scaled = frac(1, 3) * p;
    CHECK(scaled.x == QuadNum(frac(1, 6)));

    CHECK(lex_less(q, p));
    CHECK_FALSE(lex_less(p, q));
    PointQ p2{p.x, p.y + QuadNum(frac(1, 100))};
    CHECK(lex_less(p, p2));
    CHECK_FALSE(lex_less(p, p));
    CHECK(p != q);
    CHECK(p == p);
}
