#pragma once

// Exact arithmetic over Q and Q(sqrt 3).
//
// Everything geometric in this library lives in the quadratic field
// Q(sqrt 3): the attractor's vertices, all cell centroids, and all
// candidate quantizer points have coordinates a + b*sqrt(3) with a, b
// rational.  Keeping coordinates in this field means every distance
// comparison and every Voronoi ownership question can be decided
// exactly, with no floating-point fallback anywhere.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace rquant {

// Arbitrary-precision rational, always kept in canonical form
// (reduced, positive denominator).  GMP guarantees canonical results
// for arithmetic on canonical operands; the factories below
// canonicalize raw input once at the boundary.
using Rat = mpq_class;
using Int = mpz_class;

// num/den as a canonical Rat.  Throws std::domain_error if den == 0.
Rat frac(long long num, long long den);
Rat frac(const Int& num, const Int& den);

// Parses "p", "-p", or "p/q" (q > 0 after canonicalization).
// Throws std::invalid_argument on malformed input.
Rat rat_from_string(std::string_view s);

// "p" or "p/q" with q > 1.
std::string to_string(const Rat& r);

double to_double(const Rat& r);

int sign(const Rat& r);

// base^exp for integer exp (negative allowed; base must be nonzero then).
Rat rat_pow(const Rat& base, long exp);

// 3^k as an integer, k >= 0.
Int pow3(unsigned long k);

// 3^k as a rational, any integer k.
Rat pow3q(long k);

// floor(r) as an integer.
Int rat_floor(const Rat& r);

// floor(sqrt(n)) for n >= 0.
Int isqrt(const Int& n);

// ---- the quadratic field Q(sqrt 3) ----

struct QuadNum {
    Rat a;  // rational part
    Rat b;  // coefficient of sqrt(3)

    QuadNum() = default;
    QuadNum(const Rat& a_, const Rat& b_ = Rat(0)) : a(a_), b(b_) {}

    bool is_rational() const { return sgn(b) == 0; }

    QuadNum& operator+=(const QuadNum& o);
    QuadNum& operator-=(const QuadNum& o);
    QuadNum& operator*=(const QuadNum& o);
};

QuadNum operator+(QuadNum u, const QuadNum& v);
QuadNum operator-(QuadNum u, const QuadNum& v);
QuadNum operator-(const QuadNum& u);
// (a + b s)(c + d s) = (ac + 3bd) + (ad + bc) s  with s = sqrt(3)
QuadNum operator*(const QuadNum& u, const QuadNum& v);
QuadNum operator*(const Rat& c, const QuadNum& u);
QuadNum operator*(const QuadNum& u, const Rat& c);

bool operator==(const QuadNum& u, const QuadNum& v);
bool operator!=(const QuadNum& u, const QuadNum& v);

// Exact sign of a + b*sqrt(3).  When a and b have opposite signs the
// comparison a^2 vs 3 b^2 settles it (they can never be equal for
// rational a, b not both zero, since sqrt(3) is irrational).
int sign(const QuadNum& u);

// -1 / 0 / +1 ordering u vs v, decided exactly.
int quad_cmp(const QuadNum& u, const QuadNum& v);

bool operator<(const QuadNum& u, const QuadNum& v);
bool operator<=(const QuadNum& u, const QuadNum& v);
bool operator>(const QuadNum& u, const QuadNum& v);
bool operator>=(const QuadNum& u, const QuadNum& v);

QuadNum square(const QuadNum& u);

double to_double(const QuadNum& u);

// "p/q" when b = 0, otherwise "p/q + r/s√3" (or "- r/s√3" for b < 0;
// "0 + r/s√3" keeps the two-term shape when a = 0 but b != 0).
std::string format_quad(const QuadNum& u);

// Inverse of format_quad; also accepts plain rationals.
// Throws std::invalid_argument on malformed input.
QuadNum parse_quad(std::string_view s);

// Decimal expansion of u rounded to `digits` places after the point,
// correct to within one unit in the last digit.  Computed from an
// exact integer enclosure of u * 10^(digits+3), so no floating point
// is involved.
std::string to_decimal(const QuadNum& u, int digits);

// ---- rational enclosures ----
//
// The certification oracle needs one-sided rational bounds on square
// roots (and hence on elements of Q(sqrt 3)).  With s = isqrt(floor(q*M^2))
// we get s/M <= sqrt(q) <= (s+1)/M: an enclosure of width 1/M from pure
// integer arithmetic.

// Bounds on sqrt(q) for rational q >= 0.  Throws std::domain_error for q < 0.
Rat sqrt_lower(const Rat& q, const Int& scale);
Rat sqrt_upper(const Rat& q, const Int& scale);

// Outward rational bounds on a + b*sqrt(3).
Rat quad_lower(const QuadNum& u, const Int& scale);
Rat quad_upper(const QuadNum& u, const Int& scale);

// ---- points ----

struct PointQ {
    QuadNum x;
    QuadNum y;
};

PointQ operator+(const PointQ& p, const PointQ& q);
PointQ operator-(const PointQ& p, const PointQ& q);
PointQ operator*(const Rat& c, const PointQ& p);
bool operator==(const PointQ& p, const PointQ& q);
bool operator!=(const PointQ& p, const PointQ& q);

QuadNum sqdist(const PointQ& p, const PointQ& q);
QuadNum sqnorm(const PointQ& p);

// Exact lexicographic order by (x, y); used to give every point set a
// canonical listing order.
bool lex_less(const PointQ& p, const PointQ& q);

}  // namespace rquant
