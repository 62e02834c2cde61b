#include "rquant/algebra.hpp"

#include <cassert>
#include <cctype>
#include <cmath>
#include <stdexcept>

namespace rquant {

Rat frac(const Int& num, const Int& den) {
    if (sgn(den) == 0) throw std::domain_error("frac: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat frac(long long num, long long den) {
    return frac(Int(static_cast<long>(num)), Int(static_cast<long>(den)));
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Rat rat_from_string(std::string_view s) {
    s = trim(s);
    if (s.empty()) throw std::invalid_argument("rat_from_string: empty input");
    Rat r;
    try {
        r = Rat(std::string(s), 10);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("rat_from_string: malformed rational: " + std::string(s));
    }
    if (sgn(r.get_den()) == 0) throw std::invalid_argument("rat_from_string: zero denominator: " + std::string(s));
    r.canonicalize();
    return r;
}

std::string to_string(const Rat& r) { return r.get_str(); }

double to_double(const Rat& r) { return r.get_d(); }

int sign(const Rat& r) { return sgn(r); }

Rat rat_pow(const Rat& base, long exp) {
    if (exp == 0) return Rat(1);
    if (sgn(base) == 0) {
        if (exp < 0) throw std::domain_error("rat_pow: zero base, negative exponent");
        return Rat(0);
    }
    unsigned long e = exp > 0 ? static_cast<unsigned long>(exp) : static_cast<unsigned long>(-exp);
    Int num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), e);
    return exp > 0 ? frac(num, den) : frac(den, num);
}

Int pow3(unsigned long k) {
    Int p;
    mpz_ui_pow_ui(p.get_mpz_t(), 3, k);
    return p;
}

Rat pow3q(long k) {
    if (k >= 0) return Rat(pow3(static_cast<unsigned long>(k)));
    return frac(Int(1), pow3(static_cast<unsigned long>(-k)));
}

Int rat_floor(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

Int isqrt(const Int& n) {
    if (sgn(n) < 0) throw std::domain_error("isqrt: negative argument");
    Int s;
    mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
    return s;
}

// ---- QuadNum ----

QuadNum& QuadNum::operator+=(const QuadNum& o) {
    a += o.a;
    b += o.b;
    return *this;
}

QuadNum& QuadNum::operator-=(const QuadNum& o) {
    a -= o.a;
    b -= o.b;
    return *this;
}

QuadNum& QuadNum::operator*=(const QuadNum& o) {
    Rat na = a * o.a + 3 * b * o.b;
    Rat nb = a * o.b + b * o.a;
    a = na;
    b = nb;
    return *this;
}

QuadNum operator+(QuadNum u, const QuadNum& v) { return u += v; }
QuadNum operator-(QuadNum u, const QuadNum& v) { return u -= v; }
QuadNum operator-(const QuadNum& u) { return QuadNum(-u.a, -u.b); }
QuadNum operator*(const QuadNum& u, const QuadNum& v) {
    QuadNum w = u;
    return w *= v;
}
QuadNum operator*(const Rat& c, const QuadNum& u) { return QuadNum(c * u.a, c * u.b); }
QuadNum operator*(const QuadNum& u, const Rat& c) { return c * u; }

bool operator==(const QuadNum& u, const QuadNum& v) { return u.a == v.a && u.b == v.b; }
bool operator!=(const QuadNum& u, const QuadNum& v) { return !(u == v); }

int sign(const QuadNum& u) {
    int sa = sgn(u.a);
    int sb = sgn(u.b);
    if (sa == 0 && sb == 0) return 0;
    if (sa >= 0 && sb >= 0) return 1;
    if (sa <= 0 && sb <= 0) return -1;
    // a and b of opposite sign: |a| vs |b|sqrt(3) decides, i.e. a^2 vs 3b^2.
    int c = cmp(u.a * u.a, 3 * u.b * u.b);
    assert(c != 0 && "a^2 = 3b^2 is impossible for rational a, b != 0");
    return sa > 0 ? (c > 0 ? 1 : -1) : (c > 0 ? -1 : 1);
}

int quad_cmp(const QuadNum& u, const QuadNum& v) { return sign(u - v); }

bool operator<(const QuadNum& u, const QuadNum& v) { return quad_cmp(u, v) < 0; }
bool operator<=(const QuadNum& u, const QuadNum& v) { return quad_cmp(u, v) <= 0; }
bool operator>(const QuadNum& u, const QuadNum& v) { return quad_cmp(u, v) > 0; }
bool operator>=(const QuadNum& u, const QuadNum& v) { return quad_cmp(u, v) >= 0; }

QuadNum square(const QuadNum& u) { return u * u; }

double to_double(const QuadNum& u) { return u.a.get_d() + u.b.get_d() * std::sqrt(3.0); }

std::string format_quad(const QuadNum& u) {
    if (u.is_rational()) return to_string(u.a);
    std::string s = to_string(u.a);
    if (sgn(u.b) > 0) {
        s += " + " + to_string(u.b);
    } else {
        s += " - " + to_string(Rat(-u.b));
    }
    s += "√3";
    return s;
}

QuadNum parse_quad(std::string_view s) {
    static const std::string kRadical = "√3";
    s = trim(s);
    if (s.empty()) throw std::invalid_argument("parse_quad: empty input");
    size_t rad = s.rfind(kRadical);
    if (rad == std::string_view::npos) return QuadNum(rat_from_string(s));
    if (rad + kRadical.size() != s.size())
        throw std::invalid_argument("parse_quad: √3 must be a suffix: " + std::string(s));
    std::string_view body = trim(s.substr(0, rad));
    // Split "A + B" / "A - B" at the last top-level sign; a sign is
    // top-level when it does not start the string and does not follow
    // '/', '+', or '-'.
    size_t split = std::string_view::npos;
    for (size_t i = body.size(); i-- > 1;) {
        char c = body[i];
        if (c != '+' && c != '-') continue;
        char prev = body[i - 1];
        if (prev == '/' || prev == '+' || prev == '-') continue;
        split = i;
        break;
    }
    if (split == std::string_view::npos) {
        // pure "B√3" (possibly signed); an absent coefficient means 1
        std::string_view coeff = body;
        bool neg = false;
        if (!coeff.empty() && (coeff.front() == '+' || coeff.front() == '-')) {
            neg = coeff.front() == '-';
            coeff = trim(coeff.substr(1));
        }
        Rat b = coeff.empty() ? Rat(1) : rat_from_string(coeff);
        return QuadNum(Rat(0), neg ? Rat(-b) : b);
    }
    Rat a = rat_from_string(body.substr(0, split));
    std::string_view coeff = trim(body.substr(split + 1));
    Rat b = coeff.empty() ? Rat(1) : rat_from_string(coeff);
    if (body[split] == '-') b = -b;
    return QuadNum(a, b);
}

std::string to_decimal(const QuadNum& u, int digits) {
    if (digits < 0) throw std::invalid_argument("to_decimal: negative digit count");
    int s = sign(u);
    if (s < 0) return "-" + to_decimal(-u, digits);

    // Integer enclosure [L, U] of u * 10^(digits+3); U - L <= 2, so
    // rounding the midpoint leaves an error under one unit in the last
    // requested digit.
    Int M;
    mpz_ui_pow_ui(M.get_mpz_t(), 10, static_cast<unsigned long>(digits) + 3);
    Rat aM = u.a * M;
    Int L = rat_floor(aM);
    Int U = -rat_floor(Rat(-aM));
    if (sgn(u.b) != 0) {
        Rat q = 3 * u.b * u.b * M * M;
        Int r = isqrt(rat_floor(q));  // r <= sqrt(q) < r + 1
        if (sgn(u.b) > 0) {
            L += r;
            U += r + 1;
        } else {
            L -= r + 1;
            U -= r;
        }
    }
    Int n;  // round((L+U)/2 / 1000)
    mpz_fdiv_q_ui(n.get_mpz_t(), Int(L + U + 1000).get_mpz_t(), 2000);
    if (digits == 0) return n.get_str();
    Int D;
    mpz_ui_pow_ui(D.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    Int whole, fracpart;
    mpz_fdiv_qr(whole.get_mpz_t(), fracpart.get_mpz_t(), n.get_mpz_t(), D.get_mpz_t());
    std::string f = fracpart.get_str();
    return whole.get_str() + "." + std::string(static_cast<size_t>(digits) - f.size(), '0') + f;
}

// ---- enclosures ----

Rat sqrt_lower(const Rat& q, const Int& scale) {
    if (sgn(q) < 0) throw std::domain_error("sqrt_lower: negative argument");
    Int s = isqrt(rat_floor(q * scale * scale));
    return frac(s, scale);
}

Rat sqrt_upper(const Rat& q, const Int& scale) {
    if (sgn(q) < 0) throw std::domain_error("sqrt_upper: negative argument");
    // s = isqrt(floor(q M^2)) gives (s+1)^2 >= floor(q M^2) + 1 > q M^2
    Int s = isqrt(rat_floor(q * scale * scale));
    return frac(s + 1, scale);
}

Rat quad_lower(const QuadNum& u, const Int& scale) {
    if (u.is_rational()) return u.a;
    Rat q = 3 * u.b * u.b;
    if (sgn(u.b) > 0) return u.a + sqrt_lower(q, scale);
    return u.a - sqrt_upper(q, scale);
}

Rat quad_upper(const QuadNum& u, const Int& scale) {
    if (u.is_rational()) return u.a;
    Rat q = 3 * u.b * u.b;
    if (sgn(u.b) > 0) return u.a + sqrt_upper(q, scale);
    return u.a - sqrt_lower(q, scale);
}

// ---- PointQ ----

PointQ operator+(const PointQ& p, const PointQ& q) { return {p.x + q.x, p.y + q.y}; }
PointQ operator-(const PointQ& p, const PointQ& q) { return {p.x - q.x, p.y - q.y}; }
PointQ operator*(const Rat& c, const PointQ& p) { return {c * p.x, c * p.y}; }
bool operator==(const PointQ& p, const PointQ& q) { return p.x == q.x && p.y == q.y; }
bool operator!=(const PointQ& p, const PointQ& q) { return !(p == q); }

QuadNum sqdist(const PointQ& p, const PointQ& q) {
    QuadNum dx = p.x - q.x;
    QuadNum dy = p.y - q.y;
    return dx * dx + dy * dy;
}

QuadNum sqnorm(const PointQ& p) { return p.x * p.x + p.y * p.y; }

bool lex_less(const PointQ& p, const PointQ& q) {
    int c = quad_cmp(p.x, q.x);
    if (c != 0) return c < 0;
    return quad_cmp(p.y, q.y) < 0;
}

}  // namespace rquant
