#include "rquant/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

#include "rquant/optimal.hpp"

namespace rquant {

double dimension_estimate(long long n) {
    if (n < 1) throw std::invalid_argument("dimension_estimate: n must be >= 1");
    if (n == 1) return 0.0;
    double vn = to_double(quantization_error(n));
    return 2.0 * std::log(static_cast<double>(n)) / -std::log(vn);
}

DimensionRecord dimension_record(long long n) {
    DimensionRecord rec;
    rec.n = n;
    rec.vn = quantization_error(n);
    rec.scaled = Rat(static_cast<long>(n)) * Rat(static_cast<long>(n)) * rec.vn;
    rec.dim_est = dimension_estimate(n);
    return rec;
}

std::vector<DimensionRecord> dimension_scan(long long n_max) {
    if (n_max < 1) throw std::invalid_argument("dimension_scan: n_max must be >= 1");
    std::vector<DimensionRecord> out;
    out.reserve(static_cast<size_t>(n_max));
    for (long long n = 1; n <= n_max; ++n) out.push_back(dimension_record(n));
    return out;
}

Rat f_coeff(const Rat& x) {
    if (x < 1 || x > 2) throw std::domain_error("f_coeff: x outside [1, 2]");
    return x * x * (13 - 4 * x) / 54;
}

std::vector<AccumulationRecord> accumulation_scan(const Rat& x, int levels) {
    if (x < 1 || x > 2) throw std::domain_error("accumulation_scan: x outside [1, 2]");
    if (levels < 1 || levels > 24)
        throw std::invalid_argument("accumulation_scan: levels out of [1, 24]");
    Rat target = f_coeff(x);
    std::vector<AccumulationRecord> out;
    out.reserve(static_cast<size_t>(levels));
    for (int l = 1; l <= levels; ++l) {
        AccumulationRecord rec;
        rec.level = l;
        Int nz = rat_floor(x * pow3(static_cast<unsigned long>(l)));
        rec.n = nz.get_si();
        rec.scaled = Rat(nz) * Rat(nz) * quantization_error(rec.n);
        Rat gap = rec.scaled - target;
        rec.gap = sgn(gap) < 0 ? Rat(-gap) : gap;
        out.push_back(rec);
    }
    return out;
}

std::pair<Rat, Rat> coefficient_range() { return {frac(1, 6), frac(10, 27)}; }

std::pair<Rat, Rat> level_extremes(int level) {
    if (level < 0 || level > 12) throw std::invalid_argument("level_extremes: level out of [0, 12]");
    long long lo_n = 1;
    for (int i = 0; i < level; ++i) lo_n *= 3;
    long long hi_n = 3 * lo_n;
    Rat mn, mx;
    for (long long n = lo_n; n < hi_n; ++n) {
        Rat s = Rat(static_cast<long>(n)) * Rat(static_cast<long>(n)) * quantization_error(n);
        if (n == lo_n) {
            mn = mx = s;
        } else {
            if (s < mn) mn = s;
            if (s > mx) mx = s;
        }
    }
    return {mn, mx};
}

}  // namespace rquant
