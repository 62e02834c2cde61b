#pragma once

// Rate and coefficient asymptotics of the quantization errors.
//
// The errors obey 1/54 <= n^2 V_n <= 3/2 for n >= 2, so the implied
// quantization dimension is 1.  The scaled sequence n^2 V_n does not
// converge: writing n = x * 3^l with x in [1, 2], it equals
// f(x) = x^2 (13 - 4x) / 54 exactly, and every value in
// [f(1), f(2)] = [1/6, 10/27] is an accumulation point.

#include "rquant/algebra.hpp"

#include <utility>
#include <vector>

namespace rquant {

struct DimensionRecord {
    long long n = 0;
    Rat vn;
    Rat scaled;          // n^2 V_n, exact
    double dim_est = 0;  // 2 ln n / (-ln V_n)
};

double dimension_estimate(long long n);

DimensionRecord dimension_record(long long n);

// Records for n = 1..n_max.
std::vector<DimensionRecord> dimension_scan(long long n_max);

// f(x) = x^2 (13 - 4x) / 54 on its domain [1, 2].
// Throws std::domain_error outside.
Rat f_coeff(const Rat& x);

struct AccumulationRecord {
    int level = 0;
    long long n = 0;  // floor(x * 3^level)
    Rat scaled;       // n^2 V_n, exact
    Rat gap;          // |scaled - f(x)|, exact
};

// The subsequence n_l = floor(x * 3^l) for l = 1..levels; its scaled
// errors converge to f(x).  Requires x in [1, 2], levels <= 24.
std::vector<AccumulationRecord> accumulation_scan(const Rat& x, int levels);

// Closure bounds of the accumulation set of n^2 V_n: (1/6, 10/27).
std::pair<Rat, Rat> coefficient_range();

// Exact min and max of n^2 V_n over one full level 3^l <= n < 3^(l+1).
std::pair<Rat, Rat> level_extremes(int level);

}  // namespace rquant
