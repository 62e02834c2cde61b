#pragma once

// The self-similar measure on the R-triangle.
//
// Three contractions with ratio 1/3 map the triangle with vertices
// (0,0), (1,0), (1/2, sqrt(3)/2) onto its two base corners and its
// top middle; the invariant measure splits mass (1/3, 1/3, 1/3)
// across the three images.  Words over {1,2,3} address the cells of
// the construction; a word of length k addresses a cell of measure
// 3^-k.  Everything here (moments, centroids, per-cell distortion) is
// computed exactly in Q(sqrt 3).

#include "rquant/algebra.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace rquant {

// A word is a string over '1', '2', '3'; the empty word addresses the
// whole triangle.  Lexicographic string order is the canonical order.
using Word = std::string;

bool is_valid_word(const Word& w);

// Throws std::invalid_argument if w contains symbols outside {1,2,3}.
void check_word(const Word& w);

// All 3^k words of length k, lexicographically ordered.
std::vector<Word> words_of_length(int k);

struct Similarity {
    Rat ratio;
    PointQ translation;

    PointQ operator()(const PointQ& p) const;
};

enum class Family : uint8_t {
    S,  // equilateral frame: vertices (0,0), (1,0), (1/2, sqrt(3)/2)
    T,  // right-angle frame: vertices (0,0), (1,0), (0,1)
};

// Contraction ratios r_i in (0, 1/2) and a probability vector; the
// i-th map is x -> r_i x + (1 - r_i) v_i with v_i the i-th frame
// vertex, so each map fixes its vertex.  The standard measure is
// ratios (1/3, 1/3, 1/3), probs (1/3, 1/3, 1/3) on the S frame.
struct GeneralIfs {
    std::array<Rat, 3> ratios;
    std::array<Rat, 3> probs;
    Family family = Family::S;

    PointQ vertex(int i) const;    // i in 1..3
    Similarity map(int i) const;   // i in 1..3
    bool is_standard() const;
};

// Validates ratios and probs (probabilities may be zero to allow
// degenerate point masses, but must be nonnegative and sum to 1).
// Throws std::invalid_argument on violation.
GeneralIfs make_ifs(const std::array<Rat, 3>& ratios, const std::array<Rat, 3>& probs,
                    Family family);

GeneralIfs standard_ifs();

// Standard-construction pieces.
PointQ triangle_vertex(int i);  // i in 1..3
Similarity standard_map(int i);
PointQ apply_map(int i, const PointQ& p);

// S_w = S_{w1} o ... o S_{wk} applied to p.
PointQ apply_word(const Word& w, const PointQ& p);

struct Cell {
    Word word;
    std::array<PointQ, 3> vertices;
    Rat measure;  // 3^-|word|
};

Cell cell(const Word& w);

// Mean (1/2, sqrt(3)/6) and total variance E||X - mean||^2 = 1/6 of
// the standard measure.
PointQ measure_mean();
Rat measure_variance();

struct Moments {
    PointQ mean;
    Rat second_moment;  // E ||X||^2
    Rat variance;       // E ||X - mean||^2
    Rat variance_x;
    Rat variance_y;
};

// Exact moments of the invariant measure of an arbitrary admissible
// construction, from the closed-form fixed-point equations.
Moments moments(const GeneralIfs& ifs);

// Centroid a(w) of the cell addressed by w: the conditional mean of
// the measure on that cell, equal to S_w(mean).
PointQ centroid(const Word& w);

// Conditional mean over a union of pairwise disjoint cells
// (mass-weighted mix of their centroids).  Throws
// std::invalid_argument if any word is a prefix of another.
PointQ conditional_centroid(const std::vector<Word>& words);

// Exact integral of ||x - p||^2 over the cell of w:
//   3^-k * (9^-k * 1/6 + ||a(w) - p||^2),   k = |w|.
QuadNum cell_distortion(const Word& w, const PointQ& p);

// `count` independent draws of S_w(mean) with w a random word of the
// given depth (symbols drawn with the construction's probabilities).
// Sample i depends only on (seed, i), never on evaluation order.
std::vector<std::array<double, 2>> chaos_sample(const GeneralIfs& ifs, size_t count, int depth,
                                                uint64_t seed);

}  // namespace rquant
