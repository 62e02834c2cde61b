#pragma once

// Optimal quantizers for the standard measure.
//
// With l = ell(n) the largest power with 3^l <= n, every optimal
// n-point set refines the 3^l cell centroids: each marked cell trades
// its centroid for a scaled two-point pattern (one extra point) or,
// past n = 2*3^l, for its three child centroids.  The exact n-th
// quantization error is
//     V_n = (1/2) 27^-(l+1) (13 * 3^l - 4n),
// and the number of distinct optimal sets is a binomial count times a
// power of 3 (three choices of two-point pattern per refined cell).

#include "rquant/algebra.hpp"
#include "rquant/measure.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

namespace rquant {

// Largest l with 3^l <= n.  Requires n >= 1.
int ell(long long n);

enum class Regime : uint8_t {
    A,  // n = 3^l: the cell centroids, uniquely
    B,  // 3^l < n <= 2*3^l: n - 3^l cells carry a two-point pattern
    C,  // 2*3^l < n < 3^(l+1): n - 2*3^l cells carry their three child
        // centroids, the rest a two-point pattern
};

Regime regime(long long n);

// A two-point optimal set sits on one of the triangle's three
// medians: the centroid of one corner cell paired with the
// conditional centroid of the other two.  Named by the vertex whose
// median carries the pair.
enum class Alpha2Variant : uint8_t {
    topMedian,    // { centroid over cells 1,2 ; centroid of cell 3 }
    leftMedian,   // { centroid of cell 1 ; centroid over cells 2,3 }
    rightMedian,  // { centroid of cell 2 ; centroid over cells 1,3 }
};

std::string_view variant_name(Alpha2Variant v);
std::optional<Alpha2Variant> variant_from_name(std::string_view name);

// The two-point set for a variant, lexicographically ordered.
std::array<PointQ, 2> alpha2(Alpha2Variant v);

// The unique three-point optimal set: the three cell centroids.
std::array<PointQ, 3> alpha3();

// A concrete optimal set: which depth-l cells are refined (J) and
// which two-point variant each variant-bearing cell uses.  In regime
// B the cells of J carry the two-point pattern and the variant map is
// keyed by J; in regime C the cells of J carry three child centroids
// and the variant map is keyed by the complement.  Regime A has no
// choices at all.
struct OptimalSetSpec {
    long long n = 0;
    int level = 0;
    Regime reg = Regime::A;
    std::vector<Word> J;  // sorted, each of length `level`
    std::map<Word, Alpha2Variant> variants;
};

// Throws std::invalid_argument if the spec is malformed (wrong sizes,
// wrong word length, variant keys not matching the regime's rule).
void validate_spec(const OptimalSetSpec& spec);

// The lexicographically first spec: J is the first admissible words,
// every variant topMedian.
OptimalSetSpec canonical_spec(long long n);

// Materializes the point set of a spec: exactly n distinct points,
// lexicographically sorted.
std::vector<PointQ> optimal_set(const OptimalSetSpec& spec);

// V_n, exact.  Defined for all n >= 1 (V_1 = 1/6, V_2 = 5/54).
Rat quantization_error(long long n);

// Number of distinct optimal n-point sets.
Int count_optimal_sets(long long n);

// Streams every optimal-set spec for n in a fixed deterministic
// order: subsets J in lexicographic combination order, variant
// assignments counting in base 3 (topMedian < leftMedian <
// rightMedian, last cell fastest).  The first spec is canonical_spec(n).
class OptimalSetEnumerator {
public:
    explicit OptimalSetEnumerator(long long n);

    std::optional<OptimalSetSpec> next();

private:
    long long n_;
    int level_;
    Regime reg_;
    size_t pick_;                // |J|
    std::vector<Word> base_;     // all depth-level words
    std::vector<size_t> comb_;   // current J as indices into base_
    std::vector<int> digits_;    // current variant assignment
    bool done_ = false;

    OptimalSetSpec current() const;
    bool advance();
};

// The first min(count, cap) specs in enumeration order.
std::vector<OptimalSetSpec> enumerate_optimal_sets(long long n, size_t cap);

}  // namespace rquant
