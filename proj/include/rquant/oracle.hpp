#pragma once

// Independent checks of quantizer quality.
//
// distortion_enclosure brackets the true distortion of an arbitrary
// point set between certified rational bounds by adaptive cell
// subdivision, resolving Voronoi ownership with exact Q(sqrt 3)
// predicates; when every cell is certified single-owner the result is
// the exact distortion.  mc_distortion estimates the same integral
// stochastically, and lloyd/kmeans_best_of search for good sets on a
// fixed-depth atomic surrogate of the measure.

#include "rquant/algebra.hpp"
#include "rquant/measure.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace rquant {

struct DistortionEnclosure {
    Rat lo;
    Rat hi;
    bool exact = false;  // every cell certified single-owner
    int depth_used = 0;  // deepest subdivision level examined
    // Exact distortion as an element of Q(sqrt 3) when exact; lo = hi
    // whenever this value is rational (it is for all optimal sets).
    std::optional<QuadNum> value;
};

// Certified bounds on the distortion of `points` for the standard
// measure.  Subdivision stops as soon as hi - lo <= eps or when
// max_depth is exhausted.  Requires a nonempty set of distinct
// points, eps >= 0, and 0 <= max_depth <= 30.  With require_exact,
// throws std::runtime_error if some cell is still ambiguous at the
// stopping point.
DistortionEnclosure distortion_enclosure(const std::vector<PointQ>& points, const Rat& eps,
                                         int max_depth, bool require_exact = false);

// Exact distortion of the depth-`depth` atomic surrogate: cell
// centroids under the cell prefix, weighted by cell measure,
//   sum over |t| = depth of 3^-(|prefix|+depth) min_j |a(prefix t) - p_j|^2.
QuadNum surrogate_distortion(const std::vector<PointQ>& points, int depth,
                             const Word& prefix = Word());

struct McResult {
    double estimate = 0;
    double std_error = 0;
    size_t samples = 0;
};

// Monte Carlo distortion estimate from chaos_sample draws of the
// standard measure.  Deterministic for a fixed seed.
McResult mc_distortion(const std::vector<PointQ>& points, size_t samples, int depth,
                       uint64_t seed);

// Discrete surrogate of an invariant measure: the 3^depth cell
// centroids with their cell masses, in double precision.
struct AtomCloud {
    std::vector<std::array<double, 2>> pos;
    std::vector<double> weight;
    int depth = 0;
};

AtomCloud atom_cloud(const GeneralIfs& ifs, int depth);

struct LloydState {
    std::vector<std::array<double, 2>> centers;
    double surrogate = 0;          // distortion against the atom cloud
    double corrected = 0;          // surrogate + within-cell residual
    bool single_owner = false;     // corrected is only meaningful when true
    int iterations = 0;
    bool converged = false;
    std::vector<double> history;   // surrogate after each iteration
};

// Lloyd iterations on the atom cloud from the given initial centers.
// Empty clusters are reseeded at the atom with the largest current
// distortion contribution, which keeps the recorded distortion
// sequence nonincreasing.
LloydState lloyd(const GeneralIfs& ifs, const std::vector<std::array<double, 2>>& init, int depth,
                 int max_iters, double tol);

// Best Lloyd run over `restarts` seedings.  Seeds are atoms sampled
// without replacement, weighted by current squared distance to the
// already-chosen seeds (the k-means++ rule), so restarts spread
// across the attractor's well-separated cells.  Deterministic given
// the seed; restart streams are independent, so the result does not
// depend on evaluation order.
LloydState kmeans_best_of(const GeneralIfs& ifs, int n, int restarts, int depth, uint64_t seed);

}  // namespace rquant
