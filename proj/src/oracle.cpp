#include "rquant/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "rquant/parallel.hpp"
#include "rquant/rng.hpp"

namespace rquant {

namespace {

// sqrt(d_far) > sqrt(d_near) + rho with rho = sqrt(rho_sq) >= 0,
// decided exactly: with L = d_far - d_near - rho^2 the inequality is
// equivalent to L > 0 and L^2 > 4 rho^2 d_near.
bool sqrt_gap_exceeds(const QuadNum& d_far, const QuadNum& d_near, const Rat& rho_sq) {
    QuadNum L = d_far - d_near - QuadNum(rho_sq);
    if (sign(L) <= 0) return false;
    return sign(L * L - (4 * rho_sq) * d_near) > 0;
}

}  // namespace

DistortionEnclosure distortion_enclosure(const std::vector<PointQ>& points, const Rat& eps,
                                         int max_depth, bool require_exact) {
    if (points.empty()) throw std::invalid_argument("distortion_enclosure: empty point set");
    if (sgn(eps) < 0) throw std::invalid_argument("distortion_enclosure: negative eps");
    if (max_depth < 0 || max_depth > 30)
        throw std::invalid_argument("distortion_enclosure: max_depth out of [0, 30]");
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j])
                throw std::invalid_argument("distortion_enclosure: duplicate points");

    // Outward-rounding scale for the rational bounds; its error
    // (~1e-30 per cell) is far below any eps in use.
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, 30);

    const Rat sixth = frac(1, 6);
    const PointQ mean = measure_mean();
    const std::array<PointQ, 3> trans{standard_map(1).translation, standard_map(2).translation,
                                      standard_map(3).translation};

    // Cells are tracked by the translation part of their composed map:
    // S_w(x) = 3^-k x + t, so the centroid is 3^-k * mean + t and a
    // child under symbol c has translation 3^-k * t_c + t.  Carrying t
    // down the tree keeps the per-cell work constant instead of
    // rescanning the word.
    std::vector<PointQ> work{PointQ{QuadNum(Rat(0)), QuadNum(Rat(0))}};
    std::vector<PointQ> ambiguous_t;
    std::vector<QuadNum> ambiguous_d;

    // Certified mass, split into the per-level scatter constant and the
    // accumulated measure-weighted squared offsets.
    Rat certified_scatter(0);
    QuadNum certified_offsets{Rat(0)};
    DistortionEnclosure out;

    for (int k = 0;; ++k) {
        out.depth_used = k;
        // Within a cell of depth k every point lies within the
        // circumradius r_k = 3^-(k+1) sqrt(3) of the centroid, so a
        // candidate owns the whole cell once its centroid gap beats
        // 2 r_k; (2 r_k)^2 = 4 * 3^-(2k+1).
        Rat cell_measure = pow3q(-k);
        Rat rk_sq = cell_measure * cell_measure * frac(1, 3);
        Rat two_rk_sq = 4 * rk_sq;
        Rat scatter = cell_measure * cell_measure * sixth;  // 9^-k * variance
        Rat cell_scatter = cell_measure * scatter;

        ambiguous_t.clear();
        ambiguous_d.clear();
        for (const PointQ& t : work) {
            PointQ c = cell_measure * mean + t;
            size_t best = 0;
            QuadNum dbest = sqdist(c, points[0]);
            bool tie = false;
            for (size_t j = 1; j < points.size(); ++j) {
                QuadNum d = sqdist(c, points[j]);
                int cmp = quad_cmp(d, dbest);
                if (cmp < 0) {
                    dbest = d;
                    best = j;
                    tie = false;
                } else if (cmp == 0) {
                    tie = true;
                }
            }
            bool owned = !tie;
            if (owned) {
                for (size_t j = 0; j < points.size() && owned; ++j) {
                    if (j == best) continue;
                    owned = sqrt_gap_exceeds(sqdist(c, points[j]), dbest, two_rk_sq);
                }
            }
            if (owned) {
                // Exact cell integral: 3^-k (9^-k / 6 + ||a(w) - p||^2).
                certified_scatter += cell_scatter;
                certified_offsets += dbest * cell_measure;
            } else {
                ambiguous_t.push_back(t);
                ambiguous_d.push_back(dbest);
            }
        }

        QuadNum exact_total = QuadNum(certified_scatter) + certified_offsets;
        if (ambiguous_t.empty()) {
            out.exact = true;
            out.value = exact_total;
            if (exact_total.is_rational()) {
                out.lo = out.hi = exact_total.a;
            } else {
                out.lo = quad_lower(exact_total, scale);
                out.hi = quad_upper(exact_total, scale);
            }
            return out;
        }

        // Interval for the unresolved cells: at least the measure
        // times max(0, sqrt(dmin) - r_k)^2, at most the cost of
        // serving the whole cell with the nearest point.
        Rat lo = quad_lower(exact_total, scale);
        Rat hi = quad_upper(exact_total, scale);
        for (const QuadNum& dmin : ambiguous_d) {
            hi += cell_measure * (scatter + quad_upper(dmin, scale));
            if (quad_cmp(dmin, QuadNum(rk_sq)) > 0) {
                // (sqrt(d) - r)^2 = d + r^2 - 2 sqrt(r^2 d), bounded below
                Rat cross = sqrt_upper(quad_upper(rk_sq * dmin, scale), scale);
                Rat term = quad_lower(dmin, scale) + rk_sq - 2 * cross;
                if (sgn(term) > 0) lo += cell_measure * term;
            }
        }
        out.lo = lo;
        out.hi = hi;

        if (hi - lo <= eps || k == max_depth) {
            if (require_exact)
                throw std::runtime_error("distortion_enclosure: exactness not reached by depth " +
                                         std::to_string(k));
            return out;
        }

        std::vector<PointQ> next;
        next.reserve(ambiguous_t.size() * 3);
        for (const PointQ& t : ambiguous_t)
            for (const PointQ& tc : trans) next.push_back(cell_measure * tc + t);
        work = std::move(next);
    }
}

QuadNum surrogate_distortion(const std::vector<PointQ>& points, int depth, const Word& prefix) {
    if (points.empty()) throw std::invalid_argument("surrogate_distortion: empty point set");
    if (depth < 0 || depth > 12) throw std::invalid_argument("surrogate_distortion: depth out of range");
    check_word(prefix);
    QuadNum total{Rat(0)};
    for (const Word& t : words_of_length(depth)) {
        PointQ a = centroid(prefix + t);
        QuadNum dbest = sqdist(a, points[0]);
        for (size_t j = 1; j < points.size(); ++j) {
            QuadNum d = sqdist(a, points[j]);
            if (quad_cmp(d, dbest) < 0) dbest = d;
        }
        total += dbest;
    }
    return pow3q(-static_cast<long>(prefix.size() + static_cast<size_t>(depth))) * total;
}

McResult mc_distortion(const std::vector<PointQ>& points, size_t samples, int depth,
                       uint64_t seed) {
    if (points.empty()) throw std::invalid_argument("mc_distortion: empty point set");
    if (samples == 0) throw std::invalid_argument("mc_distortion: zero samples");
    std::vector<std::array<double, 2>> pts(points.size());
    for (size_t j = 0; j < points.size(); ++j)
        pts[j] = {to_double(points[j].x), to_double(points[j].y)};

    auto draws = chaos_sample(standard_ifs(), samples, depth, seed);
    double sum = 0, sumsq = 0;
    for (const auto& s : draws) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& p : pts) {
            double dx = s[0] - p[0], dy = s[1] - p[1];
            double d = dx * dx + dy * dy;
            if (d < best) best = d;
        }
        sum += best;
        sumsq += best * best;
    }
    double n = static_cast<double>(samples);
    double mean = sum / n;
    double var = samples > 1 ? std::max(0.0, (sumsq - n * mean * mean) / (n - 1)) : 0.0;
    return {mean, std::sqrt(var / n), samples};
}

AtomCloud atom_cloud(const GeneralIfs& ifs, int depth) {
    if (depth < 0 || depth > 12) throw std::invalid_argument("atom_cloud: depth out of range");
    struct MapD {
        double r, tx, ty;
    };
    std::array<MapD, 3> maps;
    std::array<double, 3> probs;
    for (int i = 0; i < 3; ++i) {
        Similarity s = ifs.map(i + 1);
        maps[static_cast<size_t>(i)] = {to_double(s.ratio), to_double(s.translation.x),
                                        to_double(s.translation.y)};
        probs[static_cast<size_t>(i)] = to_double(ifs.probs[static_cast<size_t>(i)]);
    }
    Moments mom = moments(ifs);
    double cx = to_double(mom.mean.x), cy = to_double(mom.mean.y);

    size_t count = 1;
    for (int d = 0; d < depth; ++d) count *= 3;
    AtomCloud cloud;
    cloud.depth = depth;
    cloud.pos.reserve(count);
    cloud.weight.reserve(count);

    // Depth-first over words, composing x -> s*x + t on the way down.
    struct Frame {
        double s, tx, ty, w;
        int level;
    };
    std::vector<Frame> stack{{1.0, 0.0, 0.0, 1.0, 0}};
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        if (f.level == depth) {
            cloud.pos.push_back({f.s * cx + f.tx, f.s * cy + f.ty});
            cloud.weight.push_back(f.w);
            continue;
        }
        for (int i = 2; i >= 0; --i) {  // reversed push => lexicographic pop order
            const MapD& m = maps[static_cast<size_t>(i)];
            stack.push_back({f.s * m.r, f.s * m.tx + f.tx, f.s * m.ty + f.ty,
                             f.w * probs[static_cast<size_t>(i)], f.level + 1});
        }
    }
    return cloud;
}

namespace {

double assign_atoms(const AtomCloud& cloud, const std::vector<std::array<double, 2>>& centers,
                    std::vector<size_t>& owner, std::vector<double>& contrib) {
    double total = 0;
    for (size_t i = 0; i < cloud.pos.size(); ++i) {
        double best = std::numeric_limits<double>::infinity();
        size_t arg = 0;
        for (size_t c = 0; c < centers.size(); ++c) {
            double dx = cloud.pos[i][0] - centers[c][0];
            double dy = cloud.pos[i][1] - centers[c][1];
            double d = dx * dx + dy * dy;
            if (d < best) {
                best = d;
                arg = c;
            }
        }
        owner[i] = arg;
        contrib[i] = cloud.weight[i] * best;
        total += contrib[i];
    }
    return total;
}

LloydState lloyd_on_cloud(const GeneralIfs& ifs, const AtomCloud& cloud,
                          const std::vector<std::array<double, 2>>& init, int max_iters,
                          double tol) {
    LloydState st;
    st.centers = init;
    size_t n = init.size();
    std::vector<size_t> owner(cloud.pos.size());
    std::vector<double> contrib(cloud.pos.size());
    double prev = std::numeric_limits<double>::infinity();

    for (int it = 0; it < max_iters; ++it) {
        double dist = assign_atoms(cloud, st.centers, owner, contrib);

        // Repair empty clusters before the centroid step: parking an
        // unused center on the worst-served atom can only lower the
        // distortion.
        std::vector<size_t> load(n, 0);
        for (size_t i = 0; i < owner.size(); ++i) ++load[owner[i]];
        bool repaired = false;
        for (size_t c = 0; c < n; ++c) {
            if (load[c] != 0) continue;
            size_t worst = static_cast<size_t>(
                std::max_element(contrib.begin(), contrib.end()) - contrib.begin());
            st.centers[c] = cloud.pos[worst];
            contrib[worst] = 0;  // the next empty cluster picks a different atom
            repaired = true;
        }
        if (repaired) dist = assign_atoms(cloud, st.centers, owner, contrib);

        st.history.push_back(dist);
        st.iterations = it + 1;
        st.surrogate = dist;

        std::vector<double> sx(n, 0), sy(n, 0), sw(n, 0);
        for (size_t i = 0; i < owner.size(); ++i) {
            sx[owner[i]] += cloud.weight[i] * cloud.pos[i][0];
            sy[owner[i]] += cloud.weight[i] * cloud.pos[i][1];
            sw[owner[i]] += cloud.weight[i];
        }
        for (size_t c = 0; c < n; ++c) {
            if (sw[c] > 0) st.centers[c] = {sx[c] / sw[c], sy[c] / sw[c]};
        }

        if (std::abs(prev - dist) <= tol * std::max(dist, 1e-300)) {
            st.converged = true;
            break;
        }
        prev = dist;
    }

    // The loop's last centroid update may still improve things.
    double final_dist = assign_atoms(cloud, st.centers, owner, contrib);
    if (final_dist < st.surrogate) {
        st.history.push_back(final_dist);
        st.surrogate = final_dist;
    }

    // Single ownership: every depth-level cell must be won by one
    // center with a margin beating the cell diameter.  Cells sit
    // inside a ball of radius contraction-scale times the frame
    // diameter around their centroid atom.
    double max_ratio = 0;
    for (int i = 0; i < 3; ++i)
        max_ratio = std::max(max_ratio, to_double(ifs.ratios[static_cast<size_t>(i)]));
    double frame_diam = ifs.family == Family::S ? 1.0 : std::sqrt(2.0);
    double radius = std::pow(max_ratio, cloud.depth) * frame_diam;
    st.single_owner = true;
    for (size_t i = 0; i < cloud.pos.size() && st.single_owner; ++i) {
        double d1 = std::numeric_limits<double>::infinity(), d2 = d1;
        for (size_t c = 0; c < st.centers.size(); ++c) {
            double dx = cloud.pos[i][0] - st.centers[c][0];
            double dy = cloud.pos[i][1] - st.centers[c][1];
            double d = std::sqrt(dx * dx + dy * dy);
            if (d < d1) {
                d2 = d1;
                d1 = d;
            } else if (d < d2) {
                d2 = d;
            }
        }
        if (st.centers.size() > 1 && !(d2 - d1 > 2 * radius + 1e-12)) st.single_owner = false;
    }

    // Residual within-cell variance: V * (sum p_i r_i^2)^depth, exact.
    Moments mom = moments(ifs);
    Rat res(0);
    for (int i = 0; i < 3; ++i)
        res += ifs.probs[static_cast<size_t>(i)] * ifs.ratios[static_cast<size_t>(i)] *
               ifs.ratios[static_cast<size_t>(i)];
    st.corrected = st.surrogate + to_double(mom.variance * rat_pow(res, cloud.depth));
    return st;
}

}  // namespace

LloydState lloyd(const GeneralIfs& ifs, const std::vector<std::array<double, 2>>& init, int depth,
                 int max_iters, double tol) {
    if (init.empty()) throw std::invalid_argument("lloyd: empty initial set");
    if (max_iters < 1) throw std::invalid_argument("lloyd: max_iters must be >= 1");
    return lloyd_on_cloud(ifs, atom_cloud(ifs, depth), init, max_iters, tol);
}

LloydState kmeans_best_of(const GeneralIfs& ifs, int n, int restarts, int depth, uint64_t seed) {
    if (n < 1) throw std::invalid_argument("kmeans_best_of: n must be >= 1");
    if (restarts < 1) throw std::invalid_argument("kmeans_best_of: restarts must be >= 1");
    AtomCloud cloud = atom_cloud(ifs, depth);
    size_t atoms = cloud.pos.size();
    constexpr uint64_t kSeedTask = 0x4b4d5050ULL;  // restart seeding streams

    std::vector<LloydState> results(static_cast<size_t>(restarts));
    parallel_for(static_cast<size_t>(restarts), [&](size_t r) {
        Rng rng(seed, kSeedTask, r);
        std::vector<std::array<double, 2>> init;
        init.reserve(static_cast<size_t>(n));
        std::vector<double> d2(atoms, std::numeric_limits<double>::infinity());
        size_t first = static_cast<size_t>(rng.next_below(atoms));
        init.push_back(cloud.pos[first]);
        for (int c = 1; c < n; ++c) {
            double total = 0;
            for (size_t i = 0; i < atoms; ++i) {
                double dx = cloud.pos[i][0] - init.back()[0];
                double dy = cloud.pos[i][1] - init.back()[1];
                d2[i] = std::min(d2[i], dx * dx + dy * dy);
                total += cloud.weight[i] * d2[i];
            }
            double u = rng.next_double() * total;
            size_t choice = atoms - 1;
            double acc = 0;
            for (size_t i = 0; i < atoms; ++i) {
                acc += cloud.weight[i] * d2[i];
                if (u < acc) {
                    choice = i;
                    break;
                }
            }
            init.push_back(cloud.pos[choice]);
        }
        results[r] = lloyd_on_cloud(ifs, cloud, init, 200, 1e-12);
    });

    size_t best = 0;
    for (size_t r = 1; r < results.size(); ++r)
        if (results[r].surrogate < results[best].surrogate) best = r;
    return results[best];
}

}  // namespace rquant
