#include "rquant/measure.hpp"

#include <algorithm>
#include <stdexcept>

#include "rquant/rng.hpp"

namespace rquant {

bool is_valid_word(const Word& w) {
    for (char c : w)
        if (c < '1' || c > '3') return false;
    return true;
}

void check_word(const Word& w) {
    if (!is_valid_word(w)) throw std::invalid_argument("invalid word: \"" + w + "\"");
}

std::vector<Word> words_of_length(int k) {
    if (k < 0 || k > 20) throw std::invalid_argument("words_of_length: length out of range");
    std::vector<Word> out{Word()};
    for (int d = 0; d < k; ++d) {
        std::vector<Word> next;
        next.reserve(out.size() * 3);
        for (const Word& w : out)
            for (char c = '1'; c <= '3'; ++c) next.push_back(w + c);
        out = std::move(next);
    }
    return out;
}

PointQ Similarity::operator()(const PointQ& p) const { return ratio * p + translation; }

PointQ GeneralIfs::vertex(int i) const {
    if (i < 1 || i > 3) throw std::invalid_argument("vertex index out of range");
    if (family == Family::S) return triangle_vertex(i);
    switch (i) {
        case 1: return {QuadNum(Rat(0)), QuadNum(Rat(0))};
        case 2: return {QuadNum(Rat(1)), QuadNum(Rat(0))};
        default: return {QuadNum(Rat(0)), QuadNum(Rat(1))};
    }
}

Similarity GeneralIfs::map(int i) const {
    if (i < 1 || i > 3) throw std::invalid_argument("map index out of range");
    const Rat& r = ratios[static_cast<size_t>(i - 1)];
    Rat c = 1 - r;
    return Similarity{r, c * vertex(i)};
}

bool GeneralIfs::is_standard() const {
    Rat third = frac(1, 3);
    for (int i = 0; i < 3; ++i)
        if (ratios[static_cast<size_t>(i)] != third || probs[static_cast<size_t>(i)] != third)
            return false;
    return family == Family::S;
}

GeneralIfs make_ifs(const std::array<Rat, 3>& ratios, const std::array<Rat, 3>& probs,
                    Family family) {
    Rat half = frac(1, 2);
    Rat total(0);
    for (int i = 0; i < 3; ++i) {
        const Rat& r = ratios[static_cast<size_t>(i)];
        if (sgn(r) <= 0 || r >= half)
            throw std::invalid_argument("make_ifs: ratios must lie in (0, 1/2)");
        const Rat& p = probs[static_cast<size_t>(i)];
        if (sgn(p) < 0) throw std::invalid_argument("make_ifs: negative probability");
        total += p;
    }
    if (total != 1) throw std::invalid_argument("make_ifs: probabilities must sum to 1");
    return GeneralIfs{ratios, probs, family};
}

GeneralIfs standard_ifs() {
    Rat third = frac(1, 3);
    return GeneralIfs{{third, third, third}, {third, third, third}, Family::S};
}

PointQ triangle_vertex(int i) {
    switch (i) {
        case 1: return {QuadNum(Rat(0)), QuadNum(Rat(0))};
        case 2: return {QuadNum(Rat(1)), QuadNum(Rat(0))};
        case 3: return {QuadNum(frac(1, 2)), QuadNum(Rat(0), frac(1, 2))};
        default: throw std::invalid_argument("triangle_vertex: index out of range");
    }
}

Similarity standard_map(int i) {
    switch (i) {
        case 1: return {frac(1, 3), {QuadNum(Rat(0)), QuadNum(Rat(0))}};
        case 2: return {frac(1, 3), {QuadNum(frac(2, 3)), QuadNum(Rat(0))}};
        case 3: return {frac(1, 3), {QuadNum(frac(1, 3)), QuadNum(Rat(0), frac(1, 3))}};
        default: throw std::invalid_argument("standard_map: index out of range");
    }
}

PointQ apply_map(int i, const PointQ& p) { return standard_map(i)(p); }

PointQ apply_word(const Word& w, const PointQ& p) {
    check_word(w);
    PointQ q = p;
    for (auto it = w.rbegin(); it != w.rend(); ++it) q = apply_map(*it - '0', q);
    return q;
}

Cell cell(const Word& w) {
    check_word(w);
    Cell c;
    c.word = w;
    for (int i = 1; i <= 3; ++i)
        c.vertices[static_cast<size_t>(i - 1)] = apply_word(w, triangle_vertex(i));
    c.measure = pow3q(-static_cast<long>(w.size()));
    return c;
}

PointQ measure_mean() { return {QuadNum(frac(1, 2)), QuadNum(Rat(0), frac(1, 6))}; }

Rat measure_variance() { return frac(1, 6); }

namespace {

QuadNum dot(const PointQ& p, const PointQ& q) { return p.x * q.x + p.y * q.y; }

Rat require_rational(const QuadNum& u, const char* what) {
    if (!u.is_rational()) throw std::logic_error(std::string(what) + ": irrational residue");
    return u.a;
}

}  // namespace

Moments moments(const GeneralIfs& ifs) {
    // E X = sum p_i (r_i E X + t_i)          =>  E X = sum p_i t_i / (1 - sum p_i r_i)
    // E|X|^2 = sum p_i E|r_i X + t_i|^2      =>  E|X|^2 (1 - sum p_i r_i^2)
    //                                            = sum p_i (2 r_i t_i . EX + |t_i|^2)
    // and likewise per coordinate.
    Rat sum_pr(0), sum_pr2(0);
    PointQ sum_pt{QuadNum(Rat(0)), QuadNum(Rat(0))};
    std::array<Similarity, 3> maps{ifs.map(1), ifs.map(2), ifs.map(3)};
    for (int i = 0; i < 3; ++i) {
        const Rat& p = ifs.probs[static_cast<size_t>(i)];
        const Rat& r = ifs.ratios[static_cast<size_t>(i)];
        sum_pr += p * r;
        sum_pr2 += p * r * r;
        sum_pt = sum_pt + p * maps[static_cast<size_t>(i)].translation;
    }
    Rat mean_scale = 1 / Rat(1 - sum_pr);
    PointQ mean = mean_scale * sum_pt;

    QuadNum m2_rhs(Rat(0)), mx_rhs(Rat(0)), my_rhs(Rat(0));
    for (int i = 0; i < 3; ++i) {
        const Rat& p = ifs.probs[static_cast<size_t>(i)];
        const Rat& r = ifs.ratios[static_cast<size_t>(i)];
        const PointQ& t = maps[static_cast<size_t>(i)].translation;
        Rat two_pr = 2 * p * r;
        m2_rhs += two_pr * dot(t, mean) + p * sqnorm(t);
        mx_rhs += two_pr * (t.x * mean.x) + p * (t.x * t.x);
        my_rhs += two_pr * (t.y * mean.y) + p * (t.y * t.y);
    }
    Rat m2_scale = 1 / Rat(1 - sum_pr2);

    Moments m;
    m.mean = mean;
    m.second_moment = require_rational(m2_scale * m2_rhs, "moments: E|X|^2");
    m.variance = m.second_moment - require_rational(sqnorm(mean), "moments: |EX|^2");
    Rat ex2 = require_rational(m2_scale * mx_rhs, "moments: E X1^2");
    Rat ey2 = require_rational(m2_scale * my_rhs, "moments: E X2^2");
    m.variance_x = ex2 - require_rational(square(mean.x), "moments: (E X1)^2");
    m.variance_y = ey2 - require_rational(square(mean.y), "moments: (E X2)^2");
    return m;
}

PointQ centroid(const Word& w) { return apply_word(w, measure_mean()); }

PointQ conditional_centroid(const std::vector<Word>& words) {
    if (words.empty()) throw std::invalid_argument("conditional_centroid: no cells");
    for (const Word& w : words) check_word(w);
    // In lexicographic order every extension of a word follows it
    // immediately-contiguously, so prefix overlap shows up between
    // sorted neighbours.
    std::vector<Word> sorted = words;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i + 1 < sorted.size(); ++i) {
        const Word& a = sorted[i];
        const Word& b = sorted[i + 1];
        if (a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin()))
            throw std::invalid_argument("conditional_centroid: cells overlap (\"" + a +
                                        "\" contains \"" + b + "\")");
    }
    PointQ total{QuadNum(Rat(0)), QuadNum(Rat(0))};
    Rat mass(0);
    for (const Word& w : words) {
        Rat mu = pow3q(-static_cast<long>(w.size()));
        total = total + mu * centroid(w);
        mass += mu;
    }
    return (1 / mass) * total;
}

QuadNum cell_distortion(const Word& w, const PointQ& p) {
    long k = static_cast<long>(w.size());
    QuadNum inner = QuadNum(pow3q(-2 * k) * frac(1, 6)) + sqdist(centroid(w), p);
    return pow3q(-k) * inner;
}

std::vector<std::array<double, 2>> chaos_sample(const GeneralIfs& ifs, size_t count, int depth,
                                                uint64_t seed) {
    if (depth < 0) throw std::invalid_argument("chaos_sample: negative depth");
    struct MapD {
        double r, tx, ty;
    };
    std::array<MapD, 3> maps;
    for (int i = 0; i < 3; ++i) {
        Similarity s = ifs.map(i + 1);
        maps[static_cast<size_t>(i)] = {to_double(s.ratio), to_double(s.translation.x),
                                        to_double(s.translation.y)};
    }
    Moments mom = moments(ifs);
    double cx = to_double(mom.mean.x);
    double cy = to_double(mom.mean.y);

    bool uniform = ifs.probs[0] == ifs.probs[1] && ifs.probs[1] == ifs.probs[2];
    double p0 = to_double(ifs.probs[0]);
    double p01 = p0 + to_double(ifs.probs[1]);

    constexpr uint64_t kChaosTask = 0x43484153ULL;  // task tag for sample streams
    std::vector<std::array<double, 2>> out(count);
    for (size_t i = 0; i < count; ++i) {
        Rng rng(seed, kChaosTask, i);
        double x = cx, y = cy;
        for (int d = 0; d < depth; ++d) {
            size_t j;
            if (uniform) {
                j = rng.next_below(3);  // rejection sampling: exactly uniform
            } else {
                double u = rng.next_double();
                j = u < p0 ? 0 : (u < p01 ? 1 : 2);
            }
            const MapD& m = maps[j];
            x = m.r * x + m.tx;
            y = m.r * y + m.ty;
        }
        out[i] = {x, y};
    }
    return out;
}

}  // namespace rquant
