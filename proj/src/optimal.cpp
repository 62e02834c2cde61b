#include "rquant/optimal.hpp"

#include <algorithm>
#include <stdexcept>

namespace rquant {

int ell(long long n) {
    if (n < 1) throw std::invalid_argument("ell: n must be >= 1");
    int l = 0;
    long long p = 1;
    while (p <= n / 3) {
        p *= 3;
        ++l;
    }
    return l;
}

namespace {

long long pow3_ll(int k) {
    long long p = 1;
    for (int i = 0; i < k; ++i) p *= 3;
    return p;
}

}  // namespace

Regime regime(long long n) {
    long long p = pow3_ll(ell(n));
    if (n == p) return Regime::A;
    return n <= 2 * p ? Regime::B : Regime::C;
}

std::string_view variant_name(Alpha2Variant v) {
    switch (v) {
        case Alpha2Variant::topMedian: return "topMedian";
        case Alpha2Variant::leftMedian: return "leftMedian";
        default: return "rightMedian";
    }
}

std::optional<Alpha2Variant> variant_from_name(std::string_view name) {
    if (name == "topMedian") return Alpha2Variant::topMedian;
    if (name == "leftMedian") return Alpha2Variant::leftMedian;
    if (name == "rightMedian") return Alpha2Variant::rightMedian;
    return std::nullopt;
}

std::array<PointQ, 2> alpha2(Alpha2Variant v) {
    PointQ pair_pt, single_pt;
    switch (v) {
        case Alpha2Variant::topMedian:
            pair_pt = conditional_centroid({"1", "2"});
            single_pt = centroid("3");
            break;
        case Alpha2Variant::leftMedian:
            pair_pt = conditional_centroid({"2", "3"});
            single_pt = centroid("1");
            break;
        default:
            pair_pt = conditional_centroid({"1", "3"});
            single_pt = centroid("2");
            break;
    }
    std::array<PointQ, 2> out{pair_pt, single_pt};
    if (lex_less(out[1], out[0])) std::swap(out[0], out[1]);
    return out;
}

std::array<PointQ, 3> alpha3() {
    std::array<PointQ, 3> out{centroid("1"), centroid("2"), centroid("3")};
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

namespace {

// Variant-bearing words of a valid spec: J itself in regime B, the
// complement of J in regime C, nothing otherwise.
std::vector<Word> variant_words(const OptimalSetSpec& spec) {
    if (spec.reg == Regime::A) return {};
    if (spec.reg == Regime::B) return spec.J;
    std::vector<Word> out;
    for (const Word& w : words_of_length(spec.level))
        if (!std::binary_search(spec.J.begin(), spec.J.end(), w)) out.push_back(w);
    return out;
}

}  // namespace

void validate_spec(const OptimalSetSpec& spec) {
    if (spec.n < 1) throw std::invalid_argument("spec: n must be >= 1");
    if (spec.level != ell(spec.n)) throw std::invalid_argument("spec: wrong level");
    if (spec.reg != regime(spec.n)) throw std::invalid_argument("spec: wrong regime");
    long long p = pow3_ll(spec.level);
    size_t expect_j = 0;
    if (spec.reg == Regime::B) expect_j = static_cast<size_t>(spec.n - p);
    if (spec.reg == Regime::C) expect_j = static_cast<size_t>(spec.n - 2 * p);
    if (spec.J.size() != expect_j) throw std::invalid_argument("spec: wrong |J|");
    if (!std::is_sorted(spec.J.begin(), spec.J.end())) throw std::invalid_argument("spec: J not sorted");
    if (std::adjacent_find(spec.J.begin(), spec.J.end()) != spec.J.end())
        throw std::invalid_argument("spec: duplicate word in J");
    for (const Word& w : spec.J) {
        check_word(w);
        if (static_cast<int>(w.size()) != spec.level)
            throw std::invalid_argument("spec: word \"" + w + "\" has wrong length");
    }
    std::vector<Word> expect_keys = variant_words(spec);
    if (spec.variants.size() != expect_keys.size())
        throw std::invalid_argument("spec: wrong variant count");
    for (const Word& w : expect_keys)
        if (!spec.variants.count(w))
            throw std::invalid_argument("spec: missing variant for \"" + w + "\"");
}

OptimalSetSpec canonical_spec(long long n) {
    OptimalSetSpec spec;
    spec.n = n;
    spec.level = ell(n);
    spec.reg = regime(n);
    long long p = pow3_ll(spec.level);
    size_t m = 0;
    if (spec.reg == Regime::B) m = static_cast<size_t>(n - p);
    if (spec.reg == Regime::C) m = static_cast<size_t>(n - 2 * p);
    std::vector<Word> base = words_of_length(spec.level);
    spec.J.assign(base.begin(), base.begin() + static_cast<long>(m));
    for (const Word& w : variant_words(spec)) spec.variants.emplace(w, Alpha2Variant::topMedian);
    return spec;
}

std::vector<PointQ> optimal_set(const OptimalSetSpec& spec) {
    validate_spec(spec);
    std::vector<PointQ> out;
    out.reserve(static_cast<size_t>(spec.n));
    for (const Word& w : words_of_length(spec.level)) {
        bool in_j = std::binary_search(spec.J.begin(), spec.J.end(), w);
        if (spec.reg == Regime::C && in_j) {
            for (const PointQ& q : alpha3()) out.push_back(apply_word(w, q));
        } else if ((spec.reg == Regime::B && in_j) || (spec.reg == Regime::C && !in_j)) {
            for (const PointQ& q : alpha2(spec.variants.at(w))) out.push_back(apply_word(w, q));
        } else {
            out.push_back(centroid(w));
        }
    }
    std::sort(out.begin(), out.end(), lex_less);
    for (size_t i = 0; i + 1 < out.size(); ++i)
        if (out[i] == out[i + 1]) throw std::logic_error("optimal_set: coincident points");
    if (out.size() != static_cast<size_t>(spec.n)) throw std::logic_error("optimal_set: wrong cardinality");
    return out;
}

Rat quantization_error(long long n) {
    int l = ell(n);
    Int num = 13 * pow3(static_cast<unsigned long>(l)) - 4 * Int(static_cast<long>(n));
    Int den = 2 * pow3(3 * static_cast<unsigned long>(l) + 3);
    return frac(num, den);
}

Int count_optimal_sets(long long n) {
    int l = ell(n);
    long long p = pow3_ll(l);
    Regime r = regime(n);
    if (r == Regime::A) return Int(1);
    unsigned long pick, free3;
    if (r == Regime::B) {
        pick = static_cast<unsigned long>(n - p);
        free3 = pick;  // one pattern choice per refined cell
    } else {
        pick = static_cast<unsigned long>(n - 2 * p);
        free3 = static_cast<unsigned long>(3 * p - n);  // complement cells carry the pattern
    }
    Int count;
    mpz_bin_ui(count.get_mpz_t(), Int(static_cast<long>(p)).get_mpz_t(), pick);
    Int three;
    mpz_ui_pow_ui(three.get_mpz_t(), 3, free3);
    return count * three;
}

OptimalSetEnumerator::OptimalSetEnumerator(long long n) : n_(n), level_(ell(n)), reg_(regime(n)) {
    long long p = pow3_ll(level_);
    pick_ = 0;
    if (reg_ == Regime::B) pick_ = static_cast<size_t>(n - p);
    if (reg_ == Regime::C) pick_ = static_cast<size_t>(n - 2 * p);
    base_ = words_of_length(level_);
    comb_.resize(pick_);
    for (size_t i = 0; i < pick_; ++i) comb_[i] = i;
    size_t vwords = reg_ == Regime::B ? pick_ : (reg_ == Regime::C ? base_.size() - pick_ : 0);
    digits_.assign(vwords, 0);
}

OptimalSetSpec OptimalSetEnumerator::current() const {
    OptimalSetSpec spec;
    spec.n = n_;
    spec.level = level_;
    spec.reg = reg_;
    for (size_t i : comb_) spec.J.push_back(base_[i]);
    std::vector<Word> vwords;
    if (reg_ == Regime::B) {
        vwords = spec.J;
    } else if (reg_ == Regime::C) {
        for (const Word& w : base_)
            if (!std::binary_search(spec.J.begin(), spec.J.end(), w)) vwords.push_back(w);
    }
    for (size_t i = 0; i < vwords.size(); ++i)
        spec.variants.emplace(vwords[i], static_cast<Alpha2Variant>(digits_[i]));
    return spec;
}

bool OptimalSetEnumerator::advance() {
    // count up the variant digits, last word fastest
    for (size_t i = digits_.size(); i-- > 0;) {
        if (++digits_[i] < 3) return true;
        digits_[i] = 0;
    }
    // next J in lexicographic combination order
    size_t m = comb_.size();
    size_t total = base_.size();
    for (size_t i = m; i-- > 0;) {
        if (comb_[i] < total - (m - i)) {
            ++comb_[i];
            for (size_t j = i + 1; j < m; ++j) comb_[j] = comb_[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::optional<OptimalSetSpec> OptimalSetEnumerator::next() {
    if (done_) return std::nullopt;
    OptimalSetSpec spec = current();
    done_ = !advance();
    return spec;
}

std::vector<OptimalSetSpec> enumerate_optimal_sets(long long n, size_t cap) {
    OptimalSetEnumerator en(n);
    std::vector<OptimalSetSpec> out;
    while (out.size() < cap) {
        auto spec = en.next();
        if (!spec) break;
        out.push_back(std::move(*spec));
    }
    return out;
}

}  // namespace rquant
