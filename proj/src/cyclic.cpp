#include "syncro/cyclic.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace syncro {

namespace {

Poly2 x_n_plus_1(int n) {
    Poly2 p = Poly2::monomial(std::size_t(n));
    p.set_coeff(0, true);
    return p;
}

std::uint64_t gray(std::uint64_t i) { return i ^ (i >> 1); }

}  // namespace

CyclicCode::CyclicCode(int n, Poly2 gen) : n_(n), gen_(std::move(gen)) {
    if (n < 1) throw std::invalid_argument("cyclic code: length must be >= 1");
    if (gen_.is_zero())
        throw std::invalid_argument("cyclic code: zero generator");
    auto [q, r] = divmod(x_n_plus_1(n), gen_);
    if (!r.is_zero())
        throw std::invalid_argument(
            "cyclic code: generator does not divide x^" + std::to_string(n) +
            " + 1 (remainder " + r.to_string() + ")");
    k_ = n - gen_.degree();
}

Poly2 CyclicCode::encode(const Poly2& message) const {
    if (message.degree() >= k_)
        throw std::invalid_argument("encode: message degree must be < k");
    return message * gen_;
}

CyclicCode CyclicCode::dual() const {
    Poly2 check = x_n_plus_1(n_) / gen_;
    return CyclicCode(n_, check.reversed());
}

bool CyclicCode::contains_word(const Poly2& word) const {
    if (word.degree() >= n_)
        throw std::invalid_argument("contains_word: degree must be < n");
    return (word % gen_).is_zero();
}

bool is_subcode(const CyclicCode& inner, const CyclicCode& outer) {
    if (inner.length() != outer.length())
        throw std::invalid_argument("is_subcode: length mismatch");
    return (inner.generator() % outer.generator()).is_zero();
}

bool is_dual_containing(const CyclicCode& code) {
    return is_subcode(code.dual(), code);
}

namespace {

// number of words needed for an n-bit codeword
std::size_t word_count(int n) { return std::size_t(n + 63) / 64; }

// sum of binomial coefficients C(n, 1..w), saturating at u64 max
std::uint64_t sweep_cost(int n, int w) {
    __uint128_t total = 0;
    __uint128_t c = 1;
    for (int i = 1; i <= w; ++i) {
        c = c * std::uint64_t(n - i + 1) / std::uint64_t(i);
        total += c;
        if (total > ~std::uint64_t(0)) return ~std::uint64_t(0);
    }
    return std::uint64_t(total);
}

int gray_min_weight(const CyclicCode& code) {
    const int k = code.dim();
    const std::size_t W = word_count(code.length());
    const std::uint64_t total = std::uint64_t(1) << k;

    // pre-shift g(x) by 0..63 bits; a Gray step XORs one shifted copy
    std::array<std::vector<std::uint64_t>, 64> shifted;
    for (unsigned r = 0; r < 64; ++r) {
        Poly2 s = code.generator() << r;
        shifted[r].assign(s.words().begin(), s.words().end());
    }

    int best = code.length() + 1;
#pragma omp parallel
    {
        std::vector<std::uint64_t> cw(W, 0);
        int local_best = code.length() + 1;
        int nthreads = 1, tid = 0;
#ifdef _OPENMP
        nthreads = omp_get_num_threads();
        tid = omp_get_thread_num();
#endif
        std::uint64_t span = (total - 1) / std::uint64_t(nthreads) + 1;
        std::uint64_t lo = 1 + std::uint64_t(tid) * span;
        std::uint64_t hi = std::min(total, lo + span);
        if (lo < hi) {
            // seed the walk with a direct product for message gray(lo)
            Poly2 start = code.encode(Poly2::from_bits(gray(lo)));
            std::fill(cw.begin(), cw.end(), 0);
            auto sw = start.words();
            std::copy(sw.begin(), sw.end(), cw.begin());
            auto weigh = [&] {
                int w = 0;
                for (std::uint64_t v : cw) w += std::popcount(v);
                return w;
            };
            local_best = std::min(local_best, weigh());
            for (std::uint64_t i = lo + 1; i < hi; ++i) {
                int b = std::countr_zero(i);
                std::size_t off = std::size_t(b) >> 6;
                const auto& s = shifted[std::size_t(b) & 63];
                for (std::size_t t = 0; t < s.size(); ++t) cw[off + t] ^= s[t];
                local_best = std::min(local_best, weigh());
            }
        }
#pragma omp critical
        best = std::min(best, local_best);
    }
    return best;
}

}  // namespace

DistanceReport min_distance(const CyclicCode& code, std::uint64_t budget,
                            int claimed) {
    const int k = code.dim();
    const int n = code.length();
    if (k == 0)
        throw std::domain_error("min_distance: the zero code has no distance");
    if (k == n) return {DistanceReport::Kind::exact, 1};
    if (k < 63 && (std::uint64_t(1) << k) <= budget)
        return {DistanceReport::Kind::exact, gray_min_weight(code)};

    if (claimed >= 2 && sweep_cost(n, claimed - 1) <= budget) {
        // ascending-weight sweep: a hit is the true minimum, a clean sweep
        // certifies the claim as a lower bound
        for (int w = 1; w < claimed && w <= n; ++w) {
            std::vector<int> pos(static_cast<std::size_t>(w));
            for (int i = 0; i < w; ++i) pos[std::size_t(i)] = i;
            for (;;) {
                Poly2 word;
                for (int p : pos) word.set_coeff(std::size_t(p), true);
                if (code.contains_word(word))
                    return {DistanceReport::Kind::exact, w};
                int i = w - 1;
                while (i >= 0 && pos[std::size_t(i)] == n - w + i) --i;
                if (i < 0) break;
                ++pos[std::size_t(i)];
                for (int j = i + 1; j < w; ++j)
                    pos[std::size_t(j)] = pos[std::size_t(j - 1)] + 1;
            }
        }
        return {DistanceReport::Kind::lower_bound, claimed};
    }
    return {DistanceReport::Kind::unknown, 0};
}

int min_weight_serial(const CyclicCode& code) {
    const int k = code.dim();
    if (k == 0 || k > 30)
        throw std::invalid_argument("min_weight_serial: k out of test range");
    int best = code.length() + 1;
    for (std::uint64_t m = 1; m < (std::uint64_t(1) << k); ++m)
        best = std::min(best,
                        int(code.encode(Poly2::from_bits(m)).weight()));
    return best;
}

SyndromeDecoder::SyndromeDecoder(const CyclicCode& code, int t,
                                 std::uint64_t table_budget)
    : code_(code), t_(t) {
    if (t < 0) throw std::invalid_argument("decoder: negative radius");
    const int n = code.length();
    std::uint64_t need = 1 + sweep_cost(n, t);
    if (need > table_budget)
        throw std::invalid_argument(
            "decoder: syndrome table needs " + std::to_string(need) +
            " entries, budget is " + std::to_string(table_budget));
    table_.reserve(need);
    table_.emplace(Poly2::zero(), Poly2::zero());
    for (int w = 1; w <= t; ++w) {
        std::vector<int> pos(static_cast<std::size_t>(w));
        for (int i = 0; i < w; ++i) pos[std::size_t(i)] = i;
        for (;;) {
            Poly2 err;
            for (int p : pos) err.set_coeff(std::size_t(p), true);
            table_.emplace(err % code.generator(), err);
            int i = w - 1;
            while (i >= 0 && pos[std::size_t(i)] == n - w + i) --i;
            if (i < 0) break;
            ++pos[std::size_t(i)];
            for (int j = i + 1; j < w; ++j)
                pos[std::size_t(j)] = pos[std::size_t(j - 1)] + 1;
        }
    }
}

std::optional<SyndromeDecoder::Result> SyndromeDecoder::decode(
    const Poly2& received) const {
    if (received.degree() >= code_.length())
        throw std::invalid_argument("decode: word degree must be < n");
    auto it = table_.find(received % code_.generator());
    if (it == table_.end()) return std::nullopt;
    return Result{received + it->second, it->second};
}

}  // namespace syncro
