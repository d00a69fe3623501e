#include "syncro/families.hpp"

#include <set>
#include <stdexcept>

namespace syncro {

namespace {

std::uint64_t binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t c = 1;
    for (int i = 1; i <= k; ++i)
        c = c * std::uint64_t(n - i + 1) / std::uint64_t(i);
    return c;
}

void check_rm_range(int r, int m) {
    if (m < 2 || m > 13 || r < 1 || r >= m)
        throw std::invalid_argument(
            "punctured RM: need 1 <= r < m and m <= 13");
}

}  // namespace

CyclicCode punctured_rm(int r, int m) {
    check_rm_range(r, m);
    const int n = (1 << m) - 1;
    RootField rf = make_root_field(n);
    CosetTable table = cosets(n);
    Poly2 gen = Poly2::one();
    for (int rep : table.reps) {
        int w = binary_weight(std::uint64_t(rep));
        if (w >= 1 && w <= m - r - 1) gen = gen * min_poly(rf, rep);
    }
    CyclicCode code(n, std::move(gen));
    std::uint64_t expected = 0;
    for (int i = 0; i <= r; ++i) expected += binom(m, i);
    if (std::uint64_t(code.dim()) != expected)
        throw std::logic_error(
            "punctured RM: dimension " + std::to_string(code.dim()) +
            " does not match sum of binomials " + std::to_string(expected));
    return code;
}

Poly2 punctured_rm_dual_gen(int r, int m) {
    check_rm_range(r, m);
    const int n = (1 << m) - 1;
    RootField rf = make_root_field(n);
    CosetTable table = cosets(n);
    Poly2 gen = Poly2::from_bits(0b11);  // x + 1
    for (int rep : table.reps) {
        int w = binary_weight(std::uint64_t(rep));
        if (w >= 1 && w <= r) gen = gen * min_poly(rf, rep);
    }
    return gen;
}

CyclicCode bch(int m, int d, int b) {
    if (m < 2 || m > 13)
        throw std::invalid_argument("bch: need 2 <= m <= 13");
    const int n = (1 << m) - 1;
    if (d < 2 || d > n)
        throw std::invalid_argument("bch: need 2 <= d <= 2^m - 1");
    if (b < 0) throw std::invalid_argument("bch: offset must be nonnegative");
    RootField rf = make_root_field(n);
    CosetTable table = cosets(n);
    std::set<int> reps;
    for (int j = 0; j <= d - 2; ++j) reps.insert(table.rep_of((b + j) % n));
    Poly2 gen = Poly2::one();
    for (int rep : reps) gen = gen * min_poly(rf, rep);
    return CyclicCode(n, std::move(gen));
}

bool bch_dual_containing_predicted(int m, int d) {
    if (m < 2) throw std::invalid_argument("bch predicate: need m >= 2");
    if (d < 2) throw std::invalid_argument("bch predicate: need d >= 2");
    const int half = (m + 1) / 2;
    return d <= (1 << half) - 1;
}

std::pair<CyclicCode, CyclicCode> rm_bch_chain(int r, int m) {
    if (m < 7 || m > 13)
        throw std::invalid_argument("rm_bch_chain: need 7 <= m <= 13");
    const int lo = (m + 1) / 2;
    if (lo + 1 > m - 3)
        throw std::invalid_argument(
            "rm_bch_chain: the range ceil(m/2) < r < m-2 is empty for m = " +
            std::to_string(m));
    if (r <= lo || r >= m - 2)
        throw std::invalid_argument("rm_bch_chain: r outside (" +
                                    std::to_string(lo) + ", " +
                                    std::to_string(m - 2) + ")");
    CyclicCode c = punctured_rm(r, m);
    CyclicCode d = bch(m, (1 << (m - r)) - 1);
    if (!is_dual_containing(c))
        throw std::logic_error("rm_bch_chain: R(r,m)* not dual-containing");
    if (!is_subcode(c, d))
        throw std::logic_error("rm_bch_chain: R(r,m)* not inside the BCH code");
    if (c.generator() == d.generator())
        throw std::logic_error("rm_bch_chain: containment is not strict");
    return {std::move(c), std::move(d)};
}

CodeDescriptor describe_rm(int r, int m, const CyclicCode& code) {
    return {"rm*",       m, r, std::nullopt, std::nullopt,
            code.length(), code.dim(), code.generator()};
}

CodeDescriptor describe_bch(int m, int d, int b, const CyclicCode& code) {
    return {"bch",        m, std::nullopt, d, b,
            code.length(), code.dim(), code.generator()};
}

CodeDescriptor describe_cyclic(const CyclicCode& code) {
    return {"cyclic",      0, std::nullopt, std::nullopt, std::nullopt,
            code.length(), code.dim(), code.generator()};
}

int rm_designed_distance(int r, int m) { return (1 << (m - r)) - 1; }

}  // namespace syncro
