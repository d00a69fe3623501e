#include "syncro/scheme.hpp"

#include <stdexcept>
#include <unordered_set>

#include "syncro/families.hpp"

namespace syncro {

namespace {

bool is_prime_int(int v) {
    if (v < 2) return false;
    for (int p = 2; p * p <= v; ++p)
        if (v % p == 0) return false;
    return true;
}

int floor_half(int d) { return (d - 1) / 2; }

}  // namespace

SyncScheme build_scheme(const CyclicCode& c, const CyclicCode& d,
                        const SchemeOptions& options) {
    if (c.length() != d.length())
        throw std::invalid_argument("scheme: C and D have different lengths");
    const int n = c.length();
    const int k1 = c.dim();
    const int k2 = d.dim();
    if (!is_dual_containing(c))
        throw std::invalid_argument("scheme: C is not dual-containing");
    if (!is_subcode(c, d))
        throw std::invalid_argument("scheme: C is not a subcode of D");
    if (k1 == k2)
        throw std::invalid_argument(
            "scheme: containment is not strict (k1 = k2)");
    if (2 * k1 - n < 0)
        throw std::invalid_argument("scheme: 2*k1 - n is negative");

    auto [f, rem] = divmod(c.generator(), d.generator());
    if (!rem.is_zero())
        throw std::logic_error("scheme: g(x) does not divide h(x)");
    {
        Poly2 ambient = Poly2::monomial(std::size_t(n));
        ambient.set_coeff(0, true);
        if (!(ambient % f).is_zero())
            throw std::logic_error("scheme: f(x) does not divide x^n + 1");
    }

    SyncScheme scheme{c, d, f, factorize(f), 0, {}};
    scheme.tolerance = order(scheme.f_factors);

    DistanceMode used = DistanceMode::designed;
    int d1 = 0, d2 = 0;
    if (options.mode == DistanceMode::exact) {
        DistanceReport r1 = min_distance(c, options.budget);
        DistanceReport r2 = min_distance(d, options.budget);
        if (r1.exact() && r2.exact()) {
            used = DistanceMode::exact;
            d1 = r1.value;
            d2 = r2.value;
        }
    }
    if (used == DistanceMode::designed) {
        if (!options.designed_d1 || !options.designed_d2)
            throw std::invalid_argument(
                options.mode == DistanceMode::exact
                    ? "scheme: exact distances exceed the budget and no "
                      "designed distances were supplied"
                    : "scheme: designed mode requires designed distances");
        d1 = *options.designed_d1;
        d2 = *options.designed_d2;
    }

    scheme.params = QsyncParams{n,
                                2 * k1 - n,
                                scheme.tolerance - 1,
                                k2 - k1 - 1,
                                floor_half(d1),
                                floor_half(d2),
                                used,
                                d1,
                                d2};
    return scheme;
}

int legacy_tolerance(const SyncScheme& scheme) {
    return scheme.d.dim() - scheme.c.dim() - 1;
}

bool unique_remainders_check(const Poly2& f, std::uint64_t L) {
    if (!f.constant_term())
        throw std::invalid_argument("unique remainders: f(0) must be 1");
    std::unordered_set<Poly2> seen;
    seen.reserve(std::size_t(L) + 1);
    Poly2 r = Poly2::one() % f;
    for (std::uint64_t a = 0;; ++a) {
        if (!seen.insert(r).second) return false;
        if (a == L) break;
        r = (r << 1) % f;
    }
    return true;
}

Theorem8Result theorem8_params(int r, int m) {
    const int n = (1 << m) - 1;
    if (!is_prime_int(n))
        throw std::invalid_argument("theorem8: 2^m - 1 = " +
                                    std::to_string(n) + " is not prime");
    auto [c, d] = rm_bch_chain(r, m);

    const int designed = rm_designed_distance(r, m);
    SchemeOptions options;
    options.mode = DistanceMode::designed;
    options.designed_d1 = designed;
    options.designed_d2 = designed;

    Theorem8Result result{build_scheme(c, d, options), 0, false};
    long long stated = 0;
    long long binom = 1;
    for (int i = 0; i <= r; ++i) {
        if (i > 0) binom = binom * (m - i + 1) / i;
        stated += binom;
    }
    result.stated_logical = stated;
    result.logical_mismatch = stated != result.scheme.params.logical;
    return result;
}

}  // namespace syncro
