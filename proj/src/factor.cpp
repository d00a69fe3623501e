#include "syncro/factor.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace syncro {

namespace {

// u128 mulmod keeps Pollard rho exact for any 64-bit modulus
std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return std::uint64_t((__uint128_t(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // deterministic Miller-Rabin bases for 64-bit inputs
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t y = powmod_u64(a, d, n);
        if (y == 1 || y == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            y = mulmod_u64(y, y, n);
            if (y == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

std::uint64_t pollard_rho(std::uint64_t n, std::uint64_t c) {
    auto step = [&](std::uint64_t v) { return (mulmod_u64(v, v, n) + c) % n; };
    std::uint64_t x = 2, y = 2, d = 1;
    while (d == 1) {
        x = step(x);
        y = step(step(y));
        std::uint64_t diff = x > y ? x - y : y - x;
        d = std::gcd(diff, n);
    }
    return d;
}

void factor_u64_into(std::uint64_t v,
                     std::vector<std::pair<std::uint64_t, int>>& out) {
    if (v == 1) return;
    if (is_prime_u64(v)) {
        out.emplace_back(v, 1);
        return;
    }
    for (std::uint64_t c = 1;; ++c) {
        std::uint64_t d = pollard_rho(v, c);
        if (d != 1 && d != v) {
            factor_u64_into(d, out);
            factor_u64_into(v / d, out);
            return;
        }
    }
}

Poly2 x_poly() { return Poly2::x(); }

// x^(2^reps) mod f by repeated Frobenius squaring
Poly2 frobenius_iterate(Poly2 h, int reps, const Poly2& f) {
    for (int i = 0; i < reps; ++i) h = sqr(h) % f;
    return h;
}

Poly2 random_poly_below(int deg_bound, std::mt19937_64& rng) {
    std::vector<std::uint64_t> w(std::size_t(deg_bound + 63) / 64, 0);
    for (auto& v : w) v = rng();
    int top = deg_bound % 64;
    if (top != 0) w.back() &= (std::uint64_t(1) << top) - 1;
    return Poly2::from_words(std::move(w));
}

// Cantor-Zassenhaus over GF(2): u is a product of distinct irreducibles of
// equal degree d; split via the trace map Tr(r) = r + r^2 + ... + r^(2^(d-1))
void equal_degree_split(const Poly2& u, int d,
                        std::vector<Poly2>& out, std::mt19937_64& rng) {
    if (u.degree() == d) {
        out.push_back(u);
        return;
    }
    for (;;) {
        Poly2 r = random_poly_below(u.degree(), rng);
        if (r.is_zero()) continue;
        Poly2 trace = r;
        Poly2 power = r;
        for (int i = 1; i < d; ++i) {
            power = sqr(power) % u;
            trace += power;
        }
        if (trace.is_zero()) continue;
        Poly2 w = gcd(trace, u);
        if (w.degree() > 0 && w.degree() < u.degree()) {
            equal_degree_split(w, d, out, rng);
            equal_degree_split(u / w, d, out, rng);
            return;
        }
    }
}

// distinct-degree split of a squarefree input
void distinct_degree_factor(Poly2 g, std::vector<Poly2>& out,
                            std::mt19937_64& rng) {
    Poly2 h = x_poly() % g;
    int d = 0;
    while (g.degree() > 0) {
        ++d;
        if (2 * d > g.degree()) {
            out.push_back(g);
            return;
        }
        h = sqr(h) % g;
        Poly2 u = gcd(h + x_poly(), g);
        if (u.degree() > 0) {
            equal_degree_split(u, d, out, rng);
            g = g / u;
            h = h % g;
        }
    }
}

// squarefree decomposition in characteristic 2; the derivative drops all
// even-exponent terms, and a vanishing derivative means a perfect square
void squarefree_decompose(const Poly2& f, int mult,
                          std::vector<std::pair<Poly2, int>>& out) {
    Poly2 fp = derivative(f);
    if (fp.is_zero()) {
        squarefree_decompose(sqrt_exact(f), 2 * mult, out);
        return;
    }
    Poly2 c = gcd(f, fp);
    Poly2 w = f / c;
    int i = 1;
    while (!w.is_one()) {
        Poly2 y = gcd(w, c);
        Poly2 z = w / y;
        if (!z.is_one()) out.emplace_back(z, i * mult);
        w = std::move(y);
        c = c / w;
        ++i;
    }
    if (!c.is_one()) squarefree_decompose(sqrt_exact(c), 2 * mult, out);
}

}  // namespace

bool is_irreducible(const Poly2& f) {
    int d = f.degree();
    if (d < 1)
        throw std::invalid_argument("is_irreducible: constant polynomial");
    if (d == 1) return true;
    // Rabin: x^(2^d) = x mod f, and gcd(x^(2^(d/p)) - x, f) = 1 for primes p|d
    Poly2 x = x_poly();
    if (frobenius_iterate(x % f, d, f) != x % f) return false;
    for (auto [p, mult] : factor_u64(std::uint64_t(d))) {
        (void)mult;
        Poly2 h = frobenius_iterate(x % f, d / int(p), f);
        if (!gcd(h + x, f).is_one()) return false;
    }
    return true;
}

Factorization factorize(const Poly2& f, std::uint64_t seed) {
    if (f.degree() < 1)
        throw std::invalid_argument("factorize: input must have degree >= 1");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<Poly2, int>> squarefree;
    squarefree_decompose(f, 1, squarefree);

    Factorization result;
    result.original = f;
    for (const auto& [part, mult] : squarefree) {
        std::vector<Poly2> irred;
        distinct_degree_factor(part, irred, rng);
        for (auto& p : irred) result.factors.emplace_back(std::move(p), mult);
    }
    std::sort(result.factors.begin(), result.factors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    // merge duplicates that may arrive through separate squarefree parts
    std::vector<std::pair<Poly2, int>> merged;
    for (auto& fac : result.factors) {
        if (!merged.empty() && merged.back().first == fac.first)
            merged.back().second += fac.second;
        else
            merged.push_back(std::move(fac));
    }
    result.factors = std::move(merged);
    return result;
}

std::vector<std::pair<std::uint64_t, int>> factor_u64(std::uint64_t v) {
    if (v == 0) throw std::invalid_argument("factor_u64(0)");
    std::vector<std::pair<std::uint64_t, int>> primes;
    for (std::uint64_t p = 2; p <= 257 && p * p <= v; p == 2 ? p = 3 : p += 2) {
        int e = 0;
        while (v % p == 0) {
            v /= p;
            ++e;
        }
        if (e > 0) primes.emplace_back(p, e);
    }
    if (v > 1) {
        std::vector<std::pair<std::uint64_t, int>> rest;
        factor_u64_into(v, rest);
        std::sort(rest.begin(), rest.end());
        for (auto [p, e] : rest) {
            if (!primes.empty() && primes.back().first == p)
                primes.back().second += e;
            else
                primes.emplace_back(p, e);
        }
    }
    return primes;
}

std::uint64_t order(const Poly2& f) {
    if (f.degree() < 1)
        throw std::invalid_argument("order: degree must be >= 1");
    if (!f.constant_term())
        throw std::invalid_argument("order: undefined when f(0) = 0");
    return order(factorize(f));
}

std::uint64_t order(const Factorization& factors) {
    if (factors.original.degree() < 1)
        throw std::invalid_argument("order: degree must be >= 1");
    if (!factors.original.constant_term())
        throw std::invalid_argument("order: undefined when f(0) = 0");
    std::uint64_t result = 1;
    Poly2 x = x_poly();
    for (const auto& [p, mult] : factors.factors) {
        int d = p.degree();
        if (d > 32)
            throw std::domain_error(
                "order: irreducible factor of degree " + std::to_string(d) +
                " exceeds the supported cap of 32");
        // suborder divides 2^d - 1; strip primes until minimal
        std::uint64_t e = (std::uint64_t(1) << d) - 1;
        for (auto [q, qe] : factor_u64(e)) {
            (void)qe;
            while (e % q == 0 && powmod(x, e / q, p).is_one()) e /= q;
        }
        // multiplicity a lifts the order by 2^b with b minimal, 2^b >= a
        std::uint64_t lift = 1;
        while (lift < std::uint64_t(mult)) lift <<= 1;
        __uint128_t sub = __uint128_t(e) * lift;
        if (sub != __uint128_t(std::uint64_t(sub)))
            throw std::overflow_error("order: value exceeds 64 bits");
        std::uint64_t sub64 = std::uint64_t(sub);
        std::uint64_t g = std::gcd(result, sub64);
        __uint128_t lcm = __uint128_t(result / g) * sub64;
        if (lcm != __uint128_t(std::uint64_t(lcm)))
            throw std::overflow_error("order: value exceeds 64 bits");
        result = std::uint64_t(lcm);
    }
    return result;
}

bool is_primitive(const Poly2& f) {
    if (f.degree() < 1) return false;
    if (!f.constant_term()) return false;
    int d = f.degree();
    if (d >= 64) return false;
    return order(f) == (std::uint64_t(1) << d) - 1;
}

}  // namespace syncro
