#include "syncro/field.hpp"

#include <bit>
#include <stdexcept>

#include "syncro/factor.hpp"

namespace syncro {

ExtField::ExtField(int m) : m_(m) {
    if (m < 1 || m > 13)
        throw std::invalid_argument("ExtField: m must be in [1, 13]");
    for (std::uint32_t v = (1u << m) | 1;; v += 2) {
        if (is_primitive(Poly2::from_bits(v))) {
            modulus_bits_ = v;
            modulus_ = Poly2::from_bits(v);
            return;
        }
        if (v >= (2u << m) - 1) break;
    }
    throw std::logic_error("ExtField: no primitive polynomial found");
}

ExtField build_field(int m) { return ExtField(m); }

std::uint32_t ExtField::mul(std::uint32_t a, std::uint32_t b) const {
    std::uint64_t acc = 0;
    std::uint64_t aa = a;
    while (b) {
        if (b & 1) acc ^= aa;
        aa <<= 1;
        b >>= 1;
    }
    for (int bit = 2 * m_ - 2; bit >= m_; --bit)
        if (acc >> bit & 1) acc ^= std::uint64_t(modulus_bits_) << (bit - m_);
    return std::uint32_t(acc);
}

std::uint32_t ExtField::pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

CosetTable cosets(int n) {
    if (n < 1 || n % 2 == 0)
        throw std::invalid_argument("cosets: n must be odd and positive");
    CosetTable table;
    table.n = n;
    table.rep_of_.assign(std::size_t(n), -1);
    for (int s = 0; s < n; ++s) {
        if (table.rep_of_[std::size_t(s)] != -1) continue;
        std::vector<int> orbit;
        int cur = s;
        do {
            orbit.push_back(cur);
            table.rep_of_[std::size_t(cur)] = s;
            cur = int((2ll * cur) % n);
        } while (cur != s);
        table.reps.push_back(s);
        table.cosets.push_back(std::move(orbit));
    }
    return table;
}

RootField make_root_field(int n) {
    if (n < 1 || n % 2 == 0)
        throw std::invalid_argument("root field: n must be odd and positive");
    int m = 1;
    if (n > 1) {
        std::int64_t t = 2 % n;
        m = 1;
        while (t != 1) {
            t = (2 * t) % n;
            if (++m > 13)
                throw std::invalid_argument(
                    "root field: multiplicative order of 2 mod n exceeds 13");
        }
    }
    ExtField field(m);
    std::uint64_t group = (std::uint64_t(1) << m) - 1;
    std::uint32_t alpha = field.pow(ExtField::gen, group / std::uint64_t(n));
    return RootField{n, std::move(field), alpha};
}

Poly2 min_poly(const RootField& rf, int s) {
    if (s < 0 || s >= rf.n)
        throw std::invalid_argument("min_poly: s out of range");
    // expand prod (x + alpha^i) over the doubling orbit of s
    std::vector<std::uint32_t> coeffs{1};
    int cur = s;
    do {
        std::uint32_t root = rf.field.pow(rf.alpha, std::uint64_t(cur));
        coeffs.push_back(0);
        for (std::size_t j = coeffs.size(); j-- > 0;) {
            std::uint32_t v = rf.field.mul(coeffs[j], root);
            if (j > 0) v ^= coeffs[j - 1];
            coeffs[j] = v;
        }
        cur = int((2ll * cur) % rf.n);
    } while (cur != s);

    Poly2 result;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] > 1)
            throw std::logic_error(
                "min_poly: expansion left a coefficient outside GF(2)");
        if (coeffs[i] == 1) result.set_coeff(i, true);
    }
    return result;
}

int binary_weight(std::uint64_t s) { return std::popcount(s); }

}  // namespace syncro
