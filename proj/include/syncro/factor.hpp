#ifndef SYNCRO_FACTOR_HPP
#define SYNCRO_FACTOR_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "syncro/poly2.hpp"

namespace syncro {

/// Complete factorization into irreducibles, sorted by (degree, bit
/// pattern). The product of factor^multiplicity equals original.
struct Factorization {
    std::vector<std::pair<Poly2, int>> factors;
    Poly2 original;
};

/// Default seed for the randomized equal-degree splitter. Factorization is
/// deterministic for a fixed seed; there is no hidden global state.
inline constexpr std::uint64_t kFactorSeed = 0x5ca1ab1e2024ull;

bool is_irreducible(const Poly2& f);

Factorization factorize(const Poly2& f, std::uint64_t seed = kFactorSeed);

/// Smallest e >= 1 with x^e = 1 (mod f); requires f(0) = 1 and deg(f) >= 1.
/// Works factor-by-factor: the order of an irreducible of degree d divides
/// 2^d - 1, a repeated factor of multiplicity a contributes a 2^ceil(log2 a)
/// lift, and coprime factors combine by lcm. Irreducible factors of degree
/// above 32 are rejected (the 2^d - 1 integer factorization cap).
std::uint64_t order(const Poly2& f);
std::uint64_t order(const Factorization& factors);

bool is_primitive(const Poly2& f);

/// Integer factorization helper (trial division plus Pollard rho), exposed
/// for the order-engine tests.
std::vector<std::pair<std::uint64_t, int>> factor_u64(std::uint64_t v);

}  // namespace syncro

#endif
