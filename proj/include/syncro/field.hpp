#ifndef SYNCRO_FIELD_HPP
#define SYNCRO_FIELD_HPP

#include <cstdint>
#include <vector>

#include "syncro/poly2.hpp"

namespace syncro {

/// F_{2^m} with elements packed as the low m bits of a uint32_t (bit i =
/// coefficient of x^i in the residue). The modulus is the lexicographically
/// smallest primitive polynomial of degree m, so the residue of x generates
/// the multiplicative group.
class ExtField {
  public:
    explicit ExtField(int m);

    int degree() const { return m_; }
    const Poly2& modulus() const { return modulus_; }

    static constexpr std::uint32_t one = 1;
    /// The element alpha = x.
    static constexpr std::uint32_t gen = 2;

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

  private:
    int m_;
    std::uint32_t modulus_bits_;
    Poly2 modulus_;
};

ExtField build_field(int m);

/// Cyclotomic cosets of {0,...,n-1} under multiplication by 2 mod n.
/// Each coset is listed in doubling order starting from its smallest
/// element; cosets are sorted by that representative.
struct CosetTable {
    int n = 0;
    std::vector<std::vector<int>> cosets;
    std::vector<int> reps;

    int rep_of(int s) const { return rep_of_[std::size_t(s)]; }

    std::vector<int> rep_of_;
};

CosetTable cosets(int n);

/// F_{2^m} together with a primitive n-th root of unity alpha, m being the
/// multiplicative order of 2 mod n. Covers general odd n (not only 2^m - 1)
/// as long as m <= 13.
struct RootField {
    int n;
    ExtField field;
    std::uint32_t alpha;
};

RootField make_root_field(int n);

/// Minimal polynomial M_s(x) of alpha^s: the product of (x - alpha^i) over
/// the cyclotomic coset of s. All coefficients of the expansion must land in
/// GF(2); that is checked exactly.
Poly2 min_poly(const RootField& rf, int s);

int binary_weight(std::uint64_t s);

}  // namespace syncro

#endif
