#ifndef SYNCRO_POLY2_HPP
#define SYNCRO_POLY2_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace syncro {

struct DivMod;

/// Polynomial over GF(2) with bit-packed coefficients.
///
/// Word i, bit j holds the coefficient of x^(64*i + j); the constant term is
/// bit 0 of word 0. Storage is canonical: no trailing zero words, so two
/// polynomials are equal iff their word vectors are equal. The zero
/// polynomial has an empty word vector and degree() == -1 (the sentinel for
/// degree minus infinity). All operations are pure; values are freely
/// shareable across threads.
class Poly2 {
  public:
    Poly2() = default;

    static Poly2 zero() { return Poly2(); }
    static Poly2 one() { return from_bits(1); }
    static Poly2 x() { return from_bits(2); }

    /// Low 64 coefficients from an integer bit pattern (bit i = coeff of x^i).
    static Poly2 from_bits(std::uint64_t bits);
    static Poly2 monomial(std::size_t e);
    static Poly2 from_words(std::vector<std::uint64_t> words);

    /// Accepts either the binary-string format "1101" (constant term first)
    /// or the exponent-list format "[0,1,3]". Throws std::invalid_argument
    /// with the offending position on malformed input.
    static Poly2 parse(std::string_view text);

    /// Canonical binary-string form, constant term first; "0" for zero.
    std::string to_string() const;

    int degree() const;
    bool is_zero() const { return words_.empty(); }
    bool is_one() const { return words_.size() == 1 && words_[0] == 1; }
    bool coeff(std::size_t i) const;
    bool constant_term() const { return coeff(0); }
    std::size_t weight() const;

    void set_coeff(std::size_t i, bool value);

    /// Reciprocal polynomial: bit i maps to bit degree()-i.
    Poly2 reversed() const;

    Poly2 operator+(const Poly2& rhs) const;
    Poly2& operator+=(const Poly2& rhs);
    Poly2 operator*(const Poly2& rhs) const;
    Poly2 operator<<(std::size_t bits) const;
    Poly2 operator>>(std::size_t bits) const;
    Poly2 operator/(const Poly2& rhs) const;
    Poly2 operator%(const Poly2& rhs) const;

    bool operator==(const Poly2& rhs) const = default;
    /// Total order by (degree, bit pattern as integer).
    bool operator<(const Poly2& rhs) const;

    std::span<const std::uint64_t> words() const { return words_; }

  private:
    std::vector<std::uint64_t> words_;

    void normalize();
    void xor_shifted(const Poly2& src, std::size_t bit_offset);

    friend struct DivMod;
    friend DivMod divmod(const Poly2& a, const Poly2& b);
};

struct DivMod {
    Poly2 quotient;
    Poly2 remainder;
};

DivMod divmod(const Poly2& a, const Poly2& b);
Poly2 gcd(Poly2 a, Poly2 b);

/// Squaring via the Frobenius map (bit i moves to bit 2i).
Poly2 sqr(const Poly2& p);

/// Formal derivative; over GF(2) only odd-exponent terms survive.
Poly2 derivative(const Poly2& p);

/// Square root of a perfect square (every set bit at an even index).
Poly2 sqrt_exact(const Poly2& p);

Poly2 powmod(const Poly2& base, std::uint64_t e, const Poly2& modulus);
/// Arbitrary-precision exponent, little-endian 64-bit words.
Poly2 powmod(const Poly2& base, std::span<const std::uint64_t> e_words,
             const Poly2& modulus);

}  // namespace syncro

template <>
struct std::hash<syncro::Poly2> {
    std::size_t operator()(const syncro::Poly2& p) const noexcept {
        std::uint64_t h = 0xcbf29ce484222325ull;
        for (std::uint64_t w : p.words()) {
            h ^= w;
            h *= 0x100000001b3ull;
        }
        return static_cast<std::size_t>(h);
    }
};

#endif
