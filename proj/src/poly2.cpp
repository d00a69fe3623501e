#include "syncro/poly2.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <stdexcept>

namespace syncro {

namespace {

constexpr std::uint64_t kEvenMask = 0x5555555555555555ull;

// bit-spread table: byte abcdefgh -> 16-bit a0b0c0d0e0f0g0h0
std::uint16_t spread_byte(std::uint8_t b) {
    std::uint16_t r = 0;
    for (int i = 0; i < 8; ++i)
        if (b >> i & 1) r |= std::uint16_t(1) << (2 * i);
    return r;
}

// inverse: gather the even-indexed bits of a 16-bit chunk into a byte
std::uint8_t gather_even(std::uint16_t v) {
    std::uint8_t r = 0;
    for (int i = 0; i < 8; ++i)
        if (v >> (2 * i) & 1) r |= std::uint8_t(1) << i;
    return r;
}

struct SpreadTables {
    std::uint16_t spread[256];
    std::uint8_t gather[65536];
    SpreadTables() {
        for (int i = 0; i < 256; ++i) spread[i] = spread_byte(std::uint8_t(i));
        for (int i = 0; i < 65536; ++i)
            gather[i] = gather_even(std::uint16_t(i));
    }
};

const SpreadTables& tables() {
    static const SpreadTables t;
    return t;
}

}  // namespace

Poly2 Poly2::from_bits(std::uint64_t bits) {
    Poly2 p;
    if (bits != 0) p.words_.push_back(bits);
    return p;
}

Poly2 Poly2::monomial(std::size_t e) {
    Poly2 p;
    p.words_.assign(e / 64 + 1, 0);
    p.words_.back() = std::uint64_t(1) << (e % 64);
    return p;
}

Poly2 Poly2::from_words(std::vector<std::uint64_t> words) {
    Poly2 p;
    p.words_ = std::move(words);
    p.normalize();
    return p;
}

Poly2 Poly2::parse(std::string_view text) {
    std::size_t begin = text.find_first_not_of(" \t");
    std::size_t end = text.find_last_not_of(" \t");
    if (begin == std::string_view::npos)
        throw std::invalid_argument("empty polynomial literal");
    text = text.substr(begin, end - begin + 1);

    Poly2 p;
    if (text.front() == '[') {
        if (text.back() != ']')
            throw std::invalid_argument(
                "exponent list: missing ']' at position " +
                std::to_string(begin + text.size()));
        std::string_view body = text.substr(1, text.size() - 2);
        std::size_t pos = 0;
        while (pos < body.size()) {
            while (pos < body.size() && (body[pos] == ' ' || body[pos] == ','))
                ++pos;
            if (pos >= body.size()) break;
            std::size_t value = 0;
            auto [ptr, ec] = std::from_chars(body.data() + pos,
                                             body.data() + body.size(), value);
            if (ec != std::errc())
                throw std::invalid_argument(
                    "exponent list: expected integer at position " +
                    std::to_string(begin + 1 + pos));
            pos = std::size_t(ptr - body.data());
            if (value > 1u << 20)
                throw std::invalid_argument("exponent too large: " +
                                            std::to_string(value));
            p.set_coeff(value, true);
        }
        return p;
    }
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '1')
            p.set_coeff(i, true);
        else if (text[i] != '0')
            throw std::invalid_argument(
                "binary string: expected 0 or 1 at position " +
                std::to_string(begin + i));
    }
    return p;
}

std::string Poly2::to_string() const {
    if (is_zero()) return "0";
    int d = degree();
    std::string s(std::size_t(d) + 1, '0');
    for (int i = 0; i <= d; ++i)
        if (coeff(std::size_t(i))) s[std::size_t(i)] = '1';
    return s;
}

int Poly2::degree() const {
    if (words_.empty()) return -1;
    return int(64 * (words_.size() - 1)) + 63 -
           std::countl_zero(words_.back());
}

bool Poly2::coeff(std::size_t i) const {
    std::size_t w = i / 64;
    if (w >= words_.size()) return false;
    return words_[w] >> (i % 64) & 1;
}

std::size_t Poly2::weight() const {
    std::size_t w = 0;
    for (std::uint64_t v : words_) w += std::size_t(std::popcount(v));
    return w;
}

void Poly2::set_coeff(std::size_t i, bool value) {
    std::size_t w = i / 64;
    if (value) {
        if (w >= words_.size()) words_.resize(w + 1, 0);
        words_[w] |= std::uint64_t(1) << (i % 64);
    } else if (w < words_.size()) {
        words_[w] &= ~(std::uint64_t(1) << (i % 64));
        normalize();
    }
}

Poly2 Poly2::reversed() const {
    if (is_zero()) return *this;
    std::size_t d = std::size_t(degree());
    Poly2 r;
    for (std::size_t i = 0; i <= d; ++i)
        if (coeff(i)) r.set_coeff(d - i, true);
    return r;
}

void Poly2::normalize() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

void Poly2::xor_shifted(const Poly2& src, std::size_t bit_offset) {
    std::size_t off = bit_offset / 64;
    unsigned sh = unsigned(bit_offset % 64);
    std::size_t need = off + src.words_.size() + (sh != 0 ? 1 : 0);
    if (words_.size() < need) words_.resize(need, 0);
    if (sh == 0) {
        for (std::size_t i = 0; i < src.words_.size(); ++i)
            words_[off + i] ^= src.words_[i];
    } else {
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < src.words_.size(); ++i) {
            words_[off + i] ^= (src.words_[i] << sh) | carry;
            carry = src.words_[i] >> (64 - sh);
        }
        words_[off + src.words_.size()] ^= carry;
    }
    normalize();
}

Poly2 Poly2::operator+(const Poly2& rhs) const {
    Poly2 r(*this);
    r += rhs;
    return r;
}

Poly2& Poly2::operator+=(const Poly2& rhs) {
    if (words_.size() < rhs.words_.size())
        words_.resize(rhs.words_.size(), 0);
    for (std::size_t i = 0; i < rhs.words_.size(); ++i)
        words_[i] ^= rhs.words_[i];
    normalize();
    return *this;
}

Poly2 Poly2::operator*(const Poly2& rhs) const {
    if (is_zero() || rhs.is_zero()) return Poly2();
    // schoolbook with word-level shifts; degrees stay in the ~10^4 range
    const Poly2& a = words_.size() <= rhs.words_.size() ? *this : rhs;
    const Poly2& b = words_.size() <= rhs.words_.size() ? rhs : *this;
    Poly2 res;
    res.words_.assign(a.words_.size() + b.words_.size(), 0);
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
        std::uint64_t w = a.words_[i];
        while (w != 0) {
            int j = std::countr_zero(w);
            w &= w - 1;
            res.xor_shifted(b, 64 * i + std::size_t(j));
        }
    }
    res.normalize();
    return res;
}

Poly2 Poly2::operator<<(std::size_t bits) const {
    if (is_zero()) return *this;
    Poly2 r;
    r.xor_shifted(*this, bits);
    return r;
}

Poly2 Poly2::operator>>(std::size_t bits) const {
    Poly2 r;
    if (is_zero() || std::size_t(degree()) < bits) return r;
    std::size_t off = bits / 64;
    unsigned sh = unsigned(bits % 64);
    r.words_.assign(words_.size() - off, 0);
    for (std::size_t i = off; i < words_.size(); ++i) {
        r.words_[i - off] |= sh ? words_[i] >> sh : words_[i];
        if (sh && i + 1 < words_.size())
            r.words_[i - off] |= words_[i + 1] << (64 - sh);
    }
    r.normalize();
    return r;
}

bool Poly2::operator<(const Poly2& rhs) const {
    if (degree() != rhs.degree()) return degree() < rhs.degree();
    for (std::size_t i = words_.size(); i-- > 0;)
        if (words_[i] != rhs.words_[i]) return words_[i] < rhs.words_[i];
    return false;
}

DivMod divmod(const Poly2& a, const Poly2& b) {
    if (b.is_zero())
        throw std::invalid_argument("polynomial division by zero");
    DivMod out;
    out.remainder = a;
    int db = b.degree();
    int dr;
    while ((dr = out.remainder.degree()) >= db) {
        std::size_t s = std::size_t(dr - db);
        out.quotient.set_coeff(s, true);
        out.remainder.xor_shifted(b, s);
    }
    return out;
}

Poly2 Poly2::operator/(const Poly2& rhs) const {
    return divmod(*this, rhs).quotient;
}

Poly2 Poly2::operator%(const Poly2& rhs) const {
    return divmod(*this, rhs).remainder;
}

Poly2 gcd(Poly2 a, Poly2 b) {
    if (a.is_zero() && b.is_zero())
        throw std::invalid_argument("gcd(0, 0) is undefined");
    while (!b.is_zero()) {
        Poly2 r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Poly2 sqr(const Poly2& p) {
    if (p.is_zero()) return p;
    const auto& t = tables();
    std::vector<std::uint64_t> out(2 * p.words().size(), 0);
    std::size_t k = 0;
    for (std::uint64_t w : p.words()) {
        std::uint64_t lo = 0, hi = 0;
        for (int byte = 0; byte < 4; ++byte)
            lo |= std::uint64_t(t.spread[(w >> (8 * byte)) & 0xff])
                  << (16 * byte);
        for (int byte = 4; byte < 8; ++byte)
            hi |= std::uint64_t(t.spread[(w >> (8 * byte)) & 0xff])
                  << (16 * (byte - 4));
        out[k++] = lo;
        out[k++] = hi;
    }
    return Poly2::from_words(std::move(out));
}

Poly2 derivative(const Poly2& p) {
    Poly2 shifted = p >> 1;
    std::vector<std::uint64_t> w(shifted.words().begin(),
                                 shifted.words().end());
    for (auto& v : w) v &= kEvenMask;
    return Poly2::from_words(std::move(w));
}

Poly2 sqrt_exact(const Poly2& p) {
    if (p.is_zero()) return p;
    const auto& t = tables();
    auto in = p.words();
    std::vector<std::uint64_t> out((in.size() + 1) / 2, 0);
    for (std::size_t i = 0; i < in.size(); ++i) {
        std::uint64_t w = in[i];
        if ((w & ~kEvenMask) != 0)
            throw std::invalid_argument("sqrt of a non-square polynomial");
        std::uint64_t half = 0;
        for (int chunk = 0; chunk < 4; ++chunk)
            half |= std::uint64_t(t.gather[(w >> (16 * chunk)) & 0xffff])
                    << (8 * chunk);
        out[i / 2] |= half << (i % 2 == 0 ? 0 : 32);
    }
    return Poly2::from_words(std::move(out));
}

namespace {

void check_modulus(const Poly2& modulus) {
    if (modulus.is_zero())
        throw std::invalid_argument("powmod: zero modulus");
    if (modulus.degree() < 1)
        throw std::invalid_argument("powmod: modulus must have degree >= 1");
}

}  // namespace

Poly2 powmod(const Poly2& base, std::uint64_t e, const Poly2& modulus) {
    std::uint64_t words[1] = {e};
    return powmod(base, std::span<const std::uint64_t>(words, 1), modulus);
}

Poly2 powmod(const Poly2& base, std::span<const std::uint64_t> e_words,
             const Poly2& modulus) {
    check_modulus(modulus);
    Poly2 result = Poly2::one();
    Poly2 b = base % modulus;
    for (std::size_t i = 0; i < e_words.size(); ++i) {
        std::uint64_t w = e_words[i];
        bool more_bits_above = false;
        for (std::size_t j = i + 1; j < e_words.size(); ++j)
            if (e_words[j] != 0) more_bits_above = true;
        for (int bit = 0; bit < 64; ++bit) {
            if (w >> bit & 1) result = (result * b) % modulus;
            bool last = !more_bits_above && (w >> bit >> 1) == 0;
            if (last) break;
            b = sqr(b) % modulus;
        }
        if (!more_bits_above) break;
    }
    return result;
}

}  // namespace syncro
