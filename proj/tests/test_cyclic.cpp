#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <vector>

#include "syncro/cyclic.hpp"
#include "syncro/factor.hpp"
#include "syncro/families.hpp"

using syncro::CyclicCode;
using syncro::Poly2;

namespace {

Poly2 p(std::uint64_t bits) { return Poly2::from_bits(bits); }

// all codewords by message enumeration (n small)
std::vector<Poly2> all_codewords(const CyclicCode& code) {
    std::vector<Poly2> words;
    for (std::uint64_t m = 0; m < (std::uint64_t(1) << code.dim()); ++m)
        words.push_back(code.encode(p(m)));
    return words;
}

bool orthogonal(const Poly2& a, const Poly2& b, int n) {
    int acc = 0;
    for (int i = 0; i < n; ++i)
        acc ^= int(a.coeff(std::size_t(i)) && b.coeff(std::size_t(i)));
    return acc == 0;
}

Poly2 cyclic_shift(const Poly2& w, int n) {
    Poly2 out;
    for (int i = 0; i < n; ++i)
        if (w.coeff(std::size_t(i)))
            out.set_coeff(std::size_t((i + 1) % n), true);
    return out;
}

const Poly2 kHammingGen = p(0b1011);  // x^3 + x + 1

}  // namespace

TEST_CASE("construction") {
    CyclicCode hamming(7, kHammingGen);
    CHECK(hamming.length() == 7);
    CHECK(hamming.dim() == 4);

    CyclicCode ambient(7, Poly2::one());
    CHECK(ambient.dim() == 7);

    CHECK_THROWS_WITH_AS(CyclicCode(7, p(0b101)),
                         doctest::Contains("remainder"),
                         std::invalid_argument);
    CHECK_THROWS_AS(CyclicCode(7, Poly2::zero()), std::invalid_argument);
}

TEST_CASE("encode") {
    CyclicCode hamming(7, kHammingGen);
    CHECK(hamming.encode(Poly2::zero()) == Poly2::zero());
    CHECK(hamming.encode(Poly2::one()) == kHammingGen);
    CHECK_THROWS_AS(hamming.encode(Poly2::monomial(4)),
                    std::invalid_argument);
    // every nonzero Hamming codeword has weight >= 3
    for (std::uint64_t m = 1; m < 16; ++m)
        CHECK(hamming.encode(p(m)).weight() >= 3);
}

TEST_CASE("dual") {
    CyclicCode hamming(7, kHammingGen);
    CyclicCode dual = hamming.dual();
    CHECK(dual.dim() == 3);
    CHECK(dual.generator() == p(0b11101));  // x^4+x^3+x^2+1

    // exhaustive orthogonality at n = 7
    for (const Poly2& a : all_codewords(hamming))
        for (const Poly2& b : all_codewords(dual))
            CHECK(orthogonal(a, b, 7));

    CyclicCode ambient(7, Poly2::one());
    CHECK(ambient.dual().dim() == 0);
    CHECK(ambient.dual().generator() ==
          Poly2::monomial(7) + Poly2::one());

    // involution across a spread of codes
    for (int n : {7, 15, 31}) {
        Poly2 modulus = Poly2::monomial(std::size_t(n)) + Poly2::one();
        for (const auto& [factor, mult] : syncro::factorize(modulus).factors) {
            (void)mult;
            CyclicCode code(n, factor);
            CHECK(code.dual().dual() == code);
        }
    }
}

TEST_CASE("dual dimensions sum to n and orthogonality holds to n = 15") {
    for (int n : {7, 15}) {
        Poly2 modulus = Poly2::monomial(std::size_t(n)) + Poly2::one();
        auto factors = syncro::factorize(modulus).factors;
        // a few divisor products as generators
        std::vector<Poly2> gens{Poly2::one()};
        for (const auto& [f, mult] : factors) {
            (void)mult;
            std::size_t count = gens.size();
            for (std::size_t i = 0; i < count; ++i) gens.push_back(gens[i] * f);
        }
        for (const Poly2& gen : gens) {
            CyclicCode code(n, gen);
            CyclicCode dual = code.dual();
            CHECK(code.dim() + dual.dim() == n);
            if (code.dim() + dual.dim() <= 14)
                for (const Poly2& a : all_codewords(code))
                    for (const Poly2& b : all_codewords(dual))
                        CHECK(orthogonal(a, b, n));
        }
    }
}

TEST_CASE("is_subcode") {
    CyclicCode hamming(7, kHammingGen);
    CyclicCode simplex(7, p(0b11101));
    CHECK(syncro::is_subcode(hamming, hamming));
    CHECK(syncro::is_subcode(simplex, hamming));
    CHECK_FALSE(syncro::is_subcode(hamming, simplex));
    CHECK_THROWS_AS(syncro::is_subcode(hamming, CyclicCode(15, p(0b11))),
                    std::invalid_argument);

    // divisibility agrees with exhaustive codeword-set inclusion at n = 7
    Poly2 modulus = Poly2::monomial(7) + Poly2::one();
    auto factors = syncro::factorize(modulus).factors;
    std::vector<Poly2> gens{Poly2::one()};
    for (const auto& [f, mult] : factors) {
        (void)mult;
        std::size_t count = gens.size();
        for (std::size_t i = 0; i < count; ++i) gens.push_back(gens[i] * f);
    }
    for (const Poly2& ga : gens) {
        for (const Poly2& gb : gens) {
            CyclicCode a(7, ga), b(7, gb);
            auto words_b = all_codewords(b);
            std::set<Poly2> set_b;
            for (const Poly2& w : words_b) set_b.insert(w);
            bool included = true;
            for (const Poly2& w : all_codewords(a))
                if (!set_b.count(w)) included = false;
            CHECK(syncro::is_subcode(a, b) == included);
        }
    }
}

TEST_CASE("is_dual_containing") {
    CHECK(syncro::is_dual_containing(CyclicCode(7, kHammingGen)));
    CHECK(syncro::is_dual_containing(CyclicCode(7, Poly2::one())));
    CHECK_FALSE(syncro::is_dual_containing(CyclicCode(7, p(0b11101))));
}

TEST_CASE("cyclic closure at small lengths") {
    for (int n : {7, 15}) {
        Poly2 modulus = Poly2::monomial(std::size_t(n)) + Poly2::one();
        for (const auto& [factor, mult] : syncro::factorize(modulus).factors) {
            (void)mult;
            CyclicCode code(n, factor);
            if (code.dim() > 11) continue;
            for (const Poly2& w : all_codewords(code))
                CHECK(code.contains_word(cyclic_shift(w, n)));
        }
    }
}

TEST_CASE("min_distance exact values") {
    CHECK(syncro::min_distance(CyclicCode(7, kHammingGen)).value == 3);
    CHECK(syncro::min_distance(CyclicCode(7, kHammingGen)).exact());

    CyclicCode bch15 = syncro::bch(4, 5);  // [15,7] with true distance 5
    CHECK(bch15.dim() == 7);
    CHECK(syncro::min_distance(bch15).value == 5);

    CyclicCode bch31 = syncro::bch(5, 7);  // [31,16] designed 7
    CHECK(bch31.dim() == 16);
    syncro::DistanceReport r = syncro::min_distance(bch31, 1ull << 17);
    CHECK(r.exact());
    CHECK(r.value == 7);
}

TEST_CASE("gray-code kernel agrees with the serial reference") {
    for (const CyclicCode& code :
         {CyclicCode(7, kHammingGen), syncro::bch(4, 5), syncro::bch(5, 7),
          syncro::bch(5, 11), CyclicCode(15, p(0b110101))}) {
        CHECK(syncro::min_distance(code).value ==
              syncro::min_weight_serial(code));
    }
}

TEST_CASE("min_distance lower-bound sweep") {
    CyclicCode bch31 = syncro::bch(5, 3);  // [31,26], distance 3
    // budget too small for 2^26 enumeration; sweep words of weight < 3
    syncro::DistanceReport r = syncro::min_distance(bch31, 1 << 12, 3);
    CHECK(r.kind == syncro::DistanceReport::Kind::lower_bound);
    CHECK(r.value == 3);
    // claiming 4 must be refuted exactly: a weight-3 codeword exists
    syncro::DistanceReport r2 = syncro::min_distance(bch31, 1 << 14, 4);
    CHECK(r2.exact());
    CHECK(r2.value == 3);
    // no claim, no budget: explicit unknown
    syncro::DistanceReport r3 = syncro::min_distance(bch31, 1 << 12);
    CHECK(r3.kind == syncro::DistanceReport::Kind::unknown);
}

TEST_CASE("syndrome decoder corrects within radius") {
    CyclicCode hamming(7, kHammingGen);
    syncro::SyndromeDecoder dec(hamming, 1);
    for (std::uint64_t m = 0; m < 16; ++m) {
        Poly2 cw = hamming.encode(p(m));
        auto clean = dec.decode(cw);
        REQUIRE(clean.has_value());
        CHECK(clean->error == Poly2::zero());
        for (int bit = 0; bit < 7; ++bit) {
            Poly2 received = cw + Poly2::monomial(std::size_t(bit));
            auto fixed = dec.decode(received);
            REQUIRE(fixed.has_value());
            CHECK(fixed->corrected == cw);
            CHECK(fixed->error == Poly2::monomial(std::size_t(bit)));
        }
    }
}

TEST_CASE("syndrome decoder on BCH codes") {
    CyclicCode bch31 = syncro::bch(5, 3);  // [31,26,3]
    syncro::SyndromeDecoder dec(bch31, 1);
    Poly2 cw = bch31.encode(Poly2::one());
    auto fixed = dec.decode(cw + Poly2::monomial(17));
    REQUIRE(fixed.has_value());
    CHECK(fixed->error == Poly2::monomial(17));
    CHECK(fixed->corrected == cw);

    // exhaustive decode identity over all codewords and weight <= 2 errors
    CyclicCode bch15 = syncro::bch(4, 5);  // [15,7,5]
    syncro::SyndromeDecoder dec15(bch15, 2);
    std::vector<Poly2> errors{Poly2::zero()};
    for (int i = 0; i < 15; ++i) {
        errors.push_back(Poly2::monomial(std::size_t(i)));
        for (int j = i + 1; j < 15; ++j)
            errors.push_back(Poly2::monomial(std::size_t(i)) +
                             Poly2::monomial(std::size_t(j)));
    }
    for (std::uint64_t m = 0; m < (1u << 7); ++m) {
        Poly2 cw15 = bch15.encode(p(m));
        for (const Poly2& e : errors) {
            auto out = dec15.decode(cw15 + e);
            REQUIRE(out.has_value());
            CHECK(out->error == e);
        }
    }
}

TEST_CASE("syndrome decoder rejects an oversized table") {
    CyclicCode bch31 = syncro::bch(5, 7);
    CHECK_THROWS_WITH_AS(syncro::SyndromeDecoder(bch31, 3, 100),
                         doctest::Contains("entries"), std::invalid_argument);
}
