#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "syncro/families.hpp"
#include "syncro/serde.hpp"
#include "syncro/sim.hpp"

using syncro::BatchOptions;
using syncro::BitVec;
using syncro::ChannelEvent;
using syncro::Frame;
using syncro::Poly2;
using syncro::SyncScheme;

namespace {

SyncScheme scheme31() {
    syncro::SchemeOptions opt;
    opt.designed_d1 = 7;
    opt.designed_d2 = 3;
    return syncro::build_scheme(syncro::bch(5, 7), syncro::bch(5, 3), opt);
}

SyncScheme scheme127() {
    syncro::SchemeOptions opt;
    opt.designed_d1 = 7;
    opt.designed_d2 = 3;
    return syncro::build_scheme(syncro::bch(7, 7), syncro::bch(7, 3), opt);
}

Poly2 word_of(const BitVec& bits, std::size_t start, std::size_t len) {
    Poly2 p;
    for (std::size_t i = 0; i < len; ++i)
        if (bits[start + i]) p.set_coeff(i, true);
    return p;
}

}  // namespace

TEST_CASE("encode_frame") {
    SyncScheme s = scheme31();

    // zero codeword: core is g itself, bits wrap it around
    Frame f = syncro::encode_frame(s, 15, 15, Poly2::zero());
    CHECK(f.core == s.d.generator());
    CHECK(f.bits.size() == 61);
    for (int i = 0; i < 61; ++i)
        CHECK(int(f.bits[std::size_t(i)]) ==
              int(f.core.coeff(std::size_t((i - 15 + 31) % 31))));

    // explicit wraparound rule on a nontrivial codeword
    Frame g = syncro::encode_frame(s, 3, 5, s.c.encode(Poly2::from_bits(9)));
    CHECK(g.bits.size() == 39);
    for (int i = 0; i < 3; ++i)
        CHECK(g.bits[std::size_t(i)] ==
              g.core.coeff(std::size_t(31 - 3 + i)));
    for (int i = 0; i < 31; ++i)
        CHECK(g.bits[std::size_t(3 + i)] == g.core.coeff(std::size_t(i)));
    for (int i = 0; i < 5; ++i)
        CHECK(g.bits[std::size_t(3 + 31 + i)] == g.core.coeff(std::size_t(i)));
    // core - g is a codeword of C
    CHECK((g.core + s.d.generator()) % s.c.generator() == Poly2::zero());

    // allowance at the tolerance is rejected
    CHECK_THROWS_WITH_AS(syncro::encode_frame(s, 16, 15, Poly2::zero()),
                         doctest::Contains("ord(f)"), std::invalid_argument);
    // non-codeword message is rejected
    CHECK_THROWS_AS(syncro::encode_frame(s, 1, 1, Poly2::x()),
                    std::invalid_argument);
}

TEST_CASE("make_stream") {
    SyncScheme s = scheme31();
    Frame f1 = syncro::encode_frame(s, 15, 15, Poly2::zero());
    Frame f2 = syncro::encode_frame(s, 15, 15, s.c.encode(Poly2::one()));
    Frame f3 = syncro::encode_frame(s, 15, 15, s.c.encode(Poly2::x()));

    BitVec one = syncro::make_stream({f1});
    CHECK(one == f1.bits);

    BitVec three = syncro::make_stream({f1, f2, f3});
    CHECK(three.size() == 183);
    CHECK(BitVec(three.begin() + 61, three.begin() + 122) == f2.bits);

    Frame other = syncro::encode_frame(s, 14, 15, Poly2::zero());
    CHECK_THROWS_AS(syncro::make_stream({f1, other}), std::invalid_argument);
}

TEST_CASE("apply_channel") {
    BitVec stream(50, 0);
    CHECK(syncro::apply_channel(stream, ChannelEvent{}) == stream);

    ChannelEvent twice{0, {7, 7}, 0};
    CHECK(syncro::apply_channel(stream, twice) == stream);

    ChannelEvent once{0, {7}, 0};
    BitVec flipped = syncro::apply_channel(stream, once);
    int distance = 0;
    for (std::size_t i = 0; i < stream.size(); ++i)
        distance += int(stream[i] != flipped[i]);
    CHECK(distance == 1);

    CHECK_THROWS_AS(syncro::apply_channel(stream, ChannelEvent{0, {50}, 0}),
                    std::invalid_argument);
}

TEST_CASE("error-free decode recovers the shift and the remainder") {
    SyncScheme s = scheme31();
    syncro::SyndromeDecoder dec(s.d, s.params.bit_floor);
    std::mt19937_64 rng(99);

    for (int shift : {-15, -2, -1, 0, 1, 2, 7, 15}) {
        syncro::TrialRecord rec =
            syncro::run_trial(s, dec, 15, 15, shift, 0, rng());
        CHECK(rec.ground_truth_match);
        CHECK(rec.recovered_shift == shift);
        CHECK(rec.bit_corrections == 0);
    }
}

TEST_CASE("the reported remainder is the representative of x^a mod f") {
    SyncScheme s = scheme31();
    syncro::SyndromeDecoder dec(s.d, s.params.bit_floor);
    const int a_l = 15, a_r = 15;

    std::vector<Frame> frames;
    std::mt19937_64 rng(5);
    for (int i = 0; i < 3; ++i) {
        std::uint64_t msg = rng() & 0xffff;
        frames.push_back(
            syncro::encode_frame(s, a_l, a_r, s.c.encode(Poly2::from_bits(msg))));
    }
    BitVec stream = syncro::make_stream(frames);

    for (int a : {0, 2, -2, 9, -13, 15, -15}) {
        std::size_t ws = std::size_t(int(frames[0].bits.size()) + a);
        syncro::SyncDecodeReport rep =
            syncro::sync_decode(s, dec, a_l, a_r, stream, ws);
        REQUIRE(rep.success);
        CHECK(rep.recovered_shift == a);
        std::uint64_t e = a >= 0 ? std::uint64_t(a)
                                 : s.tolerance - std::uint64_t(-a);
        CHECK(rep.remainder == syncro::powmod(Poly2::x(), e, s.f));
        if (a == 0) CHECK(rep.remainder == Poly2::one());
        if (a == 2) CHECK(rep.remainder == (Poly2::x() * Poly2::x()) % s.f);
    }
}

TEST_CASE("quotient-then-remainder algebra on an error-free window") {
    // a window right-misaligned by a holds the content rotated left, so the
    // raw division pipeline lands on x^(-a): quotient mod f must equal
    // powmod(x, (ord - a) mod ord, f), computed independently
    SyncScheme s = scheme31();
    const int a_l = 15, a_r = 15;
    std::vector<Frame> frames;
    std::mt19937_64 rng(6);
    for (int i = 0; i < 3; ++i)
        frames.push_back(syncro::encode_frame(
            s, a_l, a_r, s.c.encode(Poly2::from_bits(rng() & 0xffff))));
    BitVec stream = syncro::make_stream(frames);

    for (int a = -a_l; a <= a_r; ++a) {
        std::size_t ws = std::size_t(int(frames[0].bits.size()) + a);
        Poly2 middle = word_of(stream, ws + std::size_t(a_l), 31);
        Poly2 quotient = middle / s.d.generator();
        CHECK((middle % s.d.generator()).is_zero());
        std::uint64_t e = (s.tolerance - std::uint64_t((a % 31 + 31) % 31)) %
                          s.tolerance;
        CHECK(quotient % s.f == syncro::powmod(Poly2::x(), e, s.f));
    }
}

TEST_CASE("orbit of the generator under x has full length") {
    for (SyncScheme s : {scheme31(), scheme127()}) {
        int n = s.params.n;
        Poly2 modulus = Poly2::monomial(std::size_t(n)) + Poly2::one();
        std::set<Poly2> orbit;
        Poly2 w = s.d.generator();
        do {
            orbit.insert(w);
            w = (w << 1) % modulus;
        } while (!orbit.count(w));
        CHECK(orbit.size() == std::size_t(n));
    }
}

TEST_CASE("exhaustive shifts with one in-budget flip per trial") {
    SyncScheme s = scheme31();
    syncro::SyndromeDecoder dec(s.d, s.params.bit_floor);
    for (int shift = -15; shift <= 15; ++shift) {
        for (int t = 0; t < 25; ++t) {
            std::uint64_t seed = syncro::splitmix64(
                0xabcull + std::uint64_t(t) * 31 + std::uint64_t(shift + 15));
            syncro::TrialRecord rec =
                syncro::run_trial(s, dec, 15, 15, shift, 1, seed);
            CHECK(rec.ground_truth_match);
            CHECK(rec.recovered_shift == shift);
        }
    }
}

TEST_CASE("two errors in the middle window never mis-succeed silently") {
    SyncScheme s = scheme31();
    syncro::SyndromeDecoder dec(s.d, s.params.bit_floor);
    const int a_l = 15, a_r = 15;
    std::mt19937_64 rng(123);

    int wrong_or_failed = 0;
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Frame> frames;
        for (int i = 0; i < 3; ++i)
            frames.push_back(syncro::encode_frame(
                s, a_l, a_r, s.c.encode(Poly2::from_bits(rng() & 0xffff))));
        BitVec stream = syncro::make_stream(frames);
        int a = int(rng() % 31) - 15;
        std::size_t ws = std::size_t(int(frames[0].bits.size()) + a);

        // bit_floor + 1 = 2 errors inside G_m
        std::size_t base = ws + std::size_t(a_l);
        std::size_t p1 = base + rng() % 31;
        std::size_t p2 = base + rng() % 31;
        while (p2 == p1) p2 = base + rng() % 31;
        BitVec received =
            syncro::apply_channel(stream, ChannelEvent{a, {p1, p2}, 0});

        syncro::SyncDecodeReport rep =
            syncro::sync_decode(s, dec, a_l, a_r, received, ws);
        bool honest_success = rep.success && rep.recovered_shift == a &&
                              rep.frame == frames[1].bits;
        CHECK_FALSE(honest_success);
        if (!rep.success || rep.recovered_shift != a) ++wrong_or_failed;
    }
    CHECK(wrong_or_failed > 0);
}

TEST_CASE("batches are deterministic and parallel-stable") {
    SyncScheme s = scheme31();
    BatchOptions opt{5, 5, 8, 1, 42};
    syncro::BatchReport serial = syncro::run_batch(s, opt, false);
    syncro::BatchReport parallel = syncro::run_batch(s, opt, true);
    REQUIRE(serial.trials.size() == parallel.trials.size());
    CHECK(serial.successes == parallel.successes);
    for (std::size_t i = 0; i < serial.trials.size(); ++i) {
        CHECK(serial.trials[i].seed == parallel.trials[i].seed);
        CHECK(serial.trials[i].flips == parallel.trials[i].flips);
        CHECK(serial.trials[i].recovered_shift ==
              parallel.trials[i].recovered_shift);
    }
    CHECK(syncro::batch_report_json(serial).dump() ==
          syncro::batch_report_json(parallel).dump());
    CHECK(serial.success_rate == 1.0);

    // same seed, byte-identical report; different seed, different trials
    syncro::BatchReport again = syncro::run_batch(s, opt, true);
    CHECK(syncro::batch_report_json(again).dump() ==
          syncro::batch_report_json(serial).dump());
}

TEST_CASE("over-budget error weight degrades the success rate") {
    SyncScheme s = scheme31();
    // five flips cannot respect "at most one per 31-bit window" in 61 bits
    BatchOptions opt{15, 15, 10, 5, 7};
    syncro::BatchReport report = syncro::run_batch(s, opt, true);
    CHECK(report.success_rate < 1.0);
    bool saw_failure_reason = false;
    for (const auto& t : report.trials)
        if (!t.ground_truth_match) saw_failure_reason = true;
    CHECK(saw_failure_reason);
}

TEST_CASE("batch spec JSON round trip") {
    syncro::json spec = {
        {"scheme",
         {{"C", {{"family", "bch"}, {"m", 5}, {"d", 7}}},
          {"D", {{"family", "bch"}, {"m", 5}, {"d", 3}}}}},
        {"a_l", 15},
        {"a_r", 15},
        {"trials", 4},
        {"error_weight", 1},
        {"seed", 99}};
    syncro::BatchSpec parsed = syncro::batch_spec_from_json(spec);
    CHECK(parsed.scheme.tolerance == 31);
    CHECK(parsed.options.a_l == 15);
    CHECK(parsed.options.trials_per_shift == 4);
    syncro::BatchReport report = syncro::run_batch(parsed.scheme,
                                                   parsed.options);
    CHECK(report.trials.size() == 31 * 4);
    CHECK(report.success_rate == 1.0);
    syncro::json out = syncro::batch_report_json(report);
    CHECK(out["aggregate"]["trials"] == 124);
    CHECK(out["trials"][0]["index"] == 0);
}
