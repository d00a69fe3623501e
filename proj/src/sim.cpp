#include "syncro/sim.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace syncro {

namespace {

Poly2 word_at(const BitVec& bits, std::size_t start, std::size_t len) {
    Poly2 p;
    for (std::size_t i = 0; i < len; ++i)
        if (bits[start + i]) p.set_coeff(i, true);
    return p;
}

void apply_error(BitVec& bits, std::size_t offset, const Poly2& error) {
    if (error.is_zero()) return;
    for (std::size_t i = 0; i <= std::size_t(error.degree()); ++i)
        if (error.coeff(i)) bits[offset + i] ^= 1;
}

// sorted positions satisfy the Lemma-1 budget iff no window of n consecutive
// positions holds more than t of them
bool within_error_budget(std::vector<std::size_t> positions, int n, int t) {
    std::sort(positions.begin(), positions.end());
    for (std::size_t i = 0; i + std::size_t(t) < positions.size(); ++i)
        if (positions[i + std::size_t(t)] - positions[i] < std::size_t(n))
            return false;
    return true;
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t v) {
    v += 0x9e3779b97f4a7c15ull;
    v = (v ^ (v >> 30)) * 0xbf58476d1ce4e5b9ull;
    v = (v ^ (v >> 27)) * 0x94d049bb133111ebull;
    return v ^ (v >> 31);
}

Frame encode_frame(const SyncScheme& scheme, int a_l, int a_r,
                   const Poly2& codeword_of_c) {
    if (a_l < 0 || a_r < 0)
        throw std::invalid_argument("frame: negative shift allowance");
    if (std::uint64_t(a_l) + std::uint64_t(a_r) >= scheme.tolerance)
        throw std::invalid_argument(
            "frame: a_l + a_r must be below ord(f) = " +
            std::to_string(scheme.tolerance));
    const int n = scheme.params.n;
    if (codeword_of_c.degree() >= n)
        throw std::invalid_argument("frame: message degree must be < n");
    if (!(codeword_of_c % scheme.c.generator()).is_zero())
        throw std::invalid_argument("frame: message is not a codeword of C");

    Frame frame{&scheme, a_l, a_r, codeword_of_c + scheme.d.generator(), {}};
    frame.bits.resize(std::size_t(n + a_l + a_r));
    for (std::size_t i = 0; i < frame.bits.size(); ++i) {
        std::size_t core_index =
            std::size_t((int(i) - a_l + n) % n);
        frame.bits[i] = frame.core.coeff(core_index) ? 1 : 0;
    }
    return frame;
}

BitVec make_stream(const std::vector<Frame>& frames) {
    BitVec stream;
    for (const Frame& f : frames) {
        if (f.scheme != frames.front().scheme || f.a_l != frames.front().a_l ||
            f.a_r != frames.front().a_r)
            throw std::invalid_argument(
                "stream: frames disagree on (scheme, a_l, a_r)");
        stream.insert(stream.end(), f.bits.begin(), f.bits.end());
    }
    return stream;
}

BitVec apply_channel(const BitVec& stream, const ChannelEvent& event) {
    BitVec out = stream;
    for (std::size_t p : event.flips) {
        if (p >= out.size())
            throw std::invalid_argument("channel: flip position " +
                                        std::to_string(p) +
                                        " outside the stream");
        out[p] ^= 1;
    }
    return out;
}

SyncDecodeReport sync_decode(const SyncScheme& scheme,
                             const SyndromeDecoder& decoder, int a_l, int a_r,
                             const BitVec& received,
                             std::size_t window_start) {
    const int n = scheme.params.n;
    const std::size_t N = std::size_t(n + a_l + a_r);
    if (a_l < 0 || a_r < 0 ||
        std::uint64_t(a_l) + std::uint64_t(a_r) >= scheme.tolerance)
        throw std::invalid_argument("sync_decode: invalid shift allowances");
    if (!(decoder.code() == scheme.d))
        throw std::invalid_argument("sync_decode: decoder is not for D");
    if (window_start < std::size_t(a_r) ||
        received.size() < window_start + N + std::size_t(a_l))
        throw std::invalid_argument(
            "sync_decode: received span cannot cover realignment; neighbor "
            "frames are required, padding is refused");

    SyncDecodeReport report;

    // pass 1: bit-correct the middle n bits
    Poly2 middle = word_at(received, window_start + std::size_t(a_l),
                           std::size_t(n));
    auto mid = decoder.decode(middle);
    if (!mid) {
        report.reason = SyncFailure::excess_errors;
        return report;
    }
    report.bit_corrections[0] = int(mid->error.weight());

    // sync syndrome: quotient by g(x), then remainder mod f(x). A window
    // right-shifted by a holds the content rotated left, so the raw
    // remainder is the representative of x^(-a) = x^(ord(f) - a) mod f.
    Poly2 quotient = mid->corrected / scheme.d.generator();
    Poly2 raw = quotient % scheme.f;

    const std::uint64_t ord = scheme.tolerance;
    int recovered = a_l + a_r + 1;  // sentinel
    Poly2 candidate =
        powmod(Poly2::x(), (ord - std::uint64_t(a_r) % ord) % ord, scheme.f);
    for (int s = a_r; s >= -a_l; --s) {
        if (candidate == raw) {
            recovered = s;
            break;
        }
        candidate = (candidate << 1) % scheme.f;
    }
    if (recovered > a_r) {
        report.reason = SyncFailure::shift_inconsistency;
        return report;
    }
    report.recovered_shift = recovered;
    report.remainder = powmod(
        Poly2::x(),
        recovered >= 0 ? std::uint64_t(recovered)
                       : ord - std::uint64_t(-recovered),
        scheme.f);

    // realign to the recovered boundary and copy the frame
    std::size_t frame_start =
        std::size_t(std::int64_t(window_start) - recovered);
    report.frame.assign(received.begin() + std::ptrdiff_t(frame_start),
                        received.begin() + std::ptrdiff_t(frame_start + N));
    apply_error(report.frame, std::size_t(a_l + recovered), mid->error);

    // passes 2 and 3: first n and last n bits of the true frame
    Poly2 first = word_at(report.frame, 0, std::size_t(n));
    auto f1 = decoder.decode(first);
    if (!f1) {
        report.reason = SyncFailure::decode_failure;
        return report;
    }
    apply_error(report.frame, 0, f1->error);
    report.bit_corrections[1] = int(f1->error.weight());

    Poly2 last = word_at(report.frame, std::size_t(a_l + a_r), std::size_t(n));
    auto f2 = decoder.decode(last);
    if (!f2) {
        report.reason = SyncFailure::decode_failure;
        return report;
    }
    apply_error(report.frame, std::size_t(a_l + a_r), f2->error);
    report.bit_corrections[2] = int(f2->error.weight());

    // the three passes may overlap; conflicting corrections leave some
    // window with a nonzero syndrome
    for (std::size_t off : {std::size_t(0), std::size_t(a_l + recovered),
                            std::size_t(a_l + a_r)}) {
        if (!scheme.d.contains_word(word_at(report.frame, off,
                                            std::size_t(n)))) {
            report.reason = SyncFailure::shift_inconsistency;
            return report;
        }
    }

    report.success = true;
    return report;
}

namespace {

Poly2 random_codeword(const SyncScheme& scheme, std::mt19937_64& rng) {
    const int k1 = scheme.c.dim();
    std::vector<std::uint64_t> words(std::size_t(k1 + 63) / 64, 0);
    for (auto& w : words) w = rng();
    int top = k1 % 64;
    if (top != 0) words.back() &= (std::uint64_t(1) << top) - 1;
    return scheme.c.encode(Poly2::from_words(std::move(words)));
}

}  // namespace

TrialRecord run_trial(const SyncScheme& scheme, const SyndromeDecoder& decoder,
                      int a_l, int a_r, int shift, int error_weight,
                      std::uint64_t trial_seed) {
    if (shift < -a_l || shift > a_r)
        throw std::invalid_argument("trial: shift outside [-a_l, a_r]");
    const int n = scheme.params.n;
    const std::size_t N = std::size_t(n + a_l + a_r);
    if (error_weight < 0 || std::size_t(error_weight) > N)
        throw std::invalid_argument("trial: error weight exceeds the frame");
    std::mt19937_64 rng(trial_seed);

    std::vector<Frame> frames;
    for (int i = 0; i < 3; ++i)
        frames.push_back(
            encode_frame(scheme, a_l, a_r, random_codeword(scheme, rng)));
    BitVec stream = make_stream(frames);
    const std::size_t frame_start = N;

    // flips land inside the probed frame at distinct positions, respecting
    // the Lemma-1 window budget when the geometry allows it; an error weight
    // the budget cannot accommodate goes through unconstrained, modelling an
    // over-budget channel
    std::uniform_int_distribution<std::size_t> pick(0, N - 1);
    std::vector<std::size_t> flips;
    for (int attempt = 0; attempt < 200; ++attempt) {
        flips.clear();
        while (int(flips.size()) < error_weight) {
            std::size_t p = pick(rng);
            if (std::find(flips.begin(), flips.end(), p) == flips.end())
                flips.push_back(p);
        }
        if (within_error_budget(flips, n, scheme.params.bit_floor)) break;
    }

    TrialRecord record;
    record.seed = trial_seed;
    record.shift = shift;
    record.flips = flips;

    ChannelEvent event{shift, {}, trial_seed};
    for (std::size_t p : flips) event.flips.push_back(frame_start + p);
    BitVec received = apply_channel(stream, event);

    std::size_t window_start = std::size_t(std::int64_t(frame_start) + shift);
    SyncDecodeReport report =
        sync_decode(scheme, decoder, a_l, a_r, received, window_start);

    record.recovered_shift = report.recovered_shift;
    record.decode_success = report.success;
    record.reason = report.reason;
    record.bit_corrections = report.bit_corrections[0] +
                             report.bit_corrections[1] +
                             report.bit_corrections[2];
    record.ground_truth_match = report.success &&
                                report.recovered_shift == shift &&
                                report.frame == frames[1].bits;
    return record;
}

BatchReport run_batch(const SyncScheme& scheme, const BatchOptions& options,
                      bool parallel) {
    if (options.trials_per_shift < 1)
        throw std::invalid_argument("batch: trials_per_shift must be >= 1");
    SyndromeDecoder decoder(scheme.d, scheme.params.bit_floor);

    const int shifts = options.a_l + options.a_r + 1;
    const std::size_t total =
        std::size_t(shifts) * std::size_t(options.trials_per_shift);
    BatchReport report;
    report.options = options;
    report.trials.resize(total);

#pragma omp parallel for schedule(dynamic, 16) if (parallel)
    for (std::size_t idx = 0; idx < total; ++idx) {
        int shift = int(idx / std::size_t(options.trials_per_shift)) -
                    options.a_l;
        int trial = int(idx % std::size_t(options.trials_per_shift));
        std::uint64_t seed =
            splitmix64(options.seed ^ (0x9e3779b97f4a7c15ull * (idx + 1)));
        TrialRecord rec = run_trial(scheme, decoder, options.a_l, options.a_r,
                                    shift, options.error_weight, seed);
        rec.index = int(idx);
        rec.trial = trial;
        report.trials[idx] = std::move(rec);
    }

    for (const TrialRecord& rec : report.trials)
        if (rec.ground_truth_match) ++report.successes;
    report.success_rate =
        double(report.successes) / double(report.trials.size());
    return report;
}

}  // namespace syncro
