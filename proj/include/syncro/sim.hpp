#ifndef SYNCRO_SIM_HPP
#define SYNCRO_SIM_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "syncro/scheme.hpp"

namespace syncro {

using BitVec = std::vector<std::uint8_t>;

/// One encoded block, extended with wraparound ancilla bits:
/// bits = (last a_l bits of core) || core || (first a_r bits of core),
/// where core = v + g(x) for a codeword v of C. Equivalently, bit i of the
/// frame is core[(i - a_l) mod n].
struct Frame {
    const SyncScheme* scheme = nullptr;
    int a_l = 0;
    int a_r = 0;
    Poly2 core;
    BitVec bits;
};

/// Requires the message to be a codeword of C (divisible by its generator)
/// and a_l + a_r <= tolerance - 1.
Frame encode_frame(const SyncScheme& scheme, int a_l, int a_r,
                   const Poly2& codeword_of_c);

/// Concatenation; every frame must share (scheme, a_l, a_r).
BitVec make_stream(const std::vector<Frame>& frames);

/// Misalignment plus bit flips. shift is the window offset in stream
/// positions, positive meaning the probing window sits to the right of the
/// true block boundary; the RNG seed that produced the flips travels along
/// for reproducibility.
struct ChannelEvent {
    int shift = 0;
    std::vector<std::size_t> flips;
    std::uint64_t seed = 0;
};

BitVec apply_channel(const BitVec& stream, const ChannelEvent& event);

enum class SyncFailure { none, excess_errors, shift_inconsistency,
                         decode_failure };

struct SyncDecodeReport {
    bool success = false;
    SyncFailure reason = SyncFailure::none;
    int recovered_shift = 0;
    /// The representative of x^recovered_shift mod f(x); negative shifts
    /// reduce through x^(ord(f) - |shift|).
    Poly2 remainder;
    /// Corrections applied by the middle, first-n and last-n passes.
    std::array<int, 3> bit_corrections{0, 0, 0};
    /// Corrected frame bits, valid on success.
    BitVec frame;
};

/// Full synchronization recovery on a window of n + a_l + a_r received bits
/// starting at window_start: correct the middle n bits with D's decoder,
/// divide by g(x) and reduce the quotient mod f(x) to identify the shift,
/// realign, then correct the first and last n bits of the true frame.
/// The received span must cover the realigned frame on both sides (the
/// stream is expected to carry neighbor frames; padding is refused).
SyncDecodeReport sync_decode(const SyncScheme& scheme,
                             const SyndromeDecoder& decoder, int a_l, int a_r,
                             const BitVec& received, std::size_t window_start);

struct BatchOptions {
    int a_l = 0;
    int a_r = 0;
    int trials_per_shift = 0;
    int error_weight = 0;
    std::uint64_t seed = 0;
};

struct TrialRecord {
    int index = 0;
    int shift = 0;
    int trial = 0;
    std::uint64_t seed = 0;
    std::vector<std::size_t> flips;  // frame-relative positions
    int recovered_shift = 0;
    bool decode_success = false;
    SyncFailure reason = SyncFailure::none;
    int bit_corrections = 0;
    /// Decode succeeded AND the recovered shift and corrected frame match
    /// the transmitted ground truth. Aggregates count this, so a decoder
    /// that silently mis-corrects is still reported as a failure.
    bool ground_truth_match = false;
};

struct BatchReport {
    BatchOptions options;
    std::vector<TrialRecord> trials;
    std::uint64_t successes = 0;
    double success_rate = 0.0;
};

/// One seeded trial: a three-frame stream, the middle frame probed at the
/// given shift, error_weight flips placed so that no n consecutive positions
/// carry more than bit_floor of them.
TrialRecord run_trial(const SyncScheme& scheme, const SyndromeDecoder& decoder,
                      int a_l, int a_r, int shift, int error_weight,
                      std::uint64_t trial_seed);

/// All shifts in [-a_l, a_r] times trials_per_shift. Trials are independent;
/// the parallel path fans them across OpenMP threads and the record order is
/// by trial index either way.
BatchReport run_batch(const SyncScheme& scheme, const BatchOptions& options,
                      bool parallel = true);

std::uint64_t splitmix64(std::uint64_t v);

}  // namespace syncro

#endif
