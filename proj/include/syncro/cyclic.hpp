#ifndef SYNCRO_CYCLIC_HPP
#define SYNCRO_CYCLIC_HPP

#include <cstdint>
#include <optional>
#include <unordered_map>

#include "syncro/poly2.hpp"

namespace syncro {

/// Default cap on enumeration work (codeword scans, syndrome tables).
/// Overridable per call, via --budget on the CLI, or the SYNCROCODE_BUDGET
/// environment variable.
inline constexpr std::uint64_t kDefaultBudget = std::uint64_t(1) << 22;

/// A cyclic code of odd length n, the principal ideal generated by a divisor
/// of x^n - 1. Codewords are polynomials of degree < n; the bit-vector view
/// is the coefficient sequence.
class CyclicCode {
  public:
    /// Validates that gen divides x^n + 1 exactly; rejects otherwise,
    /// reporting the nonzero remainder.
    CyclicCode(int n, Poly2 gen);

    int length() const { return n_; }
    int dim() const { return k_; }
    const Poly2& generator() const { return gen_; }

    /// message * g(x); requires deg(message) < k.
    Poly2 encode(const Poly2& message) const;

    /// Dual code: generated by the reciprocal of (x^n + 1)/g(x).
    CyclicCode dual() const;

    /// Membership of an n-bit word.
    bool contains_word(const Poly2& word) const;

    bool operator==(const CyclicCode& rhs) const {
        return n_ == rhs.n_ && gen_ == rhs.gen_;
    }

  private:
    int n_;
    int k_;
    Poly2 gen_;
};

inline CyclicCode new_cyclic(int n, Poly2 gen) {
    return CyclicCode(n, std::move(gen));
}

/// inner is a subcode of outer iff outer's generator divides inner's.
bool is_subcode(const CyclicCode& inner, const CyclicCode& outer);

bool is_dual_containing(const CyclicCode& code);

struct DistanceReport {
    enum class Kind { exact, lower_bound, unknown };
    Kind kind = Kind::unknown;
    int value = 0;

    bool exact() const { return kind == Kind::exact; }
};

/// Minimum distance by codeword enumeration (Gray-code walk, OpenMP across
/// chunks) when 2^k fits the budget. Otherwise, when claimed >= 2 and the
/// sweep of all words lighter than claimed fits the budget, either finds the
/// true minimum below the claim (exact) or certifies d >= claimed
/// (lower_bound). Never reports a claimed distance as exact without
/// enumeration.
DistanceReport min_distance(const CyclicCode& code,
                            std::uint64_t budget = kDefaultBudget,
                            int claimed = 0);

/// Naive single-threaded reference: one full multiplication per message.
/// Kept for validating the Gray-code kernel; only sensible for small k.
int min_weight_serial(const CyclicCode& code);

/// Bounded-distance decoder backed by an eagerly built syndrome table
/// mapping remainder mod g(x) to the minimum-weight error pattern of weight
/// <= t. Immutable after construction and shareable across threads.
class SyndromeDecoder {
  public:
    SyndromeDecoder(const CyclicCode& code, int t,
                    std::uint64_t table_budget = kDefaultBudget);

    struct Result {
        Poly2 corrected;
        Poly2 error;
    };

    /// nullopt when the received word is farther than t from every codeword
    /// with a tabulated syndrome.
    std::optional<Result> decode(const Poly2& received) const;

    int radius() const { return t_; }
    const CyclicCode& code() const { return code_; }

  private:
    CyclicCode code_;
    int t_;
    std::unordered_map<Poly2, Poly2> table_;
};

}  // namespace syncro

#endif
