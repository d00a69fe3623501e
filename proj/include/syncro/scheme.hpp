#ifndef SYNCRO_SCHEME_HPP
#define SYNCRO_SCHEME_HPP

#include <cstdint>
#include <optional>

#include "syncro/cyclic.hpp"
#include "syncro/factor.hpp"

namespace syncro {

enum class DistanceMode { exact, designed };

/// Parameters of the quantum synchronizable code derived from a validated
/// pair. max_shift_sum is the exact misalignment budget ord(f) - 1;
/// legacy_max_shift_sum is the older deg(f) - 1 bound it improves on.
struct QsyncParams {
    int n = 0;
    int logical = 0;  // 2*k1 - n
    std::uint64_t max_shift_sum = 0;
    int legacy_max_shift_sum = 0;
    int phase_floor = 0;  // floor((d1-1)/2), d1 from C
    int bit_floor = 0;    // floor((d2-1)/2), d2 from D
    DistanceMode distance_mode = DistanceMode::designed;
    int d1 = 0;
    int d2 = 0;
};

/// A validated nested pair: C dual-containing, C strictly inside D, both of
/// odd length n. f(x) = h(x)/g(x) has degree k2 - k1, divides x^n + 1, and
/// its order is the scheme's misalignment tolerance.
struct SyncScheme {
    CyclicCode c;
    CyclicCode d;
    Poly2 f;
    Factorization f_factors;
    std::uint64_t tolerance = 0;  // ord(f)
    QsyncParams params;
};

struct SchemeOptions {
    DistanceMode mode = DistanceMode::designed;
    std::uint64_t budget = kDefaultBudget;
    std::optional<int> designed_d1;
    std::optional<int> designed_d2;
};

/// Rejects with the violated condition named: C not dual-containing, C not
/// inside D, k1 = k2, or 2*k1 - n < 0. In exact mode both true distances are
/// enumerated when they fit the budget; otherwise the designed distances are
/// used and the result is flagged designed.
SyncScheme build_scheme(const CyclicCode& c, const CyclicCode& d,
                        const SchemeOptions& options = {});

/// The older bound on the shift sum: k2 - k1 - 1.
int legacy_tolerance(const SyncScheme& scheme);

/// True iff x^0, ..., x^L have pairwise distinct remainders mod f.
bool unique_remainders_check(const Poly2& f, std::uint64_t L);

/// Largest-tolerance family instance: n = 2^m - 1 prime, ceil(m/2) < r < m-2,
/// m >= 7. The published logical-qubit count for this family, sum of
/// binomials C(m, 0..r), disagrees with 2*k1 - n; the result carries the
/// computed value and raises logical_mismatch instead of guessing.
struct Theorem8Result {
    SyncScheme scheme;
    long long stated_logical = 0;
    bool logical_mismatch = false;
};

Theorem8Result theorem8_params(int r, int m);

}  // namespace syncro

#endif
