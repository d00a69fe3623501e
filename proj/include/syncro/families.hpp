#ifndef SYNCRO_FAMILIES_HPP
#define SYNCRO_FAMILIES_HPP

#include <optional>
#include <string>
#include <utility>

#include "syncro/cyclic.hpp"
#include "syncro/field.hpp"

namespace syncro {

/// Punctured Reed-Muller code R(r,m)* of length 2^m - 1: the generator is
/// the product of the minimal polynomials M_s over canonical representatives
/// s with 1 <= w2(s) <= m-r-1. Construction asserts the dimension identity
/// k = sum_{i<=r} C(m,i) and fails loudly on any mismatch.
CyclicCode punctured_rm(int r, int m);

/// Generator of the dual of R(r,m)* by the closed formula
/// (x+1) * prod_{1 <= w2(s) <= r} M_s(x).
Poly2 punctured_rm_dual_gen(int r, int m);

/// Primitive BCH code of length 2^m - 1 and designed distance d: generator
/// is the product of the distinct M_s over the cosets of b, ..., b+d-2.
/// Narrow-sense when b = 1.
CyclicCode bch(int m, int d, int b = 1);

/// Closed-form dual-containing test for primitive narrow-sense BCH codes:
/// true iff 2 <= d <= 2^ceil(m/2) - 1. Only defined for b = 1.
bool bch_dual_containing_predicted(int m, int d);

/// Nested pair C = R(r,m)*, D = BCH(m, 2^(m-r)-1) for ceil(m/2) < r < m-2,
/// m >= 7. Verifies dual-containment of C, the containment C in D, and
/// strictness, failing with the violated condition otherwise.
std::pair<CyclicCode, CyclicCode> rm_bch_chain(int r, int m);

/// Family metadata kept separate from the code value, for table emission.
struct CodeDescriptor {
    std::string family;  // "rm*", "bch", or "cyclic"
    int m = 0;
    std::optional<int> r;
    std::optional<int> d;
    std::optional<int> b;
    int n = 0;
    int k = 0;
    Poly2 generator;
};

CodeDescriptor describe_rm(int r, int m, const CyclicCode& code);
CodeDescriptor describe_bch(int m, int d, int b, const CyclicCode& code);
CodeDescriptor describe_cyclic(const CyclicCode& code);

/// Designed distance of R(r,m)*: 2^(m-r) - 1 (also its true distance).
int rm_designed_distance(int r, int m);

}  // namespace syncro

#endif
