#pragma once

#include <cstddef>
#include <optional>

#include "trapeze/complexity.hpp"
#include "trapeze/word.hpp"

namespace trapeze {

/// Shape of a generalized trapezoidal complexity graph: C rises by one per
/// step on [1, m], is flat on [m, M] at `plateau_height`, and falls by one
/// per step on [M, |w|].
struct TrapezoidParams {
    std::size_t m = 0;
    std::size_t M = 0;
    std::size_t plateau_height = 0;
    friend bool operator==(const TrapezoidParams&, const TrapezoidParams&) = default;
};

/// w = r·v·s where r (s) is the longest prefix (suffix) made of letters
/// that occur exactly once in w. When every letter of w occurs once,
/// v = w and r = s = ε.
struct HeartDecomposition {
    Word prefix;
    Word heart;
    Word suffix;
};

/// Reference predicate: reads the trapezoid shape off the complexity
/// profile. One-letter words report (1, |w|).
std::optional<TrapezoidParams> is_gt_by_definition(const Word& w);
std::optional<TrapezoidParams> trapezoid_shape(const ComplexityProfile& profile,
                                               std::size_t alphabet_size);
inline bool is_gt(const Word& w) { return is_gt_by_definition(w).has_value(); }

HeartDecomposition heart_decompose(const Word& w);
Word heart(const Word& w);

/// |w| = R + K + |Alph(w)| − 2.
bool satisfies_rk_condition(const Word& w);

/// The profile climbs by one per step on [1, m], stays flat on [m, M] and
/// falls by one per step on [M, |w|], where m = min(R, K), M = max(R, K).
/// Requires at least two letters.
bool rk_profile_check(const Word& w);

/// |w| = R_v + K_v + |Alph(w)| − 2 for the heart v.
bool is_gt_by_heart(const Word& w);

/// |w| = L_v + H_v + |Alph(w)| − 2 for the heart v.
bool is_gt_by_heart_lh(const Word& w);

/// K_v = R_v for the heart v. Requires at least two letters.
bool is_triangular(const Word& w);

/// Tests every distinct factor of a GT-word for GT-ness; throws
/// NotGtError when w itself is not GT.
bool gt_factor_closure_check(const Word& w);

} // namespace trapeze
