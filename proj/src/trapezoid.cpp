#include "trapeze/trapezoid.hpp"

#include <algorithm>

namespace trapeze {

std::optional<TrapezoidParams> trapezoid_shape(const ComplexityProfile& profile,
                                               std::size_t alphabet_size) {
    const auto& c = profile.values;
    const std::size_t n = profile.word_length;
    if (n == 0 || c.size() != n + 1 || c[0] != 1) return std::nullopt;
    if (alphabet_size == 1) return TrapezoidParams{1, n, 1};
    if (c[1] != alphabet_size) return std::nullopt;

    std::size_t m = 1;
    while (m < n && c[m + 1] == c[m] + 1) ++m;
    std::size_t M = m;
    while (M < n && c[M + 1] == c[M]) ++M;
    for (std::size_t i = M; i < n; ++i)
        if (c[i + 1] + 1 != c[i]) return std::nullopt;
    return TrapezoidParams{m, M, c[m]};
}

std::optional<TrapezoidParams> is_gt_by_definition(const Word& w) {
    if (w.empty()) throw EmptyWordError("is_gt_by_definition");
    return trapezoid_shape(complexity_profile(w), alphabet_size(w));
}

HeartDecomposition heart_decompose(const Word& w) {
    if (w.empty()) throw EmptyWordError("heart_decompose");
    const auto counts = letter_counts(w);
    auto once = [&](Symbol s) { return counts[s.id] == 1; };

    std::size_t r = 0;
    while (r < w.size() && once(w[r])) ++r;
    if (r == w.size()) return {Word{}, w, Word{}};

    std::size_t s = 0;
    while (s < w.size() && once(w[w.size() - 1 - s])) ++s;
    return {w.prefix(r), w.substr(r, w.size() - r - s), w.suffix(s)};
}

Word heart(const Word& w) {
    return heart_decompose(w).heart;
}

bool satisfies_rk_condition(const Word& w) {
    if (w.empty()) throw EmptyWordError("satisfies_rk_condition");
    const auto p = right_parameters(w);
    return w.size() + 2 == p.R + p.K + alphabet_size(w);
}

bool rk_profile_check(const Word& w) {
    const std::size_t a = alphabet_size(w);
    if (a < 2) throw AlphabetTooSmallError("rk_profile_check: needs at least two distinct letters");
    const auto p = right_parameters(w);
    const std::size_t m = std::min(p.R, p.K), M = std::max(p.R, p.K);
    const auto c = complexity_profile(w).values;
    if (M > w.size()) return false;
    for (std::size_t i = 1; i <= m; ++i)
        if (c[i] != a + i - 1) return false;
    for (std::size_t i = m; i < M; ++i)
        if (c[i + 1] != c[i]) return false;
    for (std::size_t i = M; i < w.size(); ++i)
        if (c[i + 1] + 1 != c[i]) return false;
    return true;
}

bool is_gt_by_heart(const Word& w) {
    if (w.empty()) throw EmptyWordError("is_gt_by_heart");
    const auto p = right_parameters(heart(w));
    return w.size() + 2 == p.R + p.K + alphabet_size(w);
}

bool is_gt_by_heart_lh(const Word& w) {
    if (w.empty()) throw EmptyWordError("is_gt_by_heart_lh");
    // L and H of v are R and K of its reversal.
    const auto p = right_parameters(reverse(heart(w)));
    return w.size() + 2 == p.R + p.K + alphabet_size(w);
}

bool is_triangular(const Word& w) {
    if (alphabet_size(w) < 2)
        throw AlphabetTooSmallError("is_triangular: needs at least two distinct letters");
    const auto p = right_parameters(heart(w));
    return p.R == p.K;
}

bool gt_factor_closure_check(const Word& w) {
    if (!is_gt(w)) throw NotGtError("gt_factor_closure_check: '" + w.str() + "' is not a GT-word");
    for (const auto& f : all_factors(w))
        if (!is_gt(f)) return false;
    return true;
}

} // namespace trapeze
