#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <vector>

#include "trapeze/word.hpp"

namespace trapeze {

/// C(0), C(1), ..., C(|w|) for a non-empty word.
struct ComplexityProfile {
    std::vector<std::size_t> values;
    std::size_t word_length = 0;

    std::size_t operator[](std::size_t n) const { return values.at(n); }
    friend bool operator==(const ComplexityProfile&, const ComplexityProfile&) = default;
};

/// Factor complexity via a suffix automaton, O(|w|·σ).
ComplexityProfile complexity_profile(const Word& w);

/// Number of distinct letters x with u·x a factor of w.
std::size_t right_valence(const Word& w, const Word& u);
/// Number of distinct letters x with x·u a factor of w.
std::size_t left_valence(const Word& w, const Word& u);

/// The four de Luca parameters.
///   R: smallest n ≥ 1 with no right special factor of length n.
///   K: length of the shortest unrepeated suffix.
///   L, H: the left-hand analogues (prefix instead of suffix).
struct Parameters {
    std::size_t R = 0, K = 0, L = 0, H = 0;
    friend bool operator==(const Parameters&, const Parameters&) = default;
};

Parameters parameters(const Word& w);

struct RightParameters {
    std::size_t R = 0, K = 0;
};
/// R and K only; one automaton instead of two.
RightParameters right_parameters(const Word& w);

struct SpecialFactor {
    Word factor;
    std::size_t valence = 0;
    friend bool operator==(const SpecialFactor&, const SpecialFactor&) = default;
};

struct SpecialFactorReport {
    std::size_t R = 0, K = 0, L = 0, H = 0;
    /// Keyed by length; ε appears at length 0 when it is special.
    /// Factors within a length are sorted.
    std::map<std::size_t, std::vector<SpecialFactor>> right_special_by_length;
    std::map<std::size_t, std::vector<SpecialFactor>> left_special_by_length;
    std::set<Word> bispecial;

    Parameters params() const { return {R, K, L, H}; }
};

SpecialFactorReport special_factor_report(const Word& w);

/// Smallest p ≥ 1 with w[i] = w[i + p] wherever both sides exist.
std::size_t minimal_period(const Word& w);

} // namespace trapeze
