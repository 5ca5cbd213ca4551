#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "trapeze/word.hpp"

namespace trapeze {

struct PrefixUps {
    /// Length of the longest palindromic suffix of the prefix.
    std::size_t longest_palindromic_suffix = 0;
    /// Whether that suffix occurs exactly once in the prefix.
    bool unioccurrent = false;
};

struct PalindromeIndex {
    /// Includes ε.
    std::set<Word> distinct_palindromes;
    /// P(0), ..., P(|w|).
    std::vector<std::size_t> per_length_counts;
    /// Entry i − 1 describes the prefix of length i.
    std::vector<PrefixUps> per_prefix_ups;
};

PalindromeIndex palindrome_index(const Word& w);

/// Distinct palindromic factors including ε, built with an eertree.
std::set<Word> palindromic_factors(const Word& w);

/// |palindromic_factors(w)| without materialising the words.
std::size_t palindrome_count(const Word& w);

/// |w| + 1 distinct palindromic factors.
bool is_rich_by_count(const Word& w);
/// Every non-empty prefix has a unioccurrent palindromic suffix.
bool is_rich_by_ups(const Word& w);
/// Every complete return to a palindromic factor is a palindrome.
bool is_rich_by_returns(const Word& w);

inline bool is_rich(const Word& w) { return is_rich_by_count(w); }

/// Distinct complete returns to u in w, in order of first starting
/// position. Throws EmptyPatternError / NotAFactorError.
std::vector<Word> complete_returns(const Word& w, const Word& u);

Word longest_palindromic_prefix(const Word& w);
Word longest_palindromic_suffix(const Word& w);

/// The longest palindromic prefix p and suffix q of w satisfy
/// w = p = q, w = p·q, or overlap (|p| + |q| ≥ |w|).
bool palindromic_ends_unseparated(const Word& w);

} // namespace trapeze
