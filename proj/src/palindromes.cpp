#include "trapeze/palindromes.hpp"

#include <algorithm>

#include "trapeze/eertree.hpp"

namespace trapeze {

namespace {

bool is_palindrome_range(const Word& w, std::size_t begin, std::size_t end) {
    while (begin + 1 < end) {
        if (w[begin] != w[end - 1]) return false;
        ++begin;
        --end;
    }
    return true;
}

// Occurrences of w[start, start + len) inside w[0, limit).
std::size_t count_within(const Word& w, std::size_t start, std::size_t len, std::size_t limit) {
    std::size_t hits = 0;
    for (std::size_t i = 0; i + len <= limit; ++i)
        if (std::equal(w.begin() + static_cast<std::ptrdiff_t>(i),
                       w.begin() + static_cast<std::ptrdiff_t>(i + len),
                       w.begin() + static_cast<std::ptrdiff_t>(start)))
            ++hits;
    return hits;
}

} // namespace

PalindromeIndex palindrome_index(const Word& w) {
    Eertree tree(w.view());
    PalindromeIndex idx;
    idx.per_length_counts.assign(w.size() + 1, 0);
    idx.distinct_palindromes.insert(Word{});
    idx.per_length_counts[0] = 1;
    const auto& nodes = tree.nodes();
    for (std::size_t v = 2; v < nodes.size(); ++v) {
        const auto len = static_cast<std::size_t>(nodes[v].len);
        const auto end = static_cast<std::size_t>(nodes[v].first_end) + 1;
        idx.distinct_palindromes.insert(w.substr(end - len, len));
        ++idx.per_length_counts[len];
    }
    idx.per_prefix_ups.reserve(w.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        idx.per_prefix_ups.push_back({static_cast<std::size_t>(tree.longest_suffix_lengths()[i]),
                                      static_cast<bool>(tree.created()[i])});
    return idx;
}

std::set<Word> palindromic_factors(const Word& w) {
    return palindrome_index(w).distinct_palindromes;
}

std::size_t palindrome_count(const Word& w) {
    return Eertree(w.view()).palindrome_count() + 1;
}

bool is_rich_by_count(const Word& w) {
    return palindrome_count(w) == w.size() + 1;
}

bool is_rich_by_ups(const Word& w) {
    // If any palindromic suffix of a prefix is unioccurrent then so is the
    // longest one, so that is the only candidate to test.
    for (std::size_t i = 1; i <= w.size(); ++i) {
        std::size_t len = i;
        while (!is_palindrome_range(w, i - len, i)) --len;
        if (count_within(w, i - len, len, i) != 1) return false;
    }
    return true;
}

bool is_rich_by_returns(const Word& w) {
    for (std::size_t len = 1; len <= w.size(); ++len) {
        std::set<Word> seen;
        for (std::size_t i = 0; i + len <= w.size(); ++i) {
            if (!is_palindrome_range(w, i, i + len)) continue;
            Word u = w.substr(i, len);
            if (!seen.insert(u).second) continue;
            for (const auto& r : complete_returns(w, u))
                if (!is_palindrome(r)) return false;
        }
    }
    return true;
}

std::vector<Word> complete_returns(const Word& w, const Word& u) {
    const auto pos = occurrence_positions(u, w);
    if (pos.empty())
        throw NotAFactorError("complete_returns: '" + u.str() + "' is not a factor of '" + w.str() + "'");
    std::vector<Word> out;
    std::set<Word> seen;
    for (std::size_t k = 1; k < pos.size(); ++k) {
        Word r = w.substr(pos[k - 1], pos[k] - pos[k - 1] + u.size());
        if (seen.insert(r).second) out.push_back(std::move(r));
    }
    return out;
}

Word longest_palindromic_prefix(const Word& w) {
    if (w.empty()) throw EmptyWordError("longest_palindromic_prefix");
    std::size_t len = w.size();
    while (!is_palindrome_range(w, 0, len)) --len;
    return w.prefix(len);
}

Word longest_palindromic_suffix(const Word& w) {
    if (w.empty()) throw EmptyWordError("longest_palindromic_suffix");
    std::size_t len = w.size();
    while (!is_palindrome_range(w, w.size() - len, w.size())) --len;
    return w.suffix(len);
}

bool palindromic_ends_unseparated(const Word& w) {
    if (w.empty()) return true;
    return longest_palindromic_prefix(w).size() + longest_palindromic_suffix(w).size() >= w.size();
}

} // namespace trapeze
