#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "trapeze/word.hpp"

namespace trapeze {

/// Palindromic tree (eertree). Nodes 0 and 1 are the roots of length -1
/// and 0; every other node is one distinct non-empty palindromic factor.
/// Appending a symbol creates at most one node, so a word of length n has
/// at most n non-empty palindromic factors.
class Eertree {
public:
    struct Node {
        std::int32_t len = 0;
        std::int32_t link = 0;
        /// End position (inclusive) where the palindrome first occurs.
        std::int32_t first_end = -1;
    };

    static constexpr std::int32_t kImaginaryRoot = 0;
    static constexpr std::int32_t kEmptyRoot = 1;

    explicit Eertree(std::span<const Symbol> text);

    const std::vector<Node>& nodes() const noexcept { return nodes_; }

    /// Number of distinct non-empty palindromic factors.
    std::size_t palindrome_count() const noexcept { return nodes_.size() - 2; }

    /// For each prefix length i ≥ 1 (index i − 1): length of the longest
    /// palindromic suffix of the prefix and whether that palindrome was new.
    const std::vector<std::int32_t>& longest_suffix_lengths() const noexcept { return suffix_len_; }
    const std::vector<bool>& created() const noexcept { return created_; }

private:
    std::vector<Node> nodes_;
    std::vector<std::vector<std::pair<Symbol, std::int32_t>>> edges_;
    std::vector<std::int32_t> suffix_len_;
    std::vector<bool> created_;

    std::int32_t child(std::int32_t node, Symbol c) const;
};

} // namespace trapeze
