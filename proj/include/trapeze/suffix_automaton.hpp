#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "trapeze/word.hpp"

namespace trapeze {

/// Suffix automaton (DAWG) over a symbol string.
///
/// Every state represents the factors whose lengths lie in
/// (len(link), len], all sharing one end-position set and therefore one
/// set of right extensions. Construction is linear in the text length
/// times the alphabet width; transitions live in a flat table with one
/// row per state.
class SuffixAutomaton {
public:
    struct State {
        std::int32_t len = 0;
        std::int32_t link = -1;
        /// End position (inclusive) of the first occurrence.
        std::int32_t first_end = -1;
        std::int32_t out_degree = 0;
    };

    explicit SuffixAutomaton(std::span<const Symbol> text);

    std::size_t text_size() const noexcept { return text_size_; }
    const std::vector<State>& states() const noexcept { return states_; }
    std::int32_t last() const noexcept { return last_; }

    /// Target of the transition by `c`, or -1.
    std::int32_t next(std::int32_t state, Symbol c) const;

    /// State recognising u, or -1 when u is not a factor. The root (0)
    /// recognises ε.
    std::int32_t find(std::span<const Symbol> u) const;

    /// Number of distinct factors of every length 0..|text|.
    std::vector<std::size_t> factor_counts() const;

    /// Number of distinct right special factors of every length 0..|text|.
    std::vector<std::size_t> right_special_counts() const;

    /// Length of the longest non-empty right special factor, 0 if none.
    std::size_t longest_right_special() const;

    /// Length of the shortest suffix of the text that occurs once.
    std::size_t shortest_unrepeated_suffix() const;

private:
    std::size_t text_size_ = 0;
    std::size_t width_ = 0;
    std::vector<State> states_;
    std::vector<std::int32_t> delta_;
    std::int32_t last_ = 0;

    std::int32_t add_state(const State& s);
    std::int32_t& edge(std::int32_t state, Symbol c) {
        return delta_[static_cast<std::size_t>(state) * width_ + c.id];
    }
};

} // namespace trapeze
