#include "trapeze/suffix_automaton.hpp"

#include <algorithm>

namespace trapeze {

SuffixAutomaton::SuffixAutomaton(std::span<const Symbol> text) : text_size_(text.size()) {
    std::size_t max_id = 0;
    for (auto c : text) max_id = std::max<std::size_t>(max_id, c.id);
    width_ = text.empty() ? 1 : max_id + 1;
    states_.reserve(2 * text.size() + 1);
    delta_.reserve((2 * text.size() + 1) * width_);
    add_state(State{0, -1, -1, 0});

    for (std::size_t i = 0; i < text.size(); ++i) {
        const Symbol c = text[i];
        const std::int32_t cur = add_state(State{states_[last_].len + 1, -1,
                                                 static_cast<std::int32_t>(i), 0});
        std::int32_t p = last_;
        while (p != -1 && edge(p, c) == -1) {
            edge(p, c) = cur;
            ++states_[p].out_degree;
            p = states_[p].link;
        }
        if (p == -1) {
            states_[cur].link = 0;
        } else {
            const std::int32_t q = edge(p, c);
            if (states_[p].len + 1 == states_[q].len) {
                states_[cur].link = q;
            } else {
                State copy = states_[q];
                copy.len = states_[p].len + 1;
                const std::int32_t clone = add_state(copy);
                std::copy_n(delta_.begin() + static_cast<std::ptrdiff_t>(q * width_), width_,
                            delta_.begin() + static_cast<std::ptrdiff_t>(clone * width_));
                while (p != -1 && edge(p, c) == q) {
                    edge(p, c) = clone;
                    p = states_[p].link;
                }
                states_[q].link = clone;
                states_[cur].link = clone;
            }
        }
        last_ = cur;
    }
}

std::int32_t SuffixAutomaton::add_state(const State& s) {
    states_.push_back(s);
    delta_.resize(delta_.size() + width_, -1);
    return static_cast<std::int32_t>(states_.size() - 1);
}

std::int32_t SuffixAutomaton::next(std::int32_t state, Symbol c) const {
    if (c.id >= width_) return -1;
    return delta_[static_cast<std::size_t>(state) * width_ + c.id];
}

std::int32_t SuffixAutomaton::find(std::span<const Symbol> u) const {
    std::int32_t s = 0;
    for (auto c : u) {
        s = next(s, c);
        if (s == -1) return -1;
    }
    return s;
}

namespace {

// Adds +1 on the length interval (len(link), len] for every state that
// passes `keep`, then prefix-sums.
template <class Pred>
std::vector<std::size_t> interval_histogram(const std::vector<SuffixAutomaton::State>& states,
                                            std::size_t n, Pred keep) {
    std::vector<std::ptrdiff_t> diff(n + 2, 0);
    for (std::size_t v = 1; v < states.size(); ++v) {
        if (!keep(states[v])) continue;
        diff[static_cast<std::size_t>(states[states[v].link].len) + 1] += 1;
        diff[static_cast<std::size_t>(states[v].len) + 1] -= 1;
    }
    std::vector<std::size_t> out(n + 1, 0);
    std::ptrdiff_t run = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        run += diff[k];
        out[k] = static_cast<std::size_t>(run);
    }
    return out;
}

} // namespace

std::vector<std::size_t> SuffixAutomaton::factor_counts() const {
    auto out = interval_histogram(states_, text_size_, [](const State&) { return true; });
    out[0] = 1;
    return out;
}

std::vector<std::size_t> SuffixAutomaton::right_special_counts() const {
    auto out = interval_histogram(states_, text_size_,
                                  [](const State& s) { return s.out_degree >= 2; });
    out[0] = states_[0].out_degree >= 2 ? 1 : 0;
    return out;
}

std::size_t SuffixAutomaton::longest_right_special() const {
    std::int32_t best = 0;
    for (std::size_t v = 1; v < states_.size(); ++v)
        if (states_[v].out_degree >= 2) best = std::max(best, states_[v].len);
    return static_cast<std::size_t>(best);
}

std::size_t SuffixAutomaton::shortest_unrepeated_suffix() const {
    // The state of the whole text has a single end position; every state
    // further along its suffix-link path has strictly more.
    if (text_size_ == 0) return 0;
    return static_cast<std::size_t>(states_[states_[last_].link].len) + 1;
}

} // namespace trapeze
