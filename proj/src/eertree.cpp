#include "trapeze/eertree.hpp"

namespace trapeze {

std::int32_t Eertree::child(std::int32_t node, Symbol c) const {
    for (const auto& [s, t] : edges_[static_cast<std::size_t>(node)])
        if (s == c) return t;
    return -1;
}

Eertree::Eertree(std::span<const Symbol> text) {
    nodes_.push_back({-1, kImaginaryRoot, -1});
    nodes_.push_back({0, kImaginaryRoot, -1});
    edges_.resize(2);
    suffix_len_.reserve(text.size());
    created_.reserve(text.size());

    const auto n = static_cast<std::int32_t>(text.size());
    std::int32_t last = kEmptyRoot;
    auto extendable = [&](std::int32_t node, std::int32_t i) {
        const std::int32_t j = i - nodes_[static_cast<std::size_t>(node)].len - 1;
        return j >= 0 && text[static_cast<std::size_t>(j)] == text[static_cast<std::size_t>(i)];
    };

    for (std::int32_t i = 0; i < n; ++i) {
        const Symbol c = text[static_cast<std::size_t>(i)];
        std::int32_t cur = last;
        while (!extendable(cur, i)) cur = nodes_[static_cast<std::size_t>(cur)].link;

        std::int32_t found = child(cur, c);
        const bool fresh = found < 0;
        if (fresh) {
            const std::int32_t len = nodes_[static_cast<std::size_t>(cur)].len + 2;
            std::int32_t link = kEmptyRoot;
            if (len > 1) {
                std::int32_t l = nodes_[static_cast<std::size_t>(cur)].link;
                while (!extendable(l, i)) l = nodes_[static_cast<std::size_t>(l)].link;
                link = child(l, c);
            }
            found = static_cast<std::int32_t>(nodes_.size());
            nodes_.push_back({len, link, i});
            edges_.emplace_back();
            edges_[static_cast<std::size_t>(cur)].emplace_back(c, found);
        }
        last = found;
        suffix_len_.push_back(nodes_[static_cast<std::size_t>(found)].len);
        created_.push_back(fresh);
    }
}

} // namespace trapeze
