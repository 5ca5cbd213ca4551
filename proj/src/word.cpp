#include "trapeze/word.hpp"

#include <algorithm>

namespace trapeze {

char symbol_char(Symbol s) {
    if (s.id < 26) return static_cast<char>('a' + s.id);
    if (s.id < kMaxTextSymbols) return static_cast<char>('A' + (s.id - 26));
    return '?';
}

Word Word::parse(std::string_view text) {
    std::vector<Symbol> out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c >= 'a' && c <= 'z') {
            out.emplace_back(static_cast<std::uint8_t>(c - 'a'));
        } else if (c >= 'A' && c <= 'Z') {
            out.emplace_back(static_cast<std::uint8_t>(26 + (c - 'A')));
        } else {
            throw ParseError("invalid character at position " + std::to_string(i) +
                             " (words are strings of ASCII letters)");
        }
    }
    return Word(std::move(out));
}

Word Word::substr(std::size_t pos, std::size_t len) const {
    if (pos >= symbols_.size()) return {};
    len = std::min(len, symbols_.size() - pos);
    return Word(std::vector<Symbol>(symbols_.begin() + static_cast<std::ptrdiff_t>(pos),
                                    symbols_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

Word Word::suffix(std::size_t len) const {
    len = std::min(len, symbols_.size());
    return substr(symbols_.size() - len, len);
}

bool Word::starts_with(const Word& u) const {
    return u.size() <= size() && std::equal(u.begin(), u.end(), begin());
}

bool Word::ends_with(const Word& u) const {
    return u.size() <= size() && std::equal(u.begin(), u.end(), end() - static_cast<std::ptrdiff_t>(u.size()));
}

std::string Word::str() const {
    std::string s;
    s.reserve(symbols_.size());
    for (auto c : symbols_) s.push_back(symbol_char(c));
    return s;
}

Word operator+(const Word& a, const Word& b) {
    std::vector<Symbol> out;
    out.reserve(a.size() + b.size());
    out.insert(out.end(), a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return Word(std::move(out));
}

Word power(Symbol s, std::size_t n) {
    return Word(std::vector<Symbol>(n, s));
}

Word power(const Word& u, std::size_t n) {
    std::vector<Symbol> out;
    out.reserve(u.size() * n);
    for (std::size_t i = 0; i < n; ++i) out.insert(out.end(), u.begin(), u.end());
    return Word(std::move(out));
}

std::set<Symbol> alphabet(const Word& w) {
    return {w.begin(), w.end()};
}

std::size_t alphabet_size(const Word& w) {
    std::uint64_t seen[4] = {0, 0, 0, 0};
    std::size_t n = 0;
    for (auto s : w) {
        auto& slot = seen[s.id >> 6];
        auto bit = std::uint64_t{1} << (s.id & 63);
        if (!(slot & bit)) {
            slot |= bit;
            ++n;
        }
    }
    return n;
}

std::vector<std::size_t> letter_counts(const Word& w) {
    std::vector<std::size_t> counts;
    for (auto s : w) {
        if (s.id >= counts.size()) counts.resize(s.id + 1u, 0);
        ++counts[s.id];
    }
    return counts;
}

std::set<Word> factors_of_length(const Word& w, std::size_t n) {
    std::set<Word> out;
    if (n > w.size()) return out;
    for (std::size_t i = 0; i + n <= w.size(); ++i) out.insert(w.substr(i, n));
    return out;
}

std::set<Word> all_factors(const Word& w) {
    std::set<Word> out;
    for (std::size_t n = 1; n <= w.size(); ++n) out.merge(factors_of_length(w, n));
    return out;
}

std::vector<std::size_t> occurrence_positions(const Word& u, const Word& w) {
    if (u.empty()) throw EmptyPatternError("occurrence search: empty pattern");
    std::vector<std::size_t> pos;
    if (u.size() > w.size()) return pos;
    auto it = w.begin();
    while (true) {
        it = std::search(it, w.end(), u.begin(), u.end());
        if (it == w.end()) break;
        pos.push_back(static_cast<std::size_t>(it - w.begin()));
        ++it;
    }
    return pos;
}

std::size_t occurrence_count(const Word& u, const Word& w) {
    return occurrence_positions(u, w).size();
}

bool is_factor(const Word& u, const Word& w) {
    if (u.empty()) return true;
    return std::search(w.begin(), w.end(), u.begin(), u.end()) != w.end();
}

Word reverse(const Word& w) {
    return Word(std::vector<Symbol>(w.symbols().rbegin(), w.symbols().rend()));
}

bool is_palindrome(const Word& w) {
    return std::equal(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(w.size() / 2),
                      w.symbols().rbegin());
}

bool is_subset(const std::set<Symbol>& a, const std::set<Symbol>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool intersects(const std::set<Symbol>& a, const std::set<Symbol>& b) {
    for (auto s : a)
        if (b.count(s)) return true;
    return false;
}

} // namespace trapeze
