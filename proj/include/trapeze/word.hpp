#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "trapeze/errors.hpp"

namespace trapeze {

/// A letter of a finite alphabet, identified by a small dense integer.
/// Rendering as `a`, `b`, ... is a display concern (see Word::str).
struct Symbol {
    std::uint8_t id = 0;

    constexpr Symbol() = default;
    constexpr explicit Symbol(std::uint8_t i) : id(i) {}

    friend constexpr auto operator<=>(Symbol, Symbol) = default;
};

/// Largest number of distinct symbols the text syntax can express
/// (a-z then A-Z).
inline constexpr std::size_t kMaxTextSymbols = 52;

char symbol_char(Symbol s);

/// Immutable finite word. The empty word is a valid value.
class Word {
public:
    using const_iterator = std::vector<Symbol>::const_iterator;

    Word() = default;
    explicit Word(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}
    Word(std::initializer_list<Symbol> symbols) : symbols_(symbols) {}
    explicit Word(std::span<const Symbol> symbols)
        : symbols_(symbols.begin(), symbols.end()) {}

    /// Parses ASCII letters: 'a'..'z' map to 0..25, 'A'..'Z' to 26..51.
    /// Any other character is a ParseError. The empty string parses to ε.
    static Word parse(std::string_view text);

    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    Symbol operator[](std::size_t i) const { return symbols_[i]; }
    Symbol front() const { return symbols_.front(); }
    Symbol back() const { return symbols_.back(); }

    const_iterator begin() const noexcept { return symbols_.begin(); }
    const_iterator end() const noexcept { return symbols_.end(); }
    std::span<const Symbol> view() const noexcept { return symbols_; }
    const std::vector<Symbol>& symbols() const noexcept { return symbols_; }

    /// Factor starting at `pos` of length `len` (clamped to the word end).
    Word substr(std::size_t pos, std::size_t len) const;
    Word prefix(std::size_t len) const { return substr(0, len); }
    Word suffix(std::size_t len) const;

    bool starts_with(const Word& u) const;
    bool ends_with(const Word& u) const;

    std::string str() const;

    friend Word operator+(const Word& a, const Word& b);
    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word& a, const Word& b) {
        return a.symbols_ <=> b.symbols_;
    }

private:
    std::vector<Symbol> symbols_;
};

/// Shortest first, then lexicographic.
struct ShortLex {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

/// Shorthand for literals in code and tests: `"abc"_w`.
inline namespace literals {
inline Word operator""_w(const char* s, std::size_t n) {
    return Word::parse(std::string_view(s, n));
}
} // namespace literals

Word power(Symbol s, std::size_t n);
Word power(const Word& u, std::size_t n);

std::set<Symbol> alphabet(const Word& w);
std::size_t alphabet_size(const Word& w);

/// Occurrences of each symbol, indexed by id.
std::vector<std::size_t> letter_counts(const Word& w);

std::set<Word> factors_of_length(const Word& w, std::size_t n);

/// All distinct non-empty factors.
std::set<Word> all_factors(const Word& w);

/// Start positions of (possibly overlapping) occurrences of u in w.
/// Throws EmptyPatternError if u is empty.
std::vector<std::size_t> occurrence_positions(const Word& u, const Word& w);
std::size_t occurrence_count(const Word& u, const Word& w);
bool is_factor(const Word& u, const Word& w);

Word reverse(const Word& w);
bool is_palindrome(const Word& w);

bool is_subset(const std::set<Symbol>& a, const std::set<Symbol>& b);
bool intersects(const std::set<Symbol>& a, const std::set<Symbol>& b);

} // namespace trapeze

template <>
struct std::hash<trapeze::Word> {
    std::size_t operator()(const trapeze::Word& w) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (auto s : w) {
            h ^= s.id + 1;
            h *= 1099511628211ull;
        }
        return h;
    }
};
