#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "trapeze/word.hpp"

namespace trapeze {

struct EnumerationSpec {
    std::size_t alphabet_size = 2;  ///< 1..6
    std::size_t max_length = 8;     ///< 1..16
    /// Only words whose letters first appear in increasing id order
    /// (one representative per renaming class).
    bool canonical_only = false;
};

inline constexpr std::size_t kMaxAlphabet = 6;
inline constexpr std::size_t kMaxLength = 16;

/// Throws BoundsError when the bounds are out of range.
void validate(const EnumerationSpec& spec);

/// Renames letters so they first appear as 0, 1, 2, ...
Word canonical_form(const Word& w);
bool is_canonical(const Word& w);

/// Visits every word of exactly `length` that starts with `prefix`, in
/// lexicographic order. `prefix` must itself be admissible.
void for_each_word(const EnumerationSpec& spec, std::size_t length, const Word& prefix,
                   const std::function<void(const Word&)>& visit);

/// Pull-style enumeration: every admissible word of length 1..max_length,
/// length by length, lexicographic within a length. ε is excluded.
class WordStream {
public:
    explicit WordStream(const EnumerationSpec& spec);
    std::optional<Word> next();

private:
    EnumerationSpec spec_;
    std::vector<Symbol> current_;
    bool started_ = false;

    bool admissible_at(std::size_t i, std::uint8_t id) const;
    bool advance();
    void fill_minimal(std::size_t from);
};

std::vector<Word> enumerate_words(const EnumerationSpec& spec);

/// Independent units of work: (length, prefix) pairs in enumeration order.
/// Concatenating the words of every partition in order reproduces the
/// enumeration exactly.
struct Partition {
    std::size_t length = 0;
    Word prefix;
};
std::vector<Partition> partitions(const EnumerationSpec& spec);

/// Runs `work(i)` for i in [0, count) on up to `jobs` threads.
void parallel_for(std::size_t count, std::size_t jobs, const std::function<void(std::size_t)>& work);

struct CensusRow {
    std::size_t length = 0;
    std::size_t total_words = 0;
    std::size_t gt_count = 0;
    std::size_t rich_gt_count = 0;
    std::size_t triangular_gt_count = 0;
    std::size_t rk_condition_count = 0;
    friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

std::vector<CensusRow> census(const EnumerationSpec& spec, std::size_t jobs = 1);

/// `length,total,gt,rich_gt,triangular_gt,rk_condition` plus one row per length.
std::string census_csv(const std::vector<CensusRow>& rows);

} // namespace trapeze
