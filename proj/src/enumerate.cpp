#include "trapeze/enumerate.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <sstream>
#include <thread>

#include "trapeze/errors.hpp"
#include "trapeze/palindromes.hpp"
#include "trapeze/trapezoid.hpp"

namespace trapeze {

void validate(const EnumerationSpec& spec) {
    if (spec.alphabet_size < 1 || spec.alphabet_size > kMaxAlphabet)
        throw BoundsError("alphabet size must be in [1, " + std::to_string(kMaxAlphabet) + "], got " +
                          std::to_string(spec.alphabet_size));
    if (spec.max_length < 1 || spec.max_length > kMaxLength)
        throw BoundsError("maximum length must be in [1, " + std::to_string(kMaxLength) + "], got " +
                          std::to_string(spec.max_length));
}

Word canonical_form(const Word& w) {
    std::array<int, 256> rename;
    rename.fill(-1);
    int next = 0;
    std::vector<Symbol> out;
    out.reserve(w.size());
    for (Symbol s : w) {
        if (rename[s.id] < 0) rename[s.id] = next++;
        out.emplace_back(static_cast<std::uint8_t>(rename[s.id]));
    }
    return Word(std::move(out));
}

bool is_canonical(const Word& w) {
    int top = -1;
    for (Symbol s : w) {
        if (s.id > top + 1) return false;
        top = std::max(top, static_cast<int>(s.id));
    }
    return true;
}

namespace {

// Largest id + 1 that may appear next, given the symbols so far.
std::size_t next_bound(const EnumerationSpec& spec, int top) {
    if (!spec.canonical_only) return spec.alphabet_size;
    return std::min(spec.alphabet_size, static_cast<std::size_t>(top + 2));
}

void extend(const EnumerationSpec& spec, std::size_t length, std::vector<Symbol>& buf, int top,
            const std::function<void(const Word&)>& visit) {
    if (buf.size() == length) {
        visit(Word(buf));
        return;
    }
    const std::size_t bound = next_bound(spec, top);
    for (std::size_t id = 0; id < bound; ++id) {
        buf.emplace_back(static_cast<std::uint8_t>(id));
        extend(spec, length, buf, std::max(top, static_cast<int>(id)), visit);
        buf.pop_back();
    }
}

bool admissible_prefix(const EnumerationSpec& spec, const Word& prefix) {
    for (Symbol s : prefix)
        if (s.id >= spec.alphabet_size) return false;
    return !spec.canonical_only || is_canonical(prefix);
}

} // namespace

void for_each_word(const EnumerationSpec& spec, std::size_t length, const Word& prefix,
                   const std::function<void(const Word&)>& visit) {
    if (prefix.size() > length || !admissible_prefix(spec, prefix)) return;
    std::vector<Symbol> buf(prefix.begin(), prefix.end());
    buf.reserve(length);
    int top = -1;
    for (Symbol s : prefix) top = std::max(top, static_cast<int>(s.id));
    extend(spec, length, buf, top, visit);
}

WordStream::WordStream(const EnumerationSpec& spec) : spec_(spec) { validate(spec_); }

bool WordStream::admissible_at(std::size_t i, std::uint8_t id) const {
    if (id >= spec_.alphabet_size) return false;
    if (!spec_.canonical_only) return true;
    int top = -1;
    for (std::size_t j = 0; j < i; ++j) top = std::max(top, static_cast<int>(current_[j].id));
    return id <= top + 1;
}

void WordStream::fill_minimal(std::size_t from) {
    for (std::size_t i = from; i < current_.size(); ++i) current_[i] = Symbol{0};
}

bool WordStream::advance() {
    for (std::size_t i = current_.size(); i-- > 0;) {
        const auto bumped = static_cast<std::uint8_t>(current_[i].id + 1);
        if (admissible_at(i, bumped)) {
            current_[i] = Symbol{bumped};
            fill_minimal(i + 1);
            return true;
        }
    }
    return false;
}

std::optional<Word> WordStream::next() {
    if (!started_) {
        started_ = true;
        current_.assign(1, Symbol{0});
        return Word(current_);
    }
    if (current_.empty()) return std::nullopt;
    if (!advance()) {
        if (current_.size() == spec_.max_length) {
            current_.clear();
            return std::nullopt;
        }
        current_.assign(current_.size() + 1, Symbol{0});
    }
    return Word(current_);
}

std::vector<Word> enumerate_words(const EnumerationSpec& spec) {
    WordStream stream(spec);
    std::vector<Word> out;
    while (auto w = stream.next()) out.push_back(std::move(*w));
    return out;
}

std::vector<Partition> partitions(const EnumerationSpec& spec) {
    validate(spec);
    // Prefixes of this length give a few hundred tasks at most, enough to
    // balance threads without drowning small runs in overhead.
    constexpr std::size_t kSplitDepth = 4;
    std::vector<Partition> out;
    for (std::size_t len = 1; len <= spec.max_length; ++len) {
        const std::size_t depth = std::min(len, kSplitDepth);
        for_each_word(spec, depth, Word{}, [&](const Word& p) { out.push_back({len, p}); });
    }
    return out;
}

void parallel_for(std::size_t count, std::size_t jobs, const std::function<void(std::size_t)>& work) {
    jobs = std::max<std::size_t>(1, std::min(jobs, count));
    if (jobs == 1) {
        for (std::size_t i = 0; i < count; ++i) work(i);
        return;
    }
    std::atomic<std::size_t> cursor{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (std::size_t t = 0; t < jobs; ++t)
        pool.emplace_back([&] {
            for (std::size_t i; !failed && (i = cursor.fetch_add(1)) < count;) {
                try {
                    work(i);
                } catch (...) {
                    if (!failed.exchange(true)) failure = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

std::vector<CensusRow> census(const EnumerationSpec& spec, std::size_t jobs) {
    const auto parts = partitions(spec);
    std::vector<CensusRow> partial(parts.size());
    parallel_for(parts.size(), jobs, [&](std::size_t i) {
        CensusRow& row = partial[i];
        for_each_word(spec, parts[i].length, parts[i].prefix, [&](const Word& w) {
            ++row.total_words;
            const auto shape = is_gt_by_definition(w);
            if (satisfies_rk_condition(w)) ++row.rk_condition_count;
            if (!shape) return;
            ++row.gt_count;
            if (is_rich_by_count(w)) ++row.rich_gt_count;
            if (alphabet_size(w) >= 2 && is_triangular(w)) ++row.triangular_gt_count;
        });
    });

    std::vector<CensusRow> rows(spec.max_length);
    for (std::size_t len = 1; len <= spec.max_length; ++len) rows[len - 1].length = len;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        CensusRow& row = rows[parts[i].length - 1];
        row.total_words += partial[i].total_words;
        row.gt_count += partial[i].gt_count;
        row.rich_gt_count += partial[i].rich_gt_count;
        row.triangular_gt_count += partial[i].triangular_gt_count;
        row.rk_condition_count += partial[i].rk_condition_count;
    }
    return rows;
}

std::string census_csv(const std::vector<CensusRow>& rows) {
    std::ostringstream out;
    out << "length,total,gt,rich_gt,triangular_gt,rk_condition\n";
    for (const auto& r : rows)
        out << r.length << ',' << r.total_words << ',' << r.gt_count << ',' << r.rich_gt_count << ','
            << r.triangular_gt_count << ',' << r.rk_condition_count << '\n';
    return out.str();
}

} // namespace trapeze
