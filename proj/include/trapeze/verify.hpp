#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "trapeze/enumerate.hpp"
#include "trapeze/word.hpp"

namespace trapeze {

struct InvariantResult {
    std::string id;
    bool passed = true;
    /// Shortest, then lexicographically first, failing word.
    std::optional<Word> counterexample;
    std::size_t words_checked = 0;
    std::size_t failures = 0;
};

struct VerificationReport {
    EnumerationSpec spec;
    std::vector<InvariantResult> results;

    bool all_passed() const;
    std::size_t failure_count() const;
    const InvariantResult* find(const std::string& id) const;
};

struct VerifyOptions {
    std::size_t jobs = 1;
    /// Replaces is_gt_by_heart inside the battery. Used to check that the
    /// harness notices a broken predicate.
    std::function<bool(const Word&)> gt_by_heart_override;
    /// When non-empty, only these invariants run.
    std::vector<std::string> only;
};

/// Ids of every invariant in the battery, in report order.
const std::vector<std::string>& invariant_ids();

/// Runs the invariant battery over every word `spec` enumerates.
/// Throws BoundsError for an out-of-range spec.
VerificationReport verify_theorems(const EnumerationSpec& spec, const VerifyOptions& options = {});

} // namespace trapeze
