#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "trapeze/complexity.hpp"
#include "trapeze/rich_gt.hpp"
#include "trapeze/trapezoid.hpp"
#include "trapeze/verify.hpp"
#include "trapeze/word.hpp"

namespace trapeze {

/// Everything the analyzer reports about one word. A pure projection of
/// the library results.
struct AnalysisRecord {
    Word word;
    std::size_t alphabet_size = 0;
    std::vector<std::size_t> profile;
    Parameters params;
    std::size_t minimal_period = 0;
    HeartDecomposition heart;
    std::optional<TrapezoidParams> gt;
    /// Absent for one-letter words.
    std::optional<bool> triangular;
    bool rk_condition = false;
    bool rich = false;
    /// Present only for GT-words.
    std::optional<RichGtClassification> classification;
};

/// Throws EmptyWordError for ε.
AnalysisRecord analyze(const Word& w);

nlohmann::json form_params_json(const MatchedForm& f);
nlohmann::json to_json(const RichGtClassification& c);
nlohmann::json to_json(const AnalysisRecord& r);
/// A list of {invariant_id, status, counterexample?}.
nlohmann::json to_json(const VerificationReport& r);

/// Compact, keys sorted, no trailing newline.
std::string dump(const nlohmann::json& j);

} // namespace trapeze
