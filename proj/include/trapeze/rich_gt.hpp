#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <variant>

#include "trapeze/trapezoid.hpp"
#include "trapeze/word.hpp"

namespace trapeze {

// ---------------------------------------------------------------------------
// Separation of the longest palindromic prefix p and suffix q of a word.

enum class SeparationKind { Unseparated, SeparatedByLetter, SeparatedByWord };

struct SeparationAnalysis {
    Word p;
    Word q;
    SeparationKind kind = SeparationKind::Unseparated;
    /// The word u with v = p·u·q; empty when unseparated.
    Word separator;
};

SeparationAnalysis separation_analysis(const Word& v);

enum class AlphabetRelation {
    Disjoint,      ///< Alph(p) ∩ Alph(q) = ∅
    Nested,        ///< one alphabet contains the other
    Incomparable,  ///< they meet but neither contains the other
};

AlphabetRelation alphabet_relation(const Word& p, const Word& q);

// ---------------------------------------------------------------------------
// Closed-form shapes. Every form can rebuild the word it was matched from.

/// Rich hearts whose p and q have disjoint alphabets. Z is a product of
/// mutually distinct letters outside {a, b, x, y}:
///   I    p = (ab)^m a,   u = Zx,   q = (yx)^n y
///   II   p = (ba)^m b,   u = aZx,  q = (yx)^n y
///   III  p = a^(m+1),    u = Zx,   q = (yx)^n y
///   IV   p = (ab)^m a,   u = Z,    q = x^(n+1)
///   V    p = (ab)^m a,   u = Z,    q = (xy)^n x
///   VI   p = a^m,        u = Z,    q = x^n
/// A mirrored form is the reversal of one of the above.
enum class DisjointShape { I, II, III, IV, V, VI };

struct DisjointForm {
    DisjointShape shape = DisjointShape::I;
    bool mirrored = false;
    Symbol a, x;
    std::optional<Symbol> b, y;
    std::size_t m = 0, n = 0;
    Word Z;

    Word instantiate() const;
    std::string tag() const;
    friend bool operator==(const DisjointForm&, const DisjointForm&) = default;
};

/// v = [b (xa)^m x]^k b (xa)^(n+1), or its reversal when mirrored.
struct SepByXForm {
    std::size_t k = 0, m = 0, n = 0;
    Symbol a, b, x;
    bool mirrored = false;

    Word instantiate() const;
    std::string tag() const { return mirrored ? "sep_by_x_mirror" : "sep_by_x"; }
    friend bool operator==(const SepByXForm&, const SepByXForm&) = default;
};

/// v = (ax)^n a · x · (bx)^m b, equivalently φ_x(a^(n+1) b^m) b.
struct GtRichLemmaForm {
    std::size_t n = 0, m = 0;
    Symbol a, b, x;

    Word instantiate() const;
    std::string tag() const { return "gt_rich_lemma_i"; }
    friend bool operator==(const GtRichLemmaForm&, const GtRichLemmaForm&) = default;
};

/// Explicitly non-rich hearts:
///   Type1  v = a Z1 a Z2 a
///   Type2  v = (ab)^(m+1) Z (ab)^(n-1) a
///   Type3  v = (ab)^(n-1) a Z (ba)^(m+1)   (reversal of Type2)
struct NonRichType {
    int type = 1;
    Symbol a;
    std::optional<Symbol> b;
    Word Z1, Z2, Z;
    std::size_t m = 0, n = 0;

    Word instantiate() const;
    std::string tag() const { return "nonrich_type" + std::to_string(type); }
    friend bool operator==(const NonRichType&, const NonRichType&) = default;
};

using MatchedForm = std::variant<DisjointForm, SepByXForm, GtRichLemmaForm, NonRichType>;

Word instantiate(const MatchedForm& f);
std::string form_tag(const MatchedForm& f);

std::optional<DisjointForm> match_rich_disjoint_form(const Word& v);
std::optional<SepByXForm> match_sep_by_x_form(const Word& v);
std::optional<GtRichLemmaForm> match_gt_rich_lemma_form(const Word& v);
std::optional<NonRichType> match_nonrich_types(const Word& v);

/// x ↦ x, y ↦ y·x for y ≠ x.
Word apply_phi_x(const Word& w, Symbol x);

// ---------------------------------------------------------------------------
// Classification of GT-words by richness.

enum class RichCondition {
    Unseparated,        ///< p and q unseparated in the heart
    LetterSeparated,    ///< v = p·x·q, alphabets meet, x ∈ Alph(p) ∪ Alph(q)
    DisjointAlphabets,  ///< v = p·u1·Z·u2·q with disjoint alphabets
    NonRich,
};

enum class NonRichReason {
    None,
    LetterOutsideAlphabets,  ///< v = p·x·q, alphabets meet, x new
    SeparatedByLongWord,     ///< v = p·u·q, |u| ≥ 2, alphabets meet
    NoDisjointSplit,         ///< disjoint alphabets, u has no u1·Z·u2 split
};

struct DisjointSplit {
    Word u1, Z, u2;
};

struct RichGtClassification {
    Word word;
    HeartDecomposition heart;
    SeparationAnalysis separation;
    bool is_rich = false;
    RichCondition condition = RichCondition::NonRich;
    NonRichReason reason = NonRichReason::None;
    std::optional<DisjointSplit> split;
    std::optional<MatchedForm> matched_form;
};

/// Decides richness of a GT-word from the shape of its heart alone.
/// Throws NotGtError for words that are not GT.
RichGtClassification classify_rich_gt(const Word& w);

std::string to_string(RichCondition c);
std::string to_string(NonRichReason r);
std::string to_string(SeparationKind k);

} // namespace trapeze
