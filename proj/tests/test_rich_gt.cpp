#include <doctest.h>

#include "oracle.hpp"
#include "trapeze/errors.hpp"
#include "trapeze/palindromes.hpp"
#include "trapeze/rich_gt.hpp"

using namespace trapeze;

namespace {
Symbol sym(char c) { return Word::parse(std::string(1, c))[0]; }
}

TEST_CASE("separation of the palindromic ends") {
    auto s = separation_analysis("ababada"_w);
    CHECK(s.kind == SeparationKind::Unseparated);
    CHECK(s.p == "ababa"_w);
    CHECK(s.q == "ada"_w);
    s = separation_analysis("bacabacac"_w);
    CHECK(s.kind == SeparationKind::SeparatedByLetter);
    CHECK(s.p == "bacab"_w);
    CHECK(s.q == "cac"_w);
    CHECK(s.separator == "a"_w);
    s = separation_analysis("aaadcbcb"_w);
    CHECK(s.kind == SeparationKind::SeparatedByWord);
    CHECK(s.separator == "dc"_w);
    s = separation_analysis("aaabab"_w);
    CHECK(s.kind == SeparationKind::Unseparated);
    CHECK(s.p == "aaa"_w);
    CHECK(s.q == "bab"_w);
    CHECK_THROWS_AS(separation_analysis(Word{}), EmptyWordError);
}

TEST_CASE("alphabet relation") {
    CHECK(alphabet_relation("aa"_w, "cc"_w) == AlphabetRelation::Disjoint);
    CHECK(alphabet_relation("bacab"_w, "cac"_w) == AlphabetRelation::Nested);
    CHECK(alphabet_relation("aba"_w, "bab"_w) == AlphabetRelation::Nested);
    CHECK(alphabet_relation("aca"_w, "bcb"_w) == AlphabetRelation::Incomparable);
}

struct Expect {
    const char* word;
    bool rich;
    RichCondition condition;
    NonRichReason reason;
    const char* form;  // empty when no form is expected
};

TEST_CASE("classification of worked examples") {
    const Expect cases[] = {
        {"abacabade", true, RichCondition::Unseparated, NonRichReason::None, ""},
        {"ababadac", true, RichCondition::Unseparated, NonRichReason::None, ""},
        {"aaabab", true, RichCondition::Unseparated, NonRichReason::None, ""},
        {"bacabacac", true, RichCondition::LetterSeparated, NonRichReason::None, "sep_by_x"},
        {"acacbcb", true, RichCondition::LetterSeparated, NonRichReason::None, "gt_rich_lemma_i"},
        {"aabcc", true, RichCondition::DisjointAlphabets, NonRichReason::None, "rich_disjoint_vi"},
        {"aaadcbcb", true, RichCondition::DisjointAlphabets, NonRichReason::None, "rich_disjoint_iii"},
        {"ababadbc", false, RichCondition::NonRich, NonRichReason::LetterOutsideAlphabets, ""},
        {"abacbab", false, RichCondition::NonRich, NonRichReason::LetterOutsideAlphabets, ""},
        {"dcdbacdc", false, RichCondition::NonRich, NonRichReason::SeparatedByLongWord, ""},
        {"aaaaaadebcad", false, RichCondition::NonRich, NonRichReason::NoDisjointSplit, ""},
        {"abcedabceded", false, RichCondition::NonRich, NonRichReason::NoDisjointSplit, ""},
        {"aabca", false, RichCondition::NonRich, NonRichReason::SeparatedByLongWord, ""},
        {"abcadea", false, RichCondition::NonRich, NonRichReason::SeparatedByLongWord, "nonrich_type1"},
        {"ababcaba", false, RichCondition::NonRich, NonRichReason::SeparatedByLongWord, "nonrich_type2"},
        {"adcbaba", false, RichCondition::NonRich, NonRichReason::SeparatedByLongWord, "nonrich_type3"},
    };
    for (const auto& e : cases) {
        CAPTURE(e.word);
        const Word w = Word::parse(e.word);
        const auto c = classify_rich_gt(w);
        CHECK(c.is_rich == e.rich);
        CHECK(c.is_rich == is_rich_by_count(w));
        CHECK(c.condition == e.condition);
        CHECK(c.reason == e.reason);
        if (*e.form) {
            REQUIRE(c.matched_form);
            CHECK(form_tag(*c.matched_form) == e.form);
            CHECK(instantiate(*c.matched_form) == c.heart.heart);
        } else {
            CHECK_FALSE(c.matched_form);
        }
    }
    CHECK(classify_rich_gt("abacabade"_w).heart.heart == "abacaba"_w);
    CHECK_THROWS_AS(classify_rich_gt("aabbaa"_w), NotGtError);
    CHECK_THROWS_AS(classify_rich_gt(Word{}), EmptyWordError);
}

TEST_CASE("disjoint split of aaadcbcb") {
    const auto c = classify_rich_gt("aaadcbcb"_w);
    REQUIRE(c.split);
    CHECK(c.split->u1.empty());
    CHECK(c.split->Z == "d"_w);
    CHECK(c.split->u2 == "c"_w);
}

TEST_CASE("rich-disjoint matcher") {
    auto f = match_rich_disjoint_form("aabcc"_w);
    REQUIRE(f);
    CHECK(f->shape == DisjointShape::VI);
    CHECK(f->m == 2);
    CHECK(f->n == 2);
    CHECK(f->Z == "b"_w);
    f = match_rich_disjoint_form("aaadcbcb"_w);
    REQUIRE(f);
    CHECK(f->shape == DisjointShape::III);
    CHECK(f->m == 2);
    CHECK(f->n == 1);
    CHECK(f->x == sym('c'));
    CHECK(f->y == sym('b'));
    CHECK(f->Z == "d"_w);
    CHECK_FALSE(match_rich_disjoint_form("aaaaaadebcad"_w));
    // The reversal of a form (iii) heart is only reachable as a mirror.
    f = match_rich_disjoint_form("bcbcdaaa"_w);
    REQUIRE(f);
    CHECK(f->mirrored);
    CHECK(f->tag() == "rich_disjoint_vii_iii");
    CHECK_THROWS_AS(match_rich_disjoint_form("ababada"_w), PreconditionError);
}

TEST_CASE("sep-by-x matcher") {
    auto f = match_sep_by_x_form("bacabacac"_w);
    REQUIRE(f);
    CHECK(f->k == 1);
    CHECK(f->m == 1);
    CHECK(f->n == 1);
    CHECK(f->b == sym('b'));
    CHECK(f->x == sym('a'));
    CHECK(f->a == sym('c'));
    CHECK(f->instantiate() == "bacabacac"_w);
    CHECK_FALSE(match_sep_by_x_form("ababadb"_w));
    f = match_sep_by_x_form(reverse("bacabacac"_w));
    REQUIRE(f);
    CHECK(f->mirrored);
    CHECK(f->instantiate() == reverse("bacabacac"_w));
    CHECK_THROWS_AS(match_sep_by_x_form("aabcc"_w), PreconditionError);
}

TEST_CASE("GT-rich lemma matcher and the morphism") {
    auto f = match_gt_rich_lemma_form("acacbcb"_w);
    REQUIRE(f);
    CHECK(*f == GtRichLemmaForm{1, 1, sym('a'), sym('b'), sym('c')});
    const Word shortest = apply_phi_x("aab"_w, sym('x')) + "b"_w;
    CHECK(shortest == "axaxbxb"_w);
    f = match_gt_rich_lemma_form(shortest);
    REQUIRE(f);
    CHECK(f->n == 1);
    CHECK(f->m == 1);
    // abacbab has Alph(p) = Alph(q), outside this matcher's domain.
    CHECK_THROWS_AS(match_gt_rich_lemma_form("abacbab"_w), PreconditionError);
    CHECK(apply_phi_x("aab"_w, sym('x')) == "axaxbx"_w);
    CHECK(apply_phi_x("x"_w, sym('x')) == "x"_w);
    for (std::size_t n = 0; n < 4; ++n)
        for (std::size_t m = 1; m < 4; ++m) {
            const GtRichLemmaForm g{n + 1, m, sym('a'), sym('b'), sym('x')};
            CHECK(g.instantiate() == apply_phi_x(power(sym('a'), n + 2) + power(sym('b'), m), sym('x')) + "b"_w);
        }
}

TEST_CASE("explicitly non-rich types") {
    auto t = match_nonrich_types("abcadea"_w);
    REQUIRE(t);
    CHECK(t->type == 1);
    CHECK(t->Z1 == "bc"_w);
    CHECK(t->Z2 == "de"_w);
    t = match_nonrich_types("ababcaba"_w);
    REQUIRE(t);
    CHECK(t->type == 2);
    CHECK(t->m == 1);
    CHECK(t->n == 2);
    CHECK(t->Z == "c"_w);
    t = match_nonrich_types("adcbaba"_w);
    REQUIRE(t);
    CHECK(t->type == 3);
    CHECK(t->m == 1);
    CHECK(t->n == 1);
    CHECK(t->Z == "dc"_w);
    CHECK(t->instantiate() == "adcbaba"_w);
    CHECK_FALSE(match_nonrich_types("ababada"_w));
    CHECK_FALSE(match_nonrich_types(Word{}));
}

TEST_CASE("classifier agrees with brute-force richness on every GT-word over 4 letters up to length 8") {
    std::size_t gt_words = 0;
    oracle::each_word(4, 8, [&](const std::string& s) {
        if (!oracle::gt(s)) return;
        ++gt_words;
        const auto c = classify_rich_gt(Word::parse(s));
        CHECK(c.is_rich == oracle::rich(s));
        if (c.matched_form) CHECK(instantiate(*c.matched_form) == c.heart.heart);
    });
    CHECK(gt_words > 1000);
}
