#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "trapeze/enumerate.hpp"
#include "trapeze/errors.hpp"
#include "trapeze/palindromes.hpp"
#include "trapeze/rich_gt.hpp"
#include "trapeze/verify.hpp"

using namespace trapeze;

TEST_CASE("enumeration is complete, ordered and duplicate-free") {
    for (std::size_t k = 1; k <= 4; ++k)
        for (std::size_t n = 1; n <= 5; ++n) {
            const auto words = enumerate_words({k, n, false});
            std::size_t expect = 0, pow = 1;
            for (std::size_t i = 1; i <= n; ++i) expect += (pow *= k);
            CHECK(words.size() == expect);
            for (std::size_t i = 1; i < words.size(); ++i) CHECK(ShortLex{}(words[i - 1], words[i]));
        }
}

TEST_CASE("canonical enumeration counts restricted-growth strings") {
    CHECK(enumerate_words({3, 3, true}).size() == 8);
    // Brute force: canonicalize every word and count the distinct results.
    for (std::size_t k = 1; k <= 4; ++k) {
        std::set<Word> classes;
        for (const auto& w : enumerate_words({k, 6, false})) classes.insert(canonical_form(w));
        const auto canon = enumerate_words({k, 6, true});
        CHECK(canon.size() == classes.size());
        for (const auto& w : canon) CHECK(is_canonical(w));
    }
}

TEST_CASE("the stream and the partitioned visitor agree") {
    const EnumerationSpec spec{3, 7, true};
    std::vector<Word> visited;
    for (const auto& p : partitions(spec))
        for_each_word(spec, p.length, p.prefix, [&](const Word& w) { visited.push_back(w); });
    CHECK(visited == enumerate_words(spec));
}

TEST_CASE("bounds") {
    CHECK_THROWS_AS(enumerate_words({0, 3, false}), BoundsError);
    CHECK_THROWS_AS(enumerate_words({7, 3, false}), BoundsError);
    CHECK_THROWS_AS(enumerate_words({2, 0, false}), BoundsError);
    CHECK_THROWS_AS(census({2, 17, false}), BoundsError);
    CHECK_THROWS_AS(verify_theorems({9, 10, true}), BoundsError);
}

TEST_CASE("canonical form") {
    CHECK(canonical_form("cacb"_w) == "abac"_w);
    CHECK(canonical_form(canonical_form("dbbd"_w)) == canonical_form("dbbd"_w));
    CHECK(is_canonical("abac"_w));
    CHECK_FALSE(is_canonical("bab"_w));
}

TEST_CASE("analysis is invariant under random renaming") {
    std::mt19937 rng(20240611);
    for (const auto& w : enumerate_words({4, 8, true})) {
        std::vector<std::uint8_t> perm{0, 1, 2, 3, 4, 5};
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Symbol> out;
        for (Symbol s : w) out.emplace_back(perm[s.id]);
        const Word r(out);
        CHECK(canonical_form(r) == w);
        CHECK(is_gt_by_definition(r) == is_gt_by_definition(w));
        CHECK(parameters(r) == parameters(w));
        CHECK(is_rich(r) == is_rich(w));
        if (is_gt(w)) CHECK(classify_rich_gt(r).condition == classify_rich_gt(w).condition);
    }
}

TEST_CASE("census matches direct counting") {
    const EnumerationSpec spec{3, 7, false};
    const auto rows = census(spec, 1);
    REQUIRE(rows.size() == 7);
    for (const auto& row : rows) {
        std::size_t total = 0, gt = 0, rich = 0;
        oracle::each_word(3, row.length, [&](const std::string& s) {
            if (s.size() != row.length) return;
            ++total;
            if (oracle::gt(s)) {
                ++gt;
                if (oracle::rich(s)) ++rich;
            }
        });
        CHECK(row.total_words == total);
        CHECK(row.gt_count == gt);
        CHECK(row.rich_gt_count == rich);
        CHECK(row.rk_condition_count <= row.gt_count);
        CHECK(row.triangular_gt_count <= row.gt_count);
    }
    CHECK(census(spec, 3) == rows);
    CHECK(census_csv(rows).rfind("length,total,gt,rich_gt,triangular_gt,rk_condition\n", 0) == 0);
}

TEST_CASE("verification battery passes on a small range and catches a broken predicate") {
    const EnumerationSpec spec{3, 7, true};
    const auto clean = verify_theorems(spec);
    CHECK(clean.all_passed());
    CHECK(clean.results.size() == invariant_ids().size());

    VerifyOptions broken;
    broken.gt_by_heart_override = [](const Word& w) { return is_gt_by_heart(w) != (w.size() == 5); };
    const auto report = verify_theorems(spec, broken);
    const auto* r = report.find("trapezoid.gt_equivalence");
    REQUIRE(r);
    CHECK_FALSE(r->passed);
    REQUIRE(r->counterexample);
    CHECK(*r->counterexample == "aaaaa"_w);
    CHECK(report.failure_count() == 1);
}
