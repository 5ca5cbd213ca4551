#include <doctest.h>

#include "oracle.hpp"
#include "trapeze/errors.hpp"
#include "trapeze/trapezoid.hpp"

using namespace trapeze;

TEST_CASE("definitional GT test") {
    CHECK(is_gt_by_definition("aaabb"_w) == TrapezoidParams{2, 3, 3});
    CHECK(is_gt_by_definition("ababadac"_w) == TrapezoidParams{2, 4, 5});
    CHECK(is_gt_by_definition("aaabab"_w) == TrapezoidParams{3, 3, 4});
    CHECK_FALSE(is_gt_by_definition("aabbaa"_w));
    CHECK(is_gt_by_definition("aaaa"_w) == TrapezoidParams{1, 4, 1});
    CHECK_THROWS_AS(is_gt_by_definition(Word{}), EmptyWordError);
}

TEST_CASE("heart decomposition") {
    auto hd = heart_decompose("ebbacbadf"_w);
    CHECK(hd.prefix == "e"_w);
    CHECK(hd.heart == "bbacba"_w);
    CHECK(hd.suffix == "df"_w);
    hd = heart_decompose("ababadac"_w);
    CHECK(hd.prefix.empty());
    CHECK(hd.heart == "ababada"_w);
    CHECK(hd.suffix == "c"_w);
    hd = heart_decompose("abc"_w);
    CHECK(hd.heart == "abc"_w);
    CHECK(hd.prefix.empty());
    CHECK(hd.suffix.empty());
    CHECK_THROWS_AS(heart_decompose(Word{}), EmptyWordError);
}

TEST_CASE("heart decomposition matches a string oracle") {
    oracle::each_word(4, 7, [](const std::string& s) {
        const auto hd = heart_decompose(Word::parse(s));
        const auto h = oracle::heart(s);
        CHECK(hd.prefix.str() == h.r);
        CHECK(hd.heart.str() == h.v);
        CHECK(hd.suffix.str() == h.s);
        CHECK(s.size() - h.v.size() == oracle::alphabet_size(s) - oracle::alphabet_size(h.v));
    });
}

TEST_CASE("RK-condition and heart conditions") {
    CHECK(satisfies_rk_condition("aaabb"_w));
    CHECK_FALSE(satisfies_rk_condition("ababadac"_w));
    CHECK_FALSE(satisfies_rk_condition("abbac"_w));
    CHECK(satisfies_rk_condition("abbcc"_w));
    CHECK_FALSE(satisfies_rk_condition("ccbba"_w));
    CHECK(is_gt("ccbba"_w));

    CHECK(is_gt_by_heart("ababadac"_w));
    CHECK(is_gt_by_heart("ebbacbadf"_w));
    CHECK_FALSE(is_gt_by_heart("aabbaa"_w));
    CHECK(is_gt_by_heart_lh("abbcc"_w));
    CHECK(is_gt_by_heart_lh("ababadac"_w));
    CHECK(is_gt_by_heart("aabca"_w));
    CHECK(is_gt_by_heart_lh("aabca"_w));

    const auto v = parameters("ababada"_w);
    CHECK(v.R == 4);
    CHECK(v.K == 2);
    const auto b = parameters("bbacba"_w);
    CHECK(b.R == 2);
    CHECK(b.K == 3);
    CHECK(parameters("bbcc"_w) == Parameters{2, 2, 2, 2});
}

TEST_CASE("triangular words") {
    // aaabb climbs to 3 at n = 2 and stays there until n = 3.
    CHECK_FALSE(is_triangular("aaabb"_w));
    CHECK_FALSE(is_triangular("ababadac"_w));
    // aaabab peaks once: 1,2,3,4,3,2,1.
    CHECK(is_triangular("aaabab"_w));
    CHECK_THROWS_AS(is_triangular("aaa"_w), AlphabetTooSmallError);
    CHECK_THROWS_AS(rk_profile_check("aaa"_w), AlphabetTooSmallError);
}

TEST_CASE("factor closure") {
    CHECK(gt_factor_closure_check("ababadac"_w));
    CHECK(gt_factor_closure_check("a"_w));
    CHECK(gt_factor_closure_check("ebbacbadf"_w));
    CHECK_THROWS_AS(gt_factor_closure_check("aabbaa"_w), NotGtError);
}

TEST_CASE("GT tests agree with an exhaustive oracle over 4 letters up to length 8") {
    oracle::each_word(4, 8, [](const std::string& s) {
        const Word w = Word::parse(s);
        const auto expect = oracle::gt(s);
        const auto got = is_gt_by_definition(w);
        REQUIRE(got.has_value() == expect.has_value());
        CHECK(is_gt_by_heart(w) == expect.has_value());
        CHECK(is_gt_by_heart_lh(w) == expect.has_value());
        if (!expect) return;
        CHECK(got->m == expect->first);
        CHECK(got->M == expect->second);
        CHECK(is_gt(reverse(w)));
        if (satisfies_rk_condition(w)) CHECK(got.has_value());
        if (oracle::alphabet_size(s) >= 2) {
            const auto hv = oracle::params(oracle::heart(s).v);
            CHECK(is_triangular(w) == (hv.R == hv.K));
            CHECK(is_triangular(w) == (got->m == got->M));
        }
    });
}
