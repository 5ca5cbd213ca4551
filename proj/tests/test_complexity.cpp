#include <doctest.h>

#include "oracle.hpp"
#include "trapeze/complexity.hpp"
#include "trapeze/errors.hpp"

using namespace trapeze;

namespace {
std::vector<std::size_t> seq(std::initializer_list<std::size_t> xs) { return xs; }
}

TEST_CASE("complexity profiles of worked examples") {
    CHECK(complexity_profile("aaabb"_w).values == seq({1, 2, 3, 3, 2, 1}));
    CHECK(complexity_profile("ababadac"_w).values == seq({1, 4, 5, 5, 5, 4, 3, 2, 1}));
    CHECK(complexity_profile("abbcc"_w).values == seq({1, 3, 4, 3, 2, 1}));
    CHECK(complexity_profile("a"_w).values == seq({1, 1}));
    CHECK(complexity_profile("abbcc"_w).word_length == 5);
    CHECK_THROWS_AS(complexity_profile(Word{}), EmptyWordError);
}

TEST_CASE("valences") {
    CHECK(right_valence("ababadac"_w, "a"_w) == 3);
    CHECK(right_valence("ababadac"_w, "c"_w) == 0);
    CHECK(right_valence("ababadac"_w, "b"_w) == 1);
    CHECK(right_valence("ababadac"_w, Word{}) == 4);
    CHECK(left_valence("ababadac"_w, "a"_w) == 2);
    CHECK_THROWS_AS(right_valence("ab"_w, "ba"_w), NotAFactorError);
    CHECK_THROWS_AS(left_valence("ab"_w, "c"_w), NotAFactorError);
}

TEST_CASE("parameters of worked examples") {
    CHECK(parameters("aaabb"_w).R == 3);
    CHECK(parameters("aaabb"_w).K == 2);
    CHECK(parameters("ababadac"_w).R == 4);
    CHECK(parameters("ababadac"_w).K == 1);
    CHECK(parameters("abbcc"_w) == Parameters{2, 2, 2, 1});
    CHECK(parameters("aaaa"_w) == Parameters{1, 4, 1, 4});
    CHECK_THROWS_AS(parameters(Word{}), EmptyWordError);
    const auto rep = special_factor_report("aaabb"_w);
    CHECK(rep.R == 3);
    CHECK(rep.K == 2);
    CHECK_THROWS_AS(special_factor_report(Word{}), EmptyWordError);
}

TEST_CASE("minimal period") {
    CHECK(minimal_period("aaabb"_w) == 5);
    CHECK(minimal_period("aaaa"_w) == 1);
    CHECK(minimal_period("ababa"_w) == 2);
    CHECK(minimal_period("abc"_w) == 3);
    CHECK_THROWS_AS(minimal_period(Word{}), EmptyWordError);
}

TEST_CASE("indexed results agree with brute force on every word over 3 letters up to length 8") {
    oracle::each_word(3, 8, [](const std::string& s) {
        const Word w = Word::parse(s);
        CHECK(complexity_profile(w).values == oracle::profile(s));
        const auto p = parameters(w);
        const auto q = oracle::params(s);
        CHECK(p.R == q.R);
        CHECK(p.K == q.K);
        CHECK(p.L == q.L);
        CHECK(p.H == q.H);
        CHECK(minimal_period(w) == oracle::period(s));
    });
}

TEST_CASE("special factor report agrees with direct valence computation") {
    oracle::each_word(4, 7, [](const std::string& s) {
        const Word w = Word::parse(s);
        const auto rep = special_factor_report(w);
        for (bool right : {true, false}) {
            const auto expect = oracle::specials(s, right);
            const auto& got = right ? rep.right_special_by_length : rep.left_special_by_length;
            REQUIRE(got.size() == expect.size());
            for (const auto& [len, fs] : expect) {
                REQUIRE(got.count(len) == 1);
                const auto& g = got.at(len);
                REQUIRE(g.size() == fs.size());
                for (std::size_t i = 0; i < fs.size(); ++i) {
                    CHECK(g[i].factor.str() == fs[i].first);
                    CHECK(g[i].valence == fs[i].second);
                }
            }
        }
        for (const auto& b : rep.bispecial) {
            CHECK(oracle::right_valence(s, b.str()) >= 2);
            CHECK(oracle::left_valence(s, b.str()) >= 2);
        }
        const auto p = rep.params();
        CHECK(std::max(p.R, p.K) == std::max(p.L, p.H));
    });
}

TEST_CASE("first-difference identity and duality over 4 letters up to length 7") {
    oracle::each_word(4, 7, [](const std::string& s) {
        const Word w = Word::parse(s);
        const auto c = complexity_profile(w).values;
        for (std::size_t n = 0; n < w.size(); ++n) {
            std::size_t sum = 0;
            for (const auto& u : factors_of_length(w, n)) sum += right_valence(w, u);
            CHECK(c[n + 1] == sum);
        }
        const auto p = parameters(w), r = parameters(reverse(w));
        CHECK(p.R == r.L);
        CHECK(p.K == r.H);
        CHECK(complexity_profile(reverse(w)) == complexity_profile(w));
        const std::size_t a = alphabet_size(w);
        CHECK(w.size() + 2 >= p.R + p.K + a);
        CHECK(w.size() + 2 >= p.L + p.H + a);
    });
}
