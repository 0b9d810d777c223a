#include <doctest.h>

#include "fusionq/fusion.hpp"
#include "fusionq/permutation.hpp"

using namespace fusionq;

namespace {
Permutation p(std::vector<int> v) { return Permutation(std::move(v)); }
}  // namespace

TEST_CASE("perm_compose examples") {
    CHECK(perm_compose(p({2, 1, 3}), p({1, 3, 2})) == p({2, 3, 1}));
    CHECK(perm_compose(p({3, 1, 2}), Permutation::identity(3)) == p({3, 1, 2}));
    CHECK(perm_compose(p({2, 1}), p({2, 1})) == p({1, 2}));
    CHECK_THROWS(perm_compose(p({2, 1}), p({1, 2, 3})));
    CHECK_THROWS(p({1, 1, 2}));
}

TEST_CASE("perm_length_and_word examples") {
    const auto id = perm_length_and_word(Permutation::identity(4));
    CHECK(id.length == 0);
    CHECK(id.word.empty());
    const auto w0 = perm_length_and_word(p({3, 2, 1}));
    CHECK(w0.length == 3);
    CHECK(w0.word.size() == 3);
    CHECK(from_word(w0.word, 3) == p({3, 2, 1}));
    const auto s1 = perm_length_and_word(p({2, 1, 3}));
    CHECK(s1.length == 1);
    CHECK(s1.word == std::vector<int>{1});
}

TEST_CASE("longest_element examples") {
    CHECK(longest_element(3) == p({3, 2, 1}));
    CHECK(longest_element(1) == p({1}));
    CHECK(longest_element(4).length() == 6);
    CHECK_THROWS(longest_element(0));
}

TEST_CASE("reduced words reproduce every permutation, n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        for (const auto& s : all_permutations(n)) {
            const auto lw = perm_length_and_word(s);
            CHECK(lw.length == s.length());
            CHECK(static_cast<int>(lw.word.size()) == lw.length);
            CHECK(from_word(lw.word, n) == s);
        }
    }
}

TEST_CASE("composition is associative on S_4") {
    const auto all = all_permutations(4);
    for (const auto& a : all)
        for (const auto& b : all)
            for (const auto& c : all) REQUIRE(perm_compose(perm_compose(a, b), c) == perm_compose(a, perm_compose(b, c)));
}

TEST_CASE("sigma_0 as the ordered product of sigma_{j-i} over pair_order is reduced, n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        std::vector<int> word;
        for (auto [i, j] : pair_order(n)) word.push_back(j - i);
        const Permutation s = from_word(word, n);
        CHECK(s == longest_element(n));
        CHECK(static_cast<std::size_t>(s.length()) == word.size());
    }
}

TEST_CASE("lex_rank enumerates S_n in order") {
    const auto all = all_permutations(4);
    CHECK(all.size() == 24);
    for (std::size_t r = 0; r < all.size(); ++r) CHECK(lex_rank(all[r]) == r);
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(factorial(8) == 40320);
}

TEST_CASE("shift_embed moves generators") {
    CHECK(shift_embed(Permutation::generator(1, 2), 3, 5) == Permutation::generator(4, 5));
    CHECK(shift_embed(p({2, 3, 1}), 1, 4) == p({1, 3, 4, 2}));
}
