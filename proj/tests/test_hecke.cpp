#include <doctest.h>

#include <random>

#include "fusionq/fusion.hpp"
#include "fusionq/repr.hpp"

using namespace fusionq;

namespace {

const RationalFunctionQ q = RationalFunctionQ::variable();
const RationalFunctionQ qi = RationalFunctionQ(1) / q;

Permutation p(std::vector<int> v) { return Permutation(std::move(v)); }

ElementQ random_element(std::mt19937_64& rng, int n) {
    const auto all = all_permutations(n);
    ElementQ x(n);
    for (int k = 0; k < 4; ++k) {
        const RationalFunctionQ c = RationalFunctionQ(static_cast<int>(rng() % 7) - 3) + q_power(static_cast<int>(rng() % 5) - 2);
        x.add_term(all[rng() % all.size()], c);
    }
    return x;
}

}  // namespace

TEST_CASE("t_sigma examples") {
    const HeckeQ h3 = symbolic_algebra(3);
    CHECK(h3.t_sigma(Permutation::identity(3)) == h3.one());
    CHECK(symbolic_algebra(2).t_sigma(p({2, 1})) == symbolic_algebra(2).t_gen(1));
    const ElementQ w0 = h3.t_sigma(p({3, 2, 1}));
    CHECK(w0.size() == 1);
    CHECK(w0.coeff(p({3, 2, 1})) == RationalFunctionQ(1));
}

TEST_CASE("mul_gen_right examples") {
    const HeckeQ h2 = symbolic_algebra(2);
    const ElementQ t1 = h2.t_gen(1);
    CHECK(h2.mul_gen_right(t1, 1) == h2.one() + t1.scaled(q - qi));
    CHECK(h2.mul_gen_right(h2.one(), 1) == t1);
    const HeckeQ h3 = symbolic_algebra(3);
    CHECK(h3.mul_gen_right(h3.mul(h3.t_gen(1), h3.t_gen(2)), 1) == h3.t_sigma(longest_element(3)));
    CHECK_THROWS(h3.mul_gen_right(h3.one(), 3));
    CHECK_THROWS(h3.mul_gen_right(h3.one(), 0));
}

TEST_CASE("mul examples") {
    const HeckeQ h4 = symbolic_algebra(4);
    std::mt19937_64 rng(3);
    const ElementQ x = random_element(rng, 4);
    CHECK(h4.mul(x, h4.one()) == x);
    CHECK(h4.mul(h4.t_gen(1), h4.t_gen(3)) == h4.t_sigma(p({2, 1, 4, 3})));
    CHECK(h4.mul(h4.t_gen(1), h4.t_gen(3)) == h4.mul(h4.t_gen(3), h4.t_gen(1)));
    for (int i = 1; i < 4; ++i) {
        CHECK(h4.mul(h4.t_gen(i) - h4.scalar(q), h4.t_gen(i) + h4.scalar(qi)).is_zero());
    }
    CHECK_THROWS(h4.mul(x, symbolic_algebra(3).one()));
}

TEST_CASE("t_inverse_gen examples") {
    const HeckeQ h2 = symbolic_algebra(2);
    const ElementQ inv = h2.t_inverse_gen(1);
    CHECK(inv == h2.t_gen(1) + h2.scalar(qi - q));
    CHECK(h2.mul(h2.t_gen(1), inv) == h2.one());
    CHECK(h2.t_sigma_inverse(longest_element(2)) == inv);
}

TEST_CASE("t_sigma_inverse examples") {
    const HeckeQ h3 = symbolic_algebra(3);
    CHECK(h3.t_sigma_inverse(Permutation::identity(3)) == h3.one());
    CHECK(h3.t_sigma_inverse(Permutation::generator(1, 3)) == h3.t_gen(1) + h3.scalar(qi - q));
    const Permutation w0 = longest_element(3);
    CHECK(h3.mul(h3.t_sigma(w0), h3.t_sigma_inverse(w0)) == h3.one());
    for (const auto& s : all_permutations(4)) {
        const HeckeQ h4 = symbolic_algebra(4);
        CHECK(h4.mul(h4.t_sigma_inverse(s), h4.t_sigma(s)) == h4.one());
    }
}

TEST_CASE("phi examples") {
    const HeckeQ h3 = symbolic_algebra(3);
    CHECK(h3.phi(h3.t_gen(1)) == h3.t_gen(1));
    CHECK(h3.phi(h3.mul(h3.t_gen(1), h3.t_gen(2))) == h3.mul(h3.t_gen(2), h3.t_gen(1)));
    CHECK(h3.phi(h3.one()) == h3.one());
}

TEST_CASE("coeff_of examples") {
    const HeckeQ h2 = symbolic_algebra(2);
    CHECK(h2.coeff_of(h2.one(), Permutation::identity(2)) == RationalFunctionQ(1));
    CHECK(h2.coeff_of(h2.t_gen(1) - h2.scalar(q), Permutation::generator(1, 2)) == RationalFunctionQ(1));
    CHECK(h2.coeff_of(h2.t_gen(1), Permutation::identity(2)).is_zero());
}

TEST_CASE("relations for n <= 5") {
    for (int n = 2; n <= 5; ++n) {
        const HeckeQ h = symbolic_algebra(n);
        for (int i = 1; i < n; ++i) {
            const ElementQ ti = h.t_gen(i);
            CHECK(h.mul(ti - h.scalar(q), ti + h.scalar(qi)).is_zero());
            for (int j = i + 1; j < n; ++j) {
                const ElementQ tj = h.t_gen(j);
                if (j == i + 1) {
                    CHECK(h.mul(h.mul(ti, tj), ti) == h.mul(h.mul(tj, ti), tj));
                } else {
                    CHECK(h.mul(ti, tj) == h.mul(tj, ti));
                }
            }
        }
    }
}

TEST_CASE("phi is an involutive antiautomorphism and mul is associative, random H_4") {
    const HeckeQ h = symbolic_algebra(4);
    std::mt19937_64 rng(2024);
    for (int s = 0; s < 50; ++s) {
        const ElementQ x = random_element(rng, 4), y = random_element(rng, 4), z = random_element(rng, 4);
        CHECK(h.phi(h.phi(x)) == x);
        CHECK(h.phi(h.mul(x, y)) == h.mul(h.phi(y), h.phi(x)));
        CHECK(h.mul(h.mul(x, y), z) == h.mul(x, h.mul(y, z)));
    }
}

TEST_CASE("idempotents P- and P+") {
    const HeckeQ h = symbolic_algebra(3);
    const RationalFunctionQ qq = q + qi;
    for (int i = 1; i < 3; ++i) {
        const ElementQ pm = (h.t_gen(i) - h.scalar(q)).scaled(-(RationalFunctionQ(1) / qq));
        const ElementQ pp = (h.t_gen(i) + h.scalar(qi)).scaled(RationalFunctionQ(1) / qq);
        CHECK(h.mul(pm, pm) == pm);
        CHECK(h.mul(pp, pp) == pp);
        CHECK(pm + pp == h.one());
    }
}

TEST_CASE("at q = 1 the algebra is the group ring") {
    const HeckeNum g = numeric_algebra(3, BigRational(1));
    for (const auto& s : all_permutations(3))
        for (const auto& t : all_permutations(3))
            CHECK(g.mul(g.t_sigma(s), g.t_sigma(t)) == g.t_sigma(perm_compose(s, t)));
}

TEST_CASE("left and right generator multiplication agree with mul") {
    const HeckeQ h = symbolic_algebra(4);
    std::mt19937_64 rng(11);
    for (int s = 0; s < 10; ++s) {
        const ElementQ x = random_element(rng, 4);
        for (int i = 1; i < 4; ++i) {
            CHECK(h.mul_gen_left(i, x) == h.mul(h.t_gen(i), x));
            CHECK(h.mul_gen_right(x, i) == h.mul(x, h.t_gen(i)));
            CHECK(h.mul_inverse_gen_right(x, i) == h.mul(x, h.t_inverse_gen(i)));
        }
        CHECK(times_longest_inverse(h, x) == h.mul(x, h.t_sigma_inverse(longest_element(4))));
    }
}
