#include <doctest.h>

#include "fusionq/fusion.hpp"

using namespace fusionq;

namespace {

// N(t) / D(t) of a cleared product, coefficient by coefficient, over Q(q)(t).
ElementQT as_rational(const ClearedProduct<LaurentPoly>& cp) {
    auto poly_t = [](const std::vector<LaurentPoly>& c) {
        std::vector<RationalFunctionQ> v;
        for (const auto& x : c) v.push_back(x.to_rational_function());
        return RationalFunctionQT(PolynomialQT(std::move(v)));
    };
    const auto table = PermTable::get(cp.n);
    const RationalFunctionQT den = poly_t(cp.denom);
    ElementQT out(cp.n);
    for (std::size_t r = 0; r < table->size(); ++r) {
        std::vector<LaurentPoly> col;
        for (const auto& level : cp.coeffs) col.push_back(level[r]);
        out.add_term(table->perms()[r], poly_t(col) / den);
    }
    return out;
}

std::vector<LineFactor> sample_factors() {
    return {{1, {0, 0}, {2, 1}}, {2, {0, 0}, {-2, 3}}, {1, {2, 1}, {-2, 3}}, {3, {4, 2}, {0, 5}}, {2, {-4, 0}, {0, 5}}};
}

}  // namespace

TEST_CASE("cleared product equals the ordered product over Q(q)(t)") {
    const auto f = sample_factors();
    const auto cp = cleared_product(4, f, static_cast<int>(f.size()), LaurentRing{});
    CHECK(cp.singular == 0);
    CHECK(as_rational(cp) == ordered_product_t(4, f));
}

TEST_CASE("integer ring is the Laurent ring at q0 up to a common scale") {
    const auto f = sample_factors();
    const int cap = static_cast<int>(f.size());
    const auto lp = cleared_product(4, f, cap, LaurentRing{});
    for (const BigRational& q0 : {BigRational{mpz_class(6), mpz_class(5)}, BigRational{mpz_class(-77), mpz_class(15)}}) {
        const auto ip = cleared_product(4, f, cap, IntegerRing(q0));
        // Compare N / D at t = 1.
        BigRational dl, di;
        for (int d = 0; d <= cap; ++d) {
            dl += lp.denom[static_cast<std::size_t>(d)].eval(q0);
            di += BigRational(ip.denom[static_cast<std::size_t>(d)]);
        }
        for (std::size_t r = 0; r < 24; ++r) {
            BigRational nl, ni;
            for (int d = 0; d <= cap; ++d) {
                nl += lp.coeffs[static_cast<std::size_t>(d)][r].eval(q0);
                ni += BigRational(ip.coeffs[static_cast<std::size_t>(d)][r]);
            }
            CHECK(nl / dl == ni / di);
        }
    }
}

TEST_CASE("identically singular factor is rejected") {
    const std::vector<LineFactor> f{{1, {2, 3}, {2, 3}}};
    CHECK_THROWS_AS(cleared_product(2, f, 1, LaurentRing{}), SingularFactorError);
    CHECK_THROWS_WITH(cleared_product(2, f, 1, LaurentRing{}), "identically singular factor");
}

TEST_CASE("singular factors are counted and truncation keeps the low levels") {
    const std::vector<LineFactor> f{{1, {0, 0}, {0, 1}}, {2, {0, 0}, {2, 2}}};
    const auto full = cleared_product(3, f, 2, LaurentRing{});
    const auto cut = cleared_product(3, f, 1, LaurentRing{});
    CHECK(full.singular == 1);
    REQUIRE(cut.coeffs.size() == 2);
    CHECK(cut.coeffs[0] == full.coeffs[0]);
    CHECK(cut.coeffs[1] == full.coeffs[1]);
}

TEST_CASE("PermTable right multiplication") {
    const auto t = PermTable::get(4);
    CHECK(t.get() == PermTable::get(4).get());
    for (std::size_t r = 0; r < t->size(); ++r) {
        for (int k = 1; k < 4; ++k) {
            const Permutation& s = t->perms()[r];
            CHECK(t->perms()[t->right(k, r)] == s.times_generator(k));
            CHECK(t->descent(k, r) == !s.right_ascent(k));
        }
    }
}
