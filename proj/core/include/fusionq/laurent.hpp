#pragma once

#include <vector>

#include "fusionq/rational_function.hpp"

namespace fusionq {

/// Integer Laurent polynomial in q: sum_k c_k q^(low + k).
///
/// Every constant that appears in the Hecke relations and in a fusion
/// factor with its denominator cleared lies in Z[q, q^-1], so products
/// of cleared factors never need a gcd.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(int c) : LaurentPoly(mpz_class(c), 0) {}  // NOLINT
    LaurentPoly(const mpz_class& c, int exponent);

    static LaurentPoly monomial(int exponent) { return LaurentPoly(mpz_class(1), exponent); }

    bool is_zero() const { return c_.empty(); }
    int low() const { return low_; }
    const std::vector<mpz_class>& coeffs() const { return c_; }

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    LaurentPoly operator-() const;
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    /// this += a * b without a temporary for the product.
    void add_product(const LaurentPoly& a, const LaurentPoly& b);

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.low_ == b.low_ && a.c_ == b.c_;
    }

    RationalFunctionQ to_rational_function() const;
    BigRational eval(const BigRational& q0) const;

private:
    void normalize();

    int low_ = 0;
    std::vector<mpz_class> c_;
};

}  // namespace fusionq
