#pragma once

// Canonical rational functions over an exact field K.
//
// RationalFunctionQ  = RatFunc<BigRational>        : Q(q)
// RationalFunctionQT = RatFunc<RationalFunctionQ>  : Q(q)(t)
//
// The representation is canonical, so equality is structural:
//   * num and den are coprime;
//   * over Q, num and den have integer coefficients with joint content 1
//     and den has a positive leading coefficient;
//   * over any other field, den is monic.

#include <string>
#include <utility>

#include "fusionq/errors.hpp"
#include "fusionq/polynomial.hpp"

namespace fusionq {

/// Scales num and den by a common unit so den is monic.
template <class K>
void canonicalize_units(Poly<K>& num, Poly<K>& den) {
    const K& lead = den.lead();
    if (lead == K(1)) return;
    const K inv = K(1) / lead;
    num = num * inv;
    den = den * inv;
}

/// Q specialization: integer coefficients, joint content 1, den leading > 0.
void canonicalize_units(PolynomialQ& num, PolynomialQ& den);

template <class K>
class RatFunc {
public:
    using Coeff = K;
    using PolyT = Poly<K>;

    RatFunc() : den_(K(1)) {}
    RatFunc(int c) : num_(K(c)), den_(K(1)) {}  // NOLINT: constants embed implicitly
    RatFunc(const K& c) : num_(c), den_(K(1)) { canonicalize_units(num_, den_); }  // NOLINT
    RatFunc(const PolyT& p) : num_(p), den_(K(1)) {  // NOLINT
        if (!num_.is_zero()) canonicalize_units(num_, den_);
    }

    /// Canonical representative of num/den.
    static RatFunc make(PolyT num, PolyT den) {
        if (den.is_zero()) throw std::domain_error("division by zero polynomial");
        RatFunc r;
        if (num.is_zero()) return r;
        if (!den.is_constant() && !num.is_constant()) {
            PolyT g = gcd(num, den);
            if (g.degree() > 0) {
                num = divexact(num, g);
                den = divexact(den, g);
            }
        }
        canonicalize_units(num, den);
        r.num_ = std::move(num);
        r.den_ = std::move(den);
        return r;
    }

    /// The indeterminate itself.
    static RatFunc variable() { return RatFunc(PolyT::variable()); }

    const PolyT& num() const { return num_; }
    const PolyT& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const { return den_.is_constant(); }

    RatFunc inverse() const {
        if (is_zero()) throw std::domain_error("division by zero");
        RatFunc r;
        r.num_ = den_;
        r.den_ = num_;
        canonicalize_units(r.num_, r.den_);
        return r;
    }

    /// Exact evaluation at x; throws PoleError("evaluation pole") when the
    /// denominator vanishes there.
    K eval(const K& x) const {
        K d = den_.eval(x);
        if (d.is_zero()) throw PoleError("evaluation pole");
        return num_.eval(x) / d;
    }

    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero() || b.is_zero()) return RatFunc();
        PolyT n1 = a.num_, d2 = b.den_, n2 = b.num_, d1 = a.den_;
        cancel(n1, d2);
        cancel(n2, d1);
        RatFunc r;
        r.num_ = n1 * n2;
        r.den_ = d1 * d2;
        canonicalize_units(r.num_, r.den_);
        return r;
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_ == b.den_) {
            PolyT n = a.num_ + b.num_;
            if (n.is_zero()) return RatFunc();
            PolyT d = a.den_;
            cancel(n, d);
            RatFunc r;
            r.num_ = std::move(n);
            r.den_ = std::move(d);
            canonicalize_units(r.num_, r.den_);
            return r;
        }
        // gcd(a1 d2' + b1 d1', d1' d2' g) = gcd(a1 d2' + b1 d1', g)
        PolyT g = (a.den_.is_constant() || b.den_.is_constant()) ? PolyT(K(1)) : gcd(a.den_, b.den_);
        PolyT d1 = g.is_constant() ? a.den_ : divexact(a.den_, g);
        PolyT d2 = g.is_constant() ? b.den_ : divexact(b.den_, g);
        PolyT n = a.num_ * d2 + b.num_ * d1;
        if (n.is_zero()) return RatFunc();
        PolyT den = d1 * b.den_;
        if (!g.is_constant()) {
            PolyT h = gcd(n, g);
            if (h.degree() > 0) {
                n = divexact(n, h);
                den = divexact(den, h);
            }
        }
        RatFunc r;
        r.num_ = std::move(n);
        r.den_ = std::move(den);
        canonicalize_units(r.num_, r.den_);
        return r;
    }

    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    // Removes the common factor of x and y from both.
    static void cancel(PolyT& x, PolyT& y) {
        if (x.is_constant() || y.is_constant()) return;
        PolyT g = gcd(x, y);
        if (g.degree() > 0) {
            x = divexact(x, g);
            y = divexact(y, g);
        }
    }

    PolyT num_;
    PolyT den_;
};

using RationalFunctionQ = RatFunc<BigRational>;
using RationalFunctionQT = RatFunc<RationalFunctionQ>;
using PolynomialQT = Poly<RationalFunctionQ>;

/// Canonical coprime representative of num/den; throws on a zero
/// denominator ("division by zero polynomial").
inline RationalFunctionQ ratq_normalize(PolynomialQ num, PolynomialQ den) {
    return RationalFunctionQ::make(std::move(num), std::move(den));
}

/// Monic gcd over Q.
inline PolynomialQ polyq_gcd(const PolynomialQ& a, const PolynomialQ& b) { return gcd(a, b); }

/// Exact value at q = q0; throws PoleError("evaluation pole").
inline BigRational ratq_eval(const RationalFunctionQ& f, const BigRational& q0) { return f.eval(q0); }

/// Value of f at t = 0. f is canonical, so a vanishing den(0) is a genuine
/// pole; throws PoleError("pole at t=0").
RationalFunctionQ ratqt_limit_t0(const RationalFunctionQT& f);

/// Substitutes t = 0 coefficient-wise without reducing first; used as an
/// independent check of ratqt_limit_t0.
RationalFunctionQ ratqt_substitute_t0(const PolynomialQT& num, const PolynomialQT& den);

/// The constant q^k, k of either sign.
RationalFunctionQ q_power(int k);

/// "num / den" (just "num" when den is 1), polynomials in the
/// sparse ascending format.
std::string to_string(const RationalFunctionQ& f);
std::string to_string(const RationalFunctionQT& f);

/// Builds the canonical form from the two polynomial strings.
RationalFunctionQ parse_rational_function(const std::string& num, const std::string& den);

}  // namespace fusionq
