#pragma once

// Dense univariate polynomials over an exact field K.
//
// K must be default-constructible to zero, constructible from int, and
// provide + - * /, unary -, == and is_zero(). Coefficients are stored in
// ascending order of exponent with no trailing zeros; the zero polynomial
// is the empty sequence.

#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "fusionq/rational.hpp"

namespace fusionq {

template <class K>
class Poly {
public:
    Poly() = default;
    Poly(const K& constant) {  // NOLINT: constants embed implicitly
        if (!constant.is_zero()) c_.push_back(constant);
    }
    Poly(int constant) : Poly(K(constant)) {}  // NOLINT
    explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly variable() { return monomial(K(1), 1); }
    static Poly monomial(const K& c, int degree) {
        if (degree < 0) throw std::invalid_argument("negative degree");
        Poly p;
        if (c.is_zero()) return p;
        p.c_.assign(static_cast<std::size_t>(degree) + 1, K());
        p.c_.back() = c;
        return p;
    }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    K coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return K();
        return c_[static_cast<std::size_t>(i)];
    }
    const K& lead() const {
        if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }
    const std::vector<K>& coeffs() const { return c_; }

    K eval(const K& x) const {
        K acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Poly monic() const {
        if (c_.empty()) return *this;
        return *this * (K(1) / c_.back());
    }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
        trim();
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    Poly operator-() const {
        Poly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<K> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                if (b.c_[j].is_zero()) continue;
                r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
            }
        }
        return Poly(std::move(r));
    }
    friend Poly operator*(Poly a, const K& s) {
        if (s.is_zero()) return Poly();
        for (auto& x : a.c_) x = x * s;
        a.trim();
        return a;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    /// Multiplies by x^k.
    Poly shifted(int k) const {
        if (c_.empty() || k == 0) return *this;
        Poly r;
        r.c_.assign(static_cast<std::size_t>(k), K());
        r.c_.insert(r.c_.end(), c_.begin(), c_.end());
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    /// Euclidean division; returns {quotient, remainder}.
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw std::domain_error("division by zero polynomial");
        Poly rem = a;
        if (a.degree() < b.degree()) return {Poly(), rem};
        std::vector<K> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1));
        const K inv_lead = K(1) / b.lead();
        const int db = b.degree();
        while (!rem.is_zero() && rem.degree() >= db) {
            const int shift = rem.degree() - db;
            const K f = rem.lead() * inv_lead;
            quo[static_cast<std::size_t>(shift)] = f;
            for (int i = 0; i <= db; ++i) {
                auto& slot = rem.c_[static_cast<std::size_t>(i + shift)];
                slot = slot - f * b.c_[static_cast<std::size_t>(i)];
            }
            rem.c_.pop_back();  // leading term cancels
            rem.trim();
        }
        return {Poly(std::move(quo)), rem};
    }

    /// Exact quotient; throws if b does not divide a.
    friend Poly divexact(const Poly& a, const Poly& b) {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
        return q;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<K> c_;
};

/// Monic gcd by the Euclidean algorithm over the field K.
template <class K>
Poly<K> gcd(Poly<K> a, Poly<K> b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of two zero polynomials");
    while (!b.is_zero()) {
        Poly<K> r = divmod(a, b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

using PolynomialQ = Poly<BigRational>;

/// Monic gcd over Q. Runs a primitive remainder sequence over Z so the
/// intermediate coefficients stay small.
PolynomialQ gcd(const PolynomialQ& a, const PolynomialQ& b);

/// Euclidean gcd over Q with monic remainders; kept as an independent
/// reference for the primitive remainder sequence.
PolynomialQ gcd_euclid(const PolynomialQ& a, const PolynomialQ& b);

/// Returns c * p where c > 0 is chosen so the result has integer
/// coefficients with content 1.
PolynomialQ primitive_part(const PolynomialQ& p);

/// Sparse term list in ascending exponent, e.g. "-1 + q^2" for q^2 - 1.
std::string to_string(const PolynomialQ& p, char var = 'q');

/// Inverse of to_string(PolynomialQ).
PolynomialQ parse_polynomial(const std::string& s, char var = 'q');

}  // namespace fusionq
