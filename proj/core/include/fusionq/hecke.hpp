#pragma once

// The Hecke algebra H_n in the T_sigma basis, generic over the scalar
// field. The value of q is part of the algebra object, so the same code
// computes over Q(q), over Q(q)(t), at a numeric q0, and at q = 1 where
// H_n becomes the group ring of S_n.
//
// Multiplication only ever uses the rule
//   T_sigma T_i = T_{sigma sigma_i}                          if l(sigma sigma_i) > l(sigma)
//   T_sigma T_i = T_{sigma sigma_i} + (q - q^-1) T_sigma     otherwise
// (and its left-handed mirror), which the quadratic, braid and commutation
// relations force.

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "fusionq/permutation.hpp"

namespace fusionq {

template <class S>
class HeckeElement {
public:
    using Scalar = S;
    using Terms = std::map<Permutation, S>;

    HeckeElement() = default;
    explicit HeckeElement(int n) : n_(n) {}

    int n() const { return n_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// The coefficient of T_s, zero when absent.
    S coeff(const Permutation& s) const {
        auto it = terms_.find(s);
        return it == terms_.end() ? S() : it->second;
    }

    /// Adds c T_s; never stores a zero coefficient.
    void add_term(const Permutation& s, const S& c) {
        if (c.is_zero()) return;
        check_degree(s);
        auto [it, inserted] = terms_.try_emplace(s, c);
        if (!inserted) {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    HeckeElement& operator+=(const HeckeElement& o) {
        check_same(o);
        for (const auto& [s, c] : o.terms_) add_term(s, c);
        return *this;
    }
    HeckeElement& operator-=(const HeckeElement& o) {
        check_same(o);
        for (const auto& [s, c] : o.terms_) add_term(s, -c);
        return *this;
    }
    friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
    friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
    HeckeElement operator-() const { return scaled(S(-1)); }

    HeckeElement scaled(const S& c) const {
        HeckeElement r(n_);
        if (c.is_zero()) return r;
        for (const auto& [s, x] : terms_) r.terms_.emplace_hint(r.terms_.end(), s, x * c);
        return r;
    }

    friend bool operator==(const HeckeElement& a, const HeckeElement& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    /// Coefficient-wise image under a map of scalars.
    template <class S2, class F>
    HeckeElement<S2> map_coeffs(F&& f) const {
        HeckeElement<S2> r(n_);
        for (const auto& [s, c] : terms_) r.add_term(s, f(c));
        return r;
    }

private:
    void check_degree(const Permutation& s) const {
        if (s.size() != n_) throw std::invalid_argument("permutation degree does not match H_n");
    }
    void check_same(const HeckeElement& o) const {
        if (o.n_ != n_) throw std::invalid_argument("Hecke elements of different n");
    }

    int n_ = 0;
    Terms terms_;
};

template <class S>
class HeckeAlgebra {
public:
    using Element = HeckeElement<S>;

    HeckeAlgebra(int n, S q) : n_(n), q_(std::move(q)) {
        if (n < 1) throw std::invalid_argument("H_n needs n >= 1");
        q_inv_ = S(1) / q_;
        q_diff_ = q_ - q_inv_;
    }

    int n() const { return n_; }
    const S& q() const { return q_; }
    const S& q_inverse() const { return q_inv_; }
    /// q - q^-1.
    const S& q_diff() const { return q_diff_; }

    Element zero() const { return Element(n_); }
    Element one() const { return scalar(S(1)); }
    Element scalar(const S& c) const {
        Element e(n_);
        e.add_term(Permutation::identity(n_), c);
        return e;
    }

    /// The basis element T_s.
    Element t_sigma(const Permutation& s) const {
        if (s.size() != n_) throw std::invalid_argument("permutation degree does not match H_n");
        Element e(n_);
        e.add_term(s, S(1));
        return e;
    }
    Element t_gen(int i) const { return t_sigma(Permutation::generator(i, n_)); }

    /// x T_i.
    Element mul_gen_right(const Element& x, int i) const {
        check_gen(i);
        Element r(n_);
        for (const auto& [s, c] : x.terms()) {
            r.add_term(s.times_generator(i), c);
            if (!s.right_ascent(i)) r.add_term(s, c * q_diff_);
        }
        return r;
    }

    /// T_i x.
    Element mul_gen_left(int i, const Element& x) const {
        check_gen(i);
        Element r(n_);
        for (const auto& [s, c] : x.terms()) {
            r.add_term(s.generator_times(i), c);
            if (!left_ascent(s, i)) r.add_term(s, c * q_diff_);
        }
        return r;
    }

    /// x (T_i + c).
    Element mul_affine_right(const Element& x, int i, const S& c) const {
        Element r = mul_gen_right(x, i);
        r += x.scaled(c);
        return r;
    }

    /// (T_i + c) x.
    Element mul_affine_left(int i, const S& c, const Element& x) const {
        Element r = mul_gen_left(i, x);
        r += x.scaled(c);
        return r;
    }

    /// x T_i^{-1}.
    Element mul_inverse_gen_right(const Element& x, int i) const {
        return mul_affine_right(x, i, q_inv_ - q_);
    }

    /// Bilinear product: for each basis term T_tau of y, x T_tau is built
    /// from x T_{tau sigma_i} for a right descent i, memoised by tau.
    Element mul(const Element& x, const Element& y) const {
        if (x.n() != n_ || y.n() != n_) throw std::invalid_argument("Hecke elements of different n");
        Element r(n_);
        if (x.is_zero() || y.is_zero()) return r;
        std::map<Permutation, Element> memo;
        memo.emplace(Permutation::identity(n_), x);
        std::function<const Element&(const Permutation&)> x_times = [&](const Permutation& tau) -> const Element& {
            auto it = memo.find(tau);
            if (it != memo.end()) return it->second;
            int i = 1;
            while (tau.right_ascent(i)) ++i;  // tau != id has a right descent
            Element v = mul_gen_right(x_times(tau.times_generator(i)), i);
            return memo.emplace(tau, std::move(v)).first->second;
        };
        for (const auto& [tau, c] : y.terms()) r += x_times(tau).scaled(c);
        return r;
    }

    /// T_i^{-1} = T_i - q + q^{-1}.
    Element t_inverse_gen(int i) const {
        check_gen(i);
        Element e = t_gen(i);
        e.add_term(Permutation::identity(n_), q_inv_ - q_);
        return e;
    }

    /// T_s^{-1} = T_{i_l}^{-1} ... T_{i_1}^{-1} for a reduced word i_1..i_l of s.
    Element t_sigma_inverse(const Permutation& s) const {
        const auto word = perm_length_and_word(s).word;
        Element r = one();
        for (auto it = word.rbegin(); it != word.rend(); ++it) r = mul_inverse_gen_right(r, *it);
        return r;
    }

    /// The antiautomorphism fixing every T_i: T_s -> T_{s^-1}.
    Element phi(const Element& x) const {
        Element r(n_);
        for (const auto& [s, c] : x.terms()) r.add_term(s.inverse(), c);
        return r;
    }

    S coeff_of(const Element& x, const Permutation& s) const { return x.coeff(s); }

private:
    static bool left_ascent(const Permutation& s, int i) {
        // l(sigma_i s) > l(s) iff i appears before i+1 in the one-line notation.
        for (int v : s.images()) {
            if (v == i) return true;
            if (v == i + 1) return false;
        }
        return true;
    }
    void check_gen(int i) const {
        if (i < 1 || i >= n_) throw std::out_of_range("generator index out of range");
    }

    int n_;
    S q_;
    S q_inv_;
    S q_diff_;
};

}  // namespace fusionq
