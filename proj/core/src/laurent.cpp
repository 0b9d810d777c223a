#include "fusionq/laurent.hpp"

#include <algorithm>

namespace fusionq {

LaurentPoly::LaurentPoly(const mpz_class& c, int exponent) {
    if (c != 0) {
        low_ = exponent;
        c_.push_back(c);
    }
}

void LaurentPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
    std::size_t lead_zeros = 0;
    while (lead_zeros < c_.size() && c_[lead_zeros] == 0) ++lead_zeros;
    if (lead_zeros > 0) {
        c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead_zeros));
        low_ += static_cast<int>(lead_zeros);
    }
    if (c_.empty()) low_ = 0;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    const int lo = std::min(low_, o.low_);
    const int hi = std::max(low_ + static_cast<int>(c_.size()), o.low_ + static_cast<int>(o.c_.size()));
    if (lo < low_) {
        c_.insert(c_.begin(), static_cast<std::size_t>(low_ - lo), mpz_class(0));
        low_ = lo;
    }
    c_.resize(static_cast<std::size_t>(hi - lo));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[static_cast<std::size_t>(o.low_ - lo) + i] += o.c_[i];
    normalize();
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    r.add_product(a, b);
    return r;
}

void LaurentPoly::add_product(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return;
    const int plo = a.low_ + b.low_;
    const int phi = plo + static_cast<int>(a.c_.size() + b.c_.size()) - 1;
    if (is_zero()) low_ = plo;
    const int lo = std::min(low_, plo);
    const int hi = std::max(low_ + static_cast<int>(c_.size()), phi);
    if (lo < low_) {
        c_.insert(c_.begin(), static_cast<std::size_t>(low_ - lo), mpz_class(0));
        low_ = lo;
    }
    c_.resize(static_cast<std::size_t>(hi - lo));
    const std::size_t off = static_cast<std::size_t>(plo - lo);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            mpz_addmul(c_[off + i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
        }
    }
    normalize();
}

RationalFunctionQ LaurentPoly::to_rational_function() const {
    if (is_zero()) return RationalFunctionQ();
    std::vector<BigRational> coeffs;
    coeffs.reserve(c_.size());
    for (const auto& x : c_) coeffs.emplace_back(x);
    PolynomialQ p(std::move(coeffs));
    if (low_ >= 0) return RationalFunctionQ(p.shifted(low_));
    return RationalFunctionQ::make(p, PolynomialQ::monomial(BigRational(1), -low_));
}

BigRational LaurentPoly::eval(const BigRational& q0) const {
    if (is_zero()) return BigRational();
    BigRational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q0 + BigRational(*it);
    return acc * pow(q0, low_);
}

}  // namespace fusionq
