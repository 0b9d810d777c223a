#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace fusionq {

/// Exact rational number. Always stored in lowest terms with a positive
/// denominator; zero is 0/1.
class BigRational {
public:
    BigRational() = default;
    BigRational(int v) : v_(v) {}                // NOLINT
    BigRational(long v) : v_(v) {}               // NOLINT
    BigRational(const mpz_class& v) : v_(v) {}   // NOLINT
    BigRational(const mpz_class& num, const mpz_class& den);
    explicit BigRational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    /// Parses "p" or "p/q" in decimal.
    static BigRational parse(const std::string& s);

    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    BigRational inverse() const;

    BigRational& operator+=(const BigRational& o) { v_ += o.v_; return *this; }
    BigRational& operator-=(const BigRational& o) { v_ -= o.v_; return *this; }
    BigRational& operator*=(const BigRational& o) { v_ *= o.v_; return *this; }
    BigRational& operator/=(const BigRational& o);

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
    BigRational operator-() const { return BigRational(mpq_class(-v_)); }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// "p/q", or "p" when the denominator is 1.
    std::string to_string() const { return v_.get_str(); }

    friend std::ostream& operator<<(std::ostream& os, const BigRational& r) {
        return os << r.to_string();
    }

private:
    mpq_class v_{0};
};

BigRational pow(const BigRational& base, int exponent);

}  // namespace fusionq
