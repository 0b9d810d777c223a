#include "fusionq/rational.hpp"

namespace fusionq {

BigRational::BigRational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("division by zero");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

BigRational BigRational::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    mpq_class v;
    std::string t = s;
    if (t[0] == '+') t.erase(0, 1);
    if (v.set_str(t, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    if (v.get_den() == 0) throw std::domain_error("division by zero");
    v.canonicalize();
    return BigRational(v);
}

BigRational BigRational::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    return BigRational(mpq_class(1 / v_));
}

BigRational& BigRational::operator/=(const BigRational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    v_ /= o.v_;
    return *this;
}

BigRational pow(const BigRational& base, int exponent) {
    if (exponent < 0) return pow(base.inverse(), -exponent);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), base.raw().get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(d.get_mpz_t(), base.raw().get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return BigRational(n, d);
}

}  // namespace fusionq
