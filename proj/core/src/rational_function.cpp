#include "fusionq/rational_function.hpp"

namespace fusionq {

void canonicalize_units(PolynomialQ& num, PolynomialQ& den) {
    mpz_class l = 1;
    for (const auto* p : {&num, &den}) {
        for (const auto& c : p->coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.raw().get_den_mpz_t());
    }
    mpz_class g = 0;
    for (const auto* p : {&num, &den}) {
        for (const auto& c : p->coeffs()) {
            mpz_class v = (l / c.raw().get_den()) * c.raw().get_num();
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        }
    }
    if (den.lead().sign() < 0) g = -g;
    if (l == 1 && g == 1) return;
    const BigRational scale(l, g);
    num = num * scale;
    den = den * scale;
}

RationalFunctionQ ratqt_limit_t0(const RationalFunctionQT& f) {
    const RationalFunctionQ d0 = f.den().coeff(0);
    if (d0.is_zero()) throw PoleError("pole at t=0");
    return f.num().coeff(0) / d0;
}

RationalFunctionQ ratqt_substitute_t0(const PolynomialQT& num, const PolynomialQT& den) {
    const RationalFunctionQ d0 = den.coeff(0);
    if (d0.is_zero()) throw PoleError("pole at t=0");
    return num.coeff(0) / d0;
}

RationalFunctionQ q_power(int k) {
    if (k >= 0) return RationalFunctionQ(PolynomialQ::monomial(BigRational(1), k));
    return RationalFunctionQ::make(PolynomialQ(1), PolynomialQ::monomial(BigRational(1), -k));
}

std::string to_string(const RationalFunctionQ& f) {
    if (f.den() == PolynomialQ(1)) return to_string(f.num());
    return to_string(f.num()) + " / " + to_string(f.den());
}

namespace {
std::string to_string_t(const PolynomialQT& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int e = 0; e <= p.degree(); ++e) {
        const auto c = p.coeff(e);
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + to_string(c) + ")";
        if (e == 1) out += "*t";
        if (e > 1) out += "*t^" + std::to_string(e);
    }
    return out;
}
}  // namespace

std::string to_string(const RationalFunctionQT& f) {
    if (f.den() == PolynomialQT(1)) return to_string_t(f.num());
    return "[" + to_string_t(f.num()) + "] / [" + to_string_t(f.den()) + "]";
}

RationalFunctionQ parse_rational_function(const std::string& num, const std::string& den) {
    return ratq_normalize(parse_polynomial(num), parse_polynomial(den));
}

}  // namespace fusionq
