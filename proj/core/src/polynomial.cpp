#include "fusionq/polynomial.hpp"

#include <algorithm>
#include <cctype>

namespace fusionq {
namespace {

using IntPoly = std::vector<mpz_class>;

void trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

void make_primitive(IntPoly& p) {
    mpz_class g = 0;
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) return;
    }
    if (g == 0 || g == 1) return;
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

IntPoly to_integer_poly(const PolynomialQ& p) {
    mpz_class l = 1;
    for (const auto& c : p.coeffs()) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.raw().get_den_mpz_t());
    }
    IntPoly r;
    r.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        mpz_class v = l / c.raw().get_den();
        r.push_back(v * c.raw().get_num());
    }
    make_primitive(r);
    return r;
}

PolynomialQ from_integer_poly(const IntPoly& p) {
    std::vector<BigRational> c;
    c.reserve(p.size());
    for (const auto& x : p) c.emplace_back(x);
    return PolynomialQ(std::move(c));
}

// r <- lc(b)^k * r mod b, over Z.
IntPoly pseudo_remainder(IntPoly r, const IntPoly& b) {
    const std::size_t db = b.size() - 1;
    const mpz_class& lb = b.back();
    while (!r.empty() && r.size() - 1 >= db) {
        const std::size_t shift = r.size() - 1 - db;
        const mpz_class lr = r.back();
        for (auto& c : r) c *= lb;
        for (std::size_t i = 0; i <= db; ++i) r[i + shift] -= lr * b[i];
        r.pop_back();
        trim(r);
    }
    return r;
}

}  // namespace

PolynomialQ primitive_part(const PolynomialQ& p) { return from_integer_poly(to_integer_poly(p)); }

PolynomialQ gcd(const PolynomialQ& a, const PolynomialQ& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of two zero polynomials");
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.degree() == 0 || b.degree() == 0) return PolynomialQ(1);
    IntPoly x = to_integer_poly(a);
    IntPoly y = to_integer_poly(b);
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.empty()) {
        if (y.size() == 1) return PolynomialQ(1);
        IntPoly r = pseudo_remainder(std::move(x), y);
        make_primitive(r);
        x = std::move(y);
        y = std::move(r);
    }
    return from_integer_poly(x).monic();
}

PolynomialQ gcd_euclid(const PolynomialQ& a, const PolynomialQ& b) { return gcd<BigRational>(a, b); }

std::string to_string(const PolynomialQ& p, char var) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int e = 0; e <= p.degree(); ++e) {
        const BigRational c = p.coeff(e);
        if (c.is_zero()) continue;
        std::string mono;
        if (e == 1) mono = std::string(1, var);
        if (e > 1) mono = std::string(1, var) + "^" + std::to_string(e);
        std::string term;
        if (e == 0) {
            term = c.to_string();
        } else if (c.is_one()) {
            term = mono;
        } else if (c == BigRational(-1)) {
            term = "-" + mono;
        } else {
            term = c.to_string() + "*" + mono;
        }
        if (first) {
            out = term;
            first = false;
        } else if (term[0] == '-') {
            out += " - " + term.substr(1);
        } else {
            out += " + " + term;
        }
    }
    return out;
}

PolynomialQ parse_polynomial(const std::string& s, char var) {
    std::string t;
    for (char ch : s) {
        if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
    }
    if (t.empty()) throw std::invalid_argument("empty polynomial string");
    std::vector<BigRational> coeffs;
    std::size_t pos = 0;
    while (pos < t.size()) {
        bool negative = false;
        if (t[pos] == '+' || t[pos] == '-') {
            negative = t[pos] == '-';
            ++pos;
        }
        std::size_t end = pos;
        while (end < t.size() && t[end] != '+' && t[end] != '-') ++end;
        const std::string term = t.substr(pos, end - pos);
        if (term.empty()) throw std::invalid_argument("bad polynomial string: " + s);
        pos = end;

        BigRational c(1);
        int e = 0;
        const auto vpos = term.find(var);
        if (vpos == std::string::npos) {
            c = BigRational::parse(term);
        } else {
            if (vpos > 0) {
                if (vpos < 2 || term[vpos - 1] != '*') {
                    throw std::invalid_argument("bad polynomial term: " + term);
                }
                c = BigRational::parse(term.substr(0, vpos - 1));
            }
            const std::string rest = term.substr(vpos + 1);
            if (rest.empty()) {
                e = 1;
            } else if (rest[0] == '^' && rest.size() > 1 &&
                       std::all_of(rest.begin() + 1, rest.end(),
                                   [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
                e = std::stoi(rest.substr(1));
            } else {
                throw std::invalid_argument("bad polynomial term: " + term);
            }
        }
        if (negative) c = -c;
        if (coeffs.size() <= static_cast<std::size_t>(e)) coeffs.resize(static_cast<std::size_t>(e) + 1);
        coeffs[static_cast<std::size_t>(e)] += c;
    }
    return PolynomialQ(std::move(coeffs));
}

}  // namespace fusionq
