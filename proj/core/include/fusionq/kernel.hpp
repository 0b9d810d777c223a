#pragma once

// Ordered products of fusion factors along a line through the diagonal,
// with every denominator cleared.
//
// On the line each factor argument has the form a = q^e (1 + m t). Then
//   (b - a) F_k(a, b) = (b - a) T_k + (q - q^-1) a,
// and both sides are polynomials of degree <= 1 in t with coefficients in
// Z[q, q^-1]. The product of the cleared factors N(t) and the product of
// the denominators D(t) therefore live in Z[q, q^-1][t], and the fused
// value is N(t) / D(t). Products are kept as dense arrays over S_n
// (indexed by lexicographic rank), optionally truncated in t.
//
// Two coefficient rings are supported: LaurentPoly (exact in q) and
// mpz_class (q = a/b specialised, each factor scaled by a^A b^B to stay
// integral; the scale cancels between N and D).

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <vector>

#include "fusionq/laurent.hpp"
#include "fusionq/permutation.hpp"

namespace fusionq {

/// q^exp (1 + slope t).
struct LineArg {
    int exp = 0;
    int slope = 0;
    friend bool operator==(const LineArg&, const LineArg&) = default;
};

/// F_index(a, b).
struct LineFactor {
    int index = 0;
    LineArg a;
    LineArg b;
};

/// Right-multiplication tables for S_n in lexicographic rank.
class PermTable {
public:
    /// Shared per n; built on first use.
    static std::shared_ptr<const PermTable> get(int n);

    explicit PermTable(int n);

    int n() const { return n_; }
    std::size_t size() const { return perms_.size(); }
    const std::vector<Permutation>& perms() const { return perms_; }
    /// Rank of perms()[r] * sigma_k.
    std::uint32_t right(int k, std::size_t r) const { return right_[static_cast<std::size_t>(k - 1)][r]; }
    /// Whether perms()[r] has a right descent at k.
    bool descent(int k, std::size_t r) const { return descent_[static_cast<std::size_t>(k - 1)][r] != 0; }

private:
    int n_;
    std::vector<Permutation> perms_;
    std::vector<std::vector<std::uint32_t>> right_;
    std::vector<std::vector<std::uint8_t>> descent_;
};

inline bool is_zero(const mpz_class& x) { return sgn(x) == 0; }
inline bool is_zero(const LaurentPoly& x) { return x.is_zero(); }
inline void add_product(mpz_class& acc, const mpz_class& a, const mpz_class& b) {
    mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}
inline void add_product(LaurentPoly& acc, const LaurentPoly& a, const LaurentPoly& b) { acc.add_product(a, b); }
inline void set_zero(mpz_class& x) { x = 0; }
inline void set_zero(LaurentPoly& x) { x = LaurentPoly(); }

/// The six scalars of one cleared factor:
///   D = d0 + d1 t          (b - a)
///   e = e0 + e1 t          ((q - q^-1) a, on ascents)
///   f = f0 + f1 t          ((q - q^-1) b, on descents)
/// A descent picks up the extra (q - q^-1) D from T_s T_k, and
/// (q - q^-1)(b - a) + (q - q^-1) a = (q - q^-1) b.
template <class R>
struct FactorScalars {
    R d0, d1, e0, e1, f0, f1;
};

FactorScalars<LaurentPoly> factor_scalars(const LineFactor& f);

/// Exact in q.
struct LaurentRing {
    using Value = LaurentPoly;
    FactorScalars<LaurentPoly> convert(const FactorScalars<LaurentPoly>& s) const { return s; }
};

/// q = num/den, each factor scaled to integers.
struct IntegerRing {
    using Value = mpz_class;
    explicit IntegerRing(const BigRational& q0);
    FactorScalars<mpz_class> convert(const FactorScalars<LaurentPoly>& s) const;

    mpz_class a;
    mpz_class b;
};

/// N(t) and D(t), truncated above degree cap.
template <class R>
struct ClearedProduct {
    int n = 0;
    int cap = 0;
    /// coeffs[d][r]: coefficient of t^d T_{perm of rank r}.
    std::vector<std::vector<R>> coeffs;
    /// D(t), coefficients ascending in t.
    std::vector<R> denom;
    /// Number of factors with D(0) = 0.
    int singular = 0;
};

/// Throws SingularFactorError when a factor has b = a identically.
template <class Ring>
ClearedProduct<typename Ring::Value> cleared_product(int n, const std::vector<LineFactor>& factors, int cap,
                                                    const Ring& ring);

extern template ClearedProduct<LaurentPoly> cleared_product(int, const std::vector<LineFactor>&, int,
                                                            const LaurentRing&);
extern template ClearedProduct<mpz_class> cleared_product(int, const std::vector<LineFactor>&, int,
                                                          const IntegerRing&);

/// N(t) * p(t) with p a scalar polynomial, truncated at the same cap.
ClearedProduct<LaurentPoly> scale_by(const ClearedProduct<LaurentPoly>& x, const std::vector<LaurentPoly>& p);

}  // namespace fusionq
