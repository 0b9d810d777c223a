#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fusionq/errors.hpp"
#include "fusionq/hecke.hpp"
#include "fusionq/kernel.hpp"
#include "fusionq/rational_function.hpp"
#include "fusionq/tableau.hpp"

namespace fusionq {

using HeckeQ = HeckeAlgebra<RationalFunctionQ>;
using HeckeQT = HeckeAlgebra<RationalFunctionQT>;
using HeckeNum = HeckeAlgebra<BigRational>;
using ElementQ = HeckeElement<RationalFunctionQ>;
using ElementQT = HeckeElement<RationalFunctionQT>;
using ElementNum = HeckeElement<BigRational>;

/// H_n over Q(q).
HeckeQ symbolic_algebra(int n);
/// H_n over Q(q)(t).
HeckeQT symbolic_algebra_t(int n);
/// H_n at q = q0.
HeckeNum numeric_algebra(int n, const BigRational& q0);

enum class Kind { F, G };
std::string to_string(Kind k);
Kind parse_kind(const std::string& s);

struct EvalMode {
    bool numeric = false;
    BigRational q0;  // meaningful only when numeric

    static EvalMode symbolic() { return {}; }
    static EvalMode at(const BigRational& q) { return {true, q}; }
    std::string name() const { return numeric ? "numeric" : "symbolic"; }
};

struct FusionSpec {
    StandardTableau tableau;
    Grouping variant = Grouping::hook;
    /// Slope m_g of group g; empty means m_g = g.
    std::vector<int> direction;
};

struct FusionResult {
    ElementQ element;
    FusionSpec spec;
    Kind kind = Kind::F;
    EvalMode mode;
};

/// z_a = 1 + m_{group(a)} t for a = 1..n (index a-1), combined with the
/// content shift q^{2 c_a}. Throws std::invalid_argument on a direction
/// with repeated or negative slopes, or too few of them.
std::vector<LineArg> line_args(const FusionSpec& spec);

/// Pairs i < j, ordered by j and then by i.
std::vector<std::pair<int, int>> pair_order(int n);

/// F_{j-i}(w_i, w_j) over pair_order(n).
std::vector<LineFactor> f_factors(const std::vector<LineArg>& w);

/// rho with T(a, b) = rho(hook_tableau(a, b)); the B_j and A_j
/// subsequences are read off rho(1), ..., rho(n).
std::vector<std::vector<int>> b_sequences(const StandardTableau& t);
std::vector<std::vector<int>> a_sequences(const StandardTableau& t);

/// j ascending, k ascending: F_{j-k}(w_{B_j(k)}, w_j).
std::vector<LineFactor> g_factors(const StandardTableau& t, const std::vector<LineArg>& w);
/// j descending, k descending: F_{n-j+k}(w_{A_j(k)}, w_j).
std::vector<LineFactor> a_factors(const StandardTableau& t, const std::vector<LineArg>& w);

/// T_i + (q - q^-1) / (a^-1 b - 1). Throws SingularFactorError when
/// a^-1 b - 1 vanishes identically.
template <class S>
HeckeElement<S> fusion_factor(const HeckeAlgebra<S>& alg, int i, const S& a, const S& b) {
    const S denom = b / a - S(1);
    if (denom.is_zero()) throw SingularFactorError("identically singular factor");
    HeckeElement<S> x = alg.t_gen(i);
    x.add_term(Permutation::identity(alg.n()), alg.q_diff() / denom);
    return x;
}

/// x F_i(a, b), without forming the factor separately.
template <class S>
HeckeElement<S> mul_fusion_factor(const HeckeAlgebra<S>& alg, const HeckeElement<S>& x, int i, const S& a,
                                  const S& b) {
    const S denom = b / a - S(1);
    if (denom.is_zero()) throw SingularFactorError("identically singular factor");
    return alg.mul_affine_right(x, i, alg.q_diff() / denom);
}

/// q^exp (1 + slope t) in Q(q)(t).
RationalFunctionQT line_value(const LineArg& a);

/// Left-to-right product of the factors in H_n over Q(q)(t).
ElementQT ordered_product_t(int n, const std::vector<LineFactor>& factors);

/// The fusion product for a FusionSpec, over Q(q)(t).
ElementQT fusion_product(const FusionSpec& spec);

/// Limit t -> 0 of the product of the factors, computed from the cleared
/// product truncated at the number of singular factors. Throws
/// RegularityError("regularity violated") if the limit does not exist.
ElementQ fused_value(int n, const std::vector<LineFactor>& factors, const EvalMode& mode);

/// F_T.
FusionResult evaluate_F(const FusionSpec& spec, const EvalMode& mode = EvalMode::symbolic());
/// F_T via the generic Q(q)(t) product and a coefficient-wise limit.
FusionResult evaluate_F_generic(const FusionSpec& spec);
/// G_T.
FusionResult evaluate_G(const FusionSpec& spec, const EvalMode& mode = EvalMode::symbolic());

/// Whether
///   F_T(z) F_{n-k}(w_{k+1}, w_k) = F_k(w_k, w_{k+1}) F_T'(z')
/// holds identically in t, where T' swaps k and k+1 and z' swaps z_k and
/// z_{k+1}. Throws std::invalid_argument when T' is not standard.
bool check_intertwining(const FusionSpec& spec, int k);

/// Whether F_T(z) = G_T(z) times the A_j product, identically in t.
bool check_complement(const FusionSpec& spec);

/// Whether F_1(a, b) F_2(a, c) F_1(b, c) with b = q^{-2 sign} a and
/// c = a (1 + t) is regular at t = 0. The factors only see ratios of their
/// arguments, so a = 1 loses nothing.
bool check_triple_regularity(int sign);

/// Whether the lone factor F_1(a, a (1 + t)) is regular at t = 0.
bool single_factor_regular();

/// The left divisor for entries u < v = u + column below u in the hook
/// tableau: T_u - q when c_v < 0, otherwise the product over
/// i = s, ..., u (leftmost first) and j = s+1, ..., v of
/// F_{i+j-s-1}(q^{2c_i}, q^{2c_j}), with s the last entry of u's row.
ElementQ column_pair_divisor(const Partition& p, int u);

/// The row analogue: T_u + q^-1 when c_u > 0, otherwise the product over
/// i = r, ..., u and j = r+1, ..., v of F_{i+j-r-1}(q^{2c_i}, q^{2c_j}),
/// with r the last entry of u's column and v the right neighbour of u.
ElementQ row_pair_divisor(const Partition& p, int u);

/// x with T_i -> T_{i+offset}, as an element of H_n.
template <class S>
HeckeElement<S> shift_element(const HeckeElement<S>& x, int offset, int n) {
    HeckeElement<S> r(n);
    for (const auto& [s, c] : x.terms()) r.add_term(shift_embed(s, offset, n), c);
    return r;
}

/// Coefficient-wise value at q0; throws PoleError("evaluation pole").
ElementNum evaluate_at(const ElementQ& x, const BigRational& q0);

}  // namespace fusionq
