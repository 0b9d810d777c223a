#include "fusionq/fusion.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace fusionq {

HeckeQ symbolic_algebra(int n) { return HeckeQ(n, q_power(1)); }
HeckeQT symbolic_algebra_t(int n) { return HeckeQT(n, RationalFunctionQT(q_power(1))); }
HeckeNum numeric_algebra(int n, const BigRational& q0) { return HeckeNum(n, q0); }

std::string to_string(Kind k) { return k == Kind::F ? "F" : "G"; }

Kind parse_kind(const std::string& s) {
    if (s == "F") return Kind::F;
    if (s == "G") return Kind::G;
    throw std::invalid_argument("unknown kind '" + s + "' (expected F|G)");
}

std::vector<LineArg> line_args(const FusionSpec& spec) {
    const std::vector<int> groups = entry_groups(spec.tableau, spec.variant);
    const std::vector<int> c = contents(spec.tableau);
    const int ngroups = groups.empty() ? 0 : *std::max_element(groups.begin(), groups.end()) + 1;
    std::vector<int> slope = spec.direction;
    if (slope.empty()) {
        for (int g = 0; g < ngroups; ++g) slope.push_back(g);
    }
    if (static_cast<int>(slope.size()) < ngroups) throw std::invalid_argument("direction has too few slopes");
    std::set<int> seen;
    for (int m : slope) {
        if (m < 0) throw std::invalid_argument("direction slopes must be non-negative");
        if (!seen.insert(m).second) throw std::invalid_argument("direction slopes must be distinct");
    }
    std::vector<LineArg> w;
    for (std::size_t a = 0; a < groups.size(); ++a) {
        w.push_back({2 * c[a], slope[static_cast<std::size_t>(groups[a])]});
    }
    return w;
}

std::vector<std::pair<int, int>> pair_order(int n) {
    std::vector<std::pair<int, int>> out;
    for (int j = 2; j <= n; ++j)
        for (int i = 1; i < j; ++i) out.emplace_back(i, j);
    return out;
}

std::vector<LineFactor> f_factors(const std::vector<LineArg>& w) {
    std::vector<LineFactor> out;
    for (auto [i, j] : pair_order(static_cast<int>(w.size()))) {
        out.push_back({j - i, w[static_cast<std::size_t>(i - 1)], w[static_cast<std::size_t>(j - 1)]});
    }
    return out;
}

namespace {

// The i < j standing before (before = true) or after j in rho(1), ..., rho(n).
std::vector<std::vector<int>> split_sequences(const StandardTableau& t, bool before) {
    const Permutation rho = relabelling_from_hook(t);
    const Permutation rho_inv = rho.inverse();
    const int n = t.size();
    std::vector<std::vector<int>> out(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) {
        auto& seq = out[static_cast<std::size_t>(j - 1)];
        for (int x = 1; x <= n; ++x) {
            const int i = rho(x);
            if (i < j && (x < rho_inv(j)) == before) seq.push_back(i);
        }
    }
    return out;
}

}  // namespace

std::vector<std::vector<int>> b_sequences(const StandardTableau& t) { return split_sequences(t, true); }

std::vector<std::vector<int>> a_sequences(const StandardTableau& t) {
    auto out = split_sequences(t, false);
    for (auto& seq : out) std::reverse(seq.begin(), seq.end());
    return out;
}

std::vector<LineFactor> g_factors(const StandardTableau& t, const std::vector<LineArg>& w) {
    const auto b = b_sequences(t);
    std::vector<LineFactor> out;
    for (int j = 1; j <= t.size(); ++j) {
        const auto& bj = b[static_cast<std::size_t>(j - 1)];
        for (int k = 1; k <= static_cast<int>(bj.size()); ++k) {
            const int i = bj[static_cast<std::size_t>(k - 1)];
            out.push_back({j - k, w[static_cast<std::size_t>(i - 1)], w[static_cast<std::size_t>(j - 1)]});
        }
    }
    return out;
}

std::vector<LineFactor> a_factors(const StandardTableau& t, const std::vector<LineArg>& w) {
    const auto a = a_sequences(t);
    const int n = t.size();
    std::vector<LineFactor> out;
    for (int j = n; j >= 1; --j) {
        const auto& aj = a[static_cast<std::size_t>(j - 1)];
        for (int k = static_cast<int>(aj.size()); k >= 1; --k) {
            const int i = aj[static_cast<std::size_t>(k - 1)];
            out.push_back({n - j + k, w[static_cast<std::size_t>(i - 1)], w[static_cast<std::size_t>(j - 1)]});
        }
    }
    return out;
}

RationalFunctionQT line_value(const LineArg& a) {
    const RationalFunctionQ qe = q_power(a.exp);
    return RationalFunctionQT(PolynomialQT(std::vector<RationalFunctionQ>{qe, qe * RationalFunctionQ(a.slope)}));
}

ElementQT ordered_product_t(int n, const std::vector<LineFactor>& factors) {
    const HeckeQT alg = symbolic_algebra_t(n);
    ElementQT x = alg.one();
    for (const LineFactor& f : factors) x = mul_fusion_factor(alg, x, f.index, line_value(f.a), line_value(f.b));
    return x;
}

ElementQT fusion_product(const FusionSpec& spec) {
    return ordered_product_t(spec.tableau.size(), f_factors(line_args(spec)));
}

ElementQ fused_value(int n, const std::vector<LineFactor>& factors, const EvalMode& mode) {
    int s = 0;
    for (const LineFactor& f : factors) s += f.a.exp == f.b.exp ? 1 : 0;
    const auto table = PermTable::get(n);
    ElementQ out(n);

    auto check_regular = [&](const auto& cp) {
        for (int d = 0; d < s; ++d)
            for (const auto& x : cp.coeffs[static_cast<std::size_t>(d)])
                if (!is_zero(x)) throw RegularityError("regularity violated");
    };

    if (!mode.numeric) {
        const auto cp = cleared_product(n, factors, s, LaurentRing{});
        check_regular(cp);
        const RationalFunctionQ den = cp.denom[static_cast<std::size_t>(s)].to_rational_function();
        const auto& top = cp.coeffs[static_cast<std::size_t>(s)];
        for (std::size_t r = 0; r < top.size(); ++r) {
            if (!top[r].is_zero()) out.add_term(table->perms()[r], top[r].to_rational_function() / den);
        }
    } else {
        const auto cp = cleared_product(n, factors, s, IntegerRing(mode.q0));
        check_regular(cp);
        const mpz_class& den = cp.denom[static_cast<std::size_t>(s)];
        const auto& top = cp.coeffs[static_cast<std::size_t>(s)];
        for (std::size_t r = 0; r < top.size(); ++r) {
            if (!is_zero(top[r])) out.add_term(table->perms()[r], RationalFunctionQ(BigRational(top[r], den)));
        }
    }
    return out;
}

FusionResult evaluate_F(const FusionSpec& spec, const EvalMode& mode) {
    FusionResult r;
    r.element = fused_value(spec.tableau.size(), f_factors(line_args(spec)), mode);
    r.spec = spec;
    r.kind = Kind::F;
    r.mode = mode;
    return r;
}

FusionResult evaluate_F_generic(const FusionSpec& spec) {
    const ElementQT p = fusion_product(spec);
    FusionResult r;
    r.element = ElementQ(p.n());
    try {
        for (const auto& [s, c] : p.terms()) r.element.add_term(s, ratqt_limit_t0(c));
    } catch (const PoleError&) {
        throw RegularityError("regularity violated");
    }
    r.spec = spec;
    r.kind = Kind::F;
    return r;
}

FusionResult evaluate_G(const FusionSpec& spec, const EvalMode& mode) {
    FusionResult r;
    r.element = fused_value(spec.tableau.size(), g_factors(spec.tableau, line_args(spec)), mode);
    r.spec = spec;
    r.kind = Kind::G;
    r.mode = mode;
    return r;
}

namespace {

// lhs == rhs as rational functions of t, by cross-multiplying the cleared
// products with each other's denominators.
bool same_rational_product(int n, const std::vector<LineFactor>& lhs, const std::vector<LineFactor>& rhs) {
    const int cap = static_cast<int>(lhs.size() + rhs.size());
    const auto l = cleared_product(n, lhs, cap, LaurentRing{});
    const auto r = cleared_product(n, rhs, cap, LaurentRing{});
    return scale_by(l, r.denom).coeffs == scale_by(r, l.denom).coeffs;
}

}  // namespace

bool check_intertwining(const FusionSpec& spec, int k) {
    const StandardTableau& t = spec.tableau;
    adjacent_swap(t, k);  // validates k
    const int n = t.size();
    const std::vector<LineArg> w = line_args(spec);
    std::vector<LineArg> swapped = w;
    std::swap(swapped[static_cast<std::size_t>(k - 1)], swapped[static_cast<std::size_t>(k)]);

    std::vector<LineFactor> lhs = f_factors(w);
    lhs.push_back({n - k, w[static_cast<std::size_t>(k)], w[static_cast<std::size_t>(k - 1)]});
    std::vector<LineFactor> rhs{{k, w[static_cast<std::size_t>(k - 1)], w[static_cast<std::size_t>(k)]}};
    const auto tail = f_factors(swapped);
    rhs.insert(rhs.end(), tail.begin(), tail.end());
    return same_rational_product(n, lhs, rhs);
}

bool check_complement(const FusionSpec& spec) {
    const std::vector<LineArg> w = line_args(spec);
    std::vector<LineFactor> rhs = g_factors(spec.tableau, w);
    const auto a = a_factors(spec.tableau, w);
    rhs.insert(rhs.end(), a.begin(), a.end());
    return same_rational_product(spec.tableau.size(), f_factors(w), rhs);
}

namespace {

bool regular_at_t0(const ElementQT& x) {
    for (const auto& [s, c] : x.terms())
        if (c.den().coeff(0).is_zero()) return false;
    return true;
}

}  // namespace

bool check_triple_regularity(int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
    const LineArg a{0, 0};
    const LineArg b{-2 * sign, 0};
    const LineArg c{0, 1};
    return regular_at_t0(ordered_product_t(3, {{1, a, b}, {2, a, c}, {1, b, c}}));
}

bool single_factor_regular() { return regular_at_t0(ordered_product_t(2, {{1, {0, 0}, {0, 1}}})); }

namespace {

ElementQ divisor_product(const Partition& p, int lo, int mid, int v) {
    const StandardTableau h = hook_tableau(p);
    const std::vector<int> c = contents(h);
    const HeckeQ alg = symbolic_algebra(p.size());
    ElementQ x = alg.one();
    for (int i = mid; i >= lo; --i) {
        for (int j = mid + 1; j <= v; ++j) {
            x = mul_fusion_factor(alg, x, i + j - mid - 1, q_power(2 * c[static_cast<std::size_t>(i - 1)]),
                                  q_power(2 * c[static_cast<std::size_t>(j - 1)]));
        }
    }
    return x;
}

}  // namespace

ElementQ column_pair_divisor(const Partition& p, int u) {
    const StandardTableau h = hook_tableau(p);
    if (u < 1 || u > p.size()) throw std::out_of_range("entry out of range");
    const Box bu = h.box_of(u);
    if (bu.row + 1 > p.column_length(bu.col)) throw std::invalid_argument("entry has no neighbour below it");
    const int v = h.at(bu.row + 1, bu.col);
    const HeckeQ alg = symbolic_algebra(p.size());
    if (h.box_of(v).content() < 0) return alg.t_gen(u) - alg.scalar(alg.q());
    const int s = h.at(bu.row, p.row_length(bu.row));
    return divisor_product(p, u, s, v);
}

ElementQ row_pair_divisor(const Partition& p, int u) {
    const StandardTableau h = hook_tableau(p);
    if (u < 1 || u > p.size()) throw std::out_of_range("entry out of range");
    const Box bu = h.box_of(u);
    if (bu.col + 1 > p.row_length(bu.row)) throw std::invalid_argument("entry has no neighbour right of it");
    const int v = h.at(bu.row, bu.col + 1);
    const HeckeQ alg = symbolic_algebra(p.size());
    if (bu.content() > 0) return alg.t_gen(u) + alg.scalar(alg.q_inverse());
    const int r = h.at(p.column_length(bu.col), bu.col);
    return divisor_product(p, u, r, v);
}

ElementNum evaluate_at(const ElementQ& x, const BigRational& q0) {
    return x.map_coeffs<BigRational>([&](const RationalFunctionQ& c) { return ratq_eval(c, q0); });
}

}  // namespace fusionq
