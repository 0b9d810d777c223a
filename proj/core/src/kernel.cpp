#include "fusionq/kernel.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "fusionq/errors.hpp"

namespace fusionq {

PermTable::PermTable(int n) : n_(n), perms_(all_permutations(n)) {
    const std::size_t m = perms_.size();
    right_.assign(static_cast<std::size_t>(std::max(0, n - 1)), std::vector<std::uint32_t>(m));
    descent_.assign(static_cast<std::size_t>(std::max(0, n - 1)), std::vector<std::uint8_t>(m));
    for (int k = 1; k < n; ++k) {
        for (std::size_t r = 0; r < m; ++r) {
            right_[static_cast<std::size_t>(k - 1)][r] = static_cast<std::uint32_t>(lex_rank(perms_[r].times_generator(k)));
            descent_[static_cast<std::size_t>(k - 1)][r] = perms_[r].right_ascent(k) ? 0 : 1;
        }
    }
}

std::shared_ptr<const PermTable> PermTable::get(int n) {
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const PermTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[n];
    if (!slot) slot = std::make_shared<const PermTable>(n);
    return slot;
}

FactorScalars<LaurentPoly> factor_scalars(const LineFactor& f) {
    const LaurentPoly qa = LaurentPoly::monomial(f.a.exp);
    const LaurentPoly qb = LaurentPoly::monomial(f.b.exp);
    const LaurentPoly qd = LaurentPoly::monomial(1) - LaurentPoly::monomial(-1);
    FactorScalars<LaurentPoly> s;
    s.d0 = qb - qa;
    s.d1 = qb * LaurentPoly(f.b.slope) - qa * LaurentPoly(f.a.slope);
    s.e0 = qd * qa;
    s.e1 = s.e0 * LaurentPoly(f.a.slope);
    s.f0 = qd * qb;
    s.f1 = s.f0 * LaurentPoly(f.b.slope);
    return s;
}

IntegerRing::IntegerRing(const BigRational& q0) : a(q0.num()), b(q0.den()) {
    if (q0.is_zero()) throw std::domain_error("q0 must be nonzero");
}

FactorScalars<mpz_class> IntegerRing::convert(const FactorScalars<LaurentPoly>& s) const {
    const LaurentPoly* all[] = {&s.d0, &s.d1, &s.e0, &s.e1, &s.f0, &s.f1};
    int lo = 0, hi = 0;
    for (const LaurentPoly* p : all) {
        if (p->is_zero()) continue;
        lo = std::min(lo, p->low());
        hi = std::max(hi, p->low() + static_cast<int>(p->coeffs().size()) - 1);
    }
    // q^e -> a^(e - lo) b^(hi - e), i.e. everything times a^-lo b^hi.
    const int span = hi - lo;
    std::vector<mpz_class> apow(static_cast<std::size_t>(span) + 1), bpow(static_cast<std::size_t>(span) + 1);
    apow[0] = 1;
    bpow[0] = 1;
    for (int i = 1; i <= span; ++i) {
        apow[static_cast<std::size_t>(i)] = apow[static_cast<std::size_t>(i - 1)] * a;
        bpow[static_cast<std::size_t>(i)] = bpow[static_cast<std::size_t>(i - 1)] * b;
    }
    auto value = [&](const LaurentPoly& p) {
        mpz_class v = 0;
        for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
            const int e = p.low() + static_cast<int>(i);
            v += p.coeffs()[i] * apow[static_cast<std::size_t>(e - lo)] * bpow[static_cast<std::size_t>(hi - e)];
        }
        return v;
    };
    return {value(s.d0), value(s.d1), value(s.e0), value(s.e1), value(s.f0), value(s.f1)};
}

template <class Ring>
ClearedProduct<typename Ring::Value> cleared_product(int n, const std::vector<LineFactor>& factors, int cap,
                                                    const Ring& ring) {
    using R = typename Ring::Value;
    const auto table = PermTable::get(n);
    const std::size_t m = table->size();
    const std::size_t levels = static_cast<std::size_t>(cap) + 1;

    ClearedProduct<R> out;
    out.n = n;
    out.cap = cap;
    out.coeffs.assign(levels, std::vector<R>(m));
    out.coeffs[0][0] = R(1);  // rank 0 is the identity
    out.denom.assign(levels, R());
    out.denom[0] = R(1);
    std::vector<std::vector<R>> next(levels, std::vector<R>(m));
    int top = 0;  // highest degree that may be nonzero

    for (const LineFactor& f : factors) {
        if (f.index < 1 || f.index >= n) throw std::out_of_range("generator index out of range");
        if (f.a == f.b) throw SingularFactorError("identically singular factor");
        const FactorScalars<LaurentPoly> sym = factor_scalars(f);
        if (sym.d0.is_zero()) ++out.singular;
        const FactorScalars<R> s = ring.convert(sym);
        const bool has_d0 = !is_zero(s.d0), has_d1 = !is_zero(s.d1);
        const bool has_e1 = !is_zero(s.e1), has_f1 = !is_zero(s.f1);
        const int new_top = std::min(cap, top + 1);

        for (int d = 0; d <= new_top; ++d)
            for (auto& x : next[static_cast<std::size_t>(d)]) set_zero(x);

        for (int d = 0; d <= top; ++d) {
            const auto& src = out.coeffs[static_cast<std::size_t>(d)];
            auto& lo = next[static_cast<std::size_t>(d)];
            const bool up = d + 1 <= cap;
            for (std::size_t r = 0; r < m; ++r) {
                const R& x = src[r];
                if (is_zero(x)) continue;
                const std::uint32_t tgt = table->right(f.index, r);
                const bool desc = table->descent(f.index, r);
                if (has_d0) add_product(lo[tgt], s.d0, x);
                add_product(lo[r], desc ? s.f0 : s.e0, x);
                if (up) {
                    auto& hi = next[static_cast<std::size_t>(d + 1)];
                    if (has_d1) add_product(hi[tgt], s.d1, x);
                    if (desc ? has_f1 : has_e1) add_product(hi[r], desc ? s.f1 : s.e1, x);
                }
            }
        }
        std::swap(out.coeffs, next);
        top = new_top;

        std::vector<R> den(levels);
        for (int d = 0; d <= cap; ++d) {
            const R& x = out.denom[static_cast<std::size_t>(d)];
            if (is_zero(x)) continue;
            add_product(den[static_cast<std::size_t>(d)], s.d0, x);
            if (d + 1 <= cap) add_product(den[static_cast<std::size_t>(d + 1)], s.d1, x);
        }
        out.denom = std::move(den);
    }
    return out;
}

template ClearedProduct<LaurentPoly> cleared_product(int, const std::vector<LineFactor>&, int, const LaurentRing&);
template ClearedProduct<mpz_class> cleared_product(int, const std::vector<LineFactor>&, int, const IntegerRing&);

ClearedProduct<LaurentPoly> scale_by(const ClearedProduct<LaurentPoly>& x, const std::vector<LaurentPoly>& p) {
    ClearedProduct<LaurentPoly> out = x;
    const std::size_t m = x.coeffs.empty() ? 0 : x.coeffs[0].size();
    for (auto& level : out.coeffs)
        for (auto& c : level) c = LaurentPoly();
    for (int d = 0; d <= x.cap; ++d) {
        for (std::size_t e = 0; e < p.size() && d + static_cast<int>(e) <= x.cap; ++e) {
            if (p[e].is_zero()) continue;
            auto& dst = out.coeffs[static_cast<std::size_t>(d) + e];
            const auto& src = x.coeffs[static_cast<std::size_t>(d)];
            for (std::size_t r = 0; r < m; ++r) {
                if (!src[r].is_zero()) dst[r].add_product(p[e], src[r]);
            }
        }
    }
    return out;
}

}  // namespace fusionq
