#include "fusionq/repr.hpp"

#include <algorithm>
#include <random>

namespace fusionq {

std::vector<ExactMatrix<BigRational>> action_matrices(const Partition& p, const BigRational& q0) {
    const int n = p.size();
    const auto tabs = standard_tableaux(p);
    const std::size_t f = tabs.size();
    const std::size_t dim = factorial(n);
    const HeckeNum alg = numeric_algebra(n, q0);

    std::vector<ElementNum> basis;
    for (const auto& t : tabs) {
        basis.push_back(evaluate_at(evaluate_G({t, Grouping::hook, {}}, EvalMode::at(q0)).element, q0));
    }
    ExactMatrix<BigRational> g(dim, f);
    for (std::size_t c = 0; c < f; ++c)
        for (const auto& [s, v] : basis[c].terms()) g(lex_rank(s), c) = v;
    if (g.rank() != f) throw std::runtime_error("G family is not independent");

    const std::size_t gens = static_cast<std::size_t>(std::max(0, n - 1));
    ExactMatrix<BigRational> rhs(dim, f * gens);
    for (std::size_t i = 0; i < gens; ++i)
        for (std::size_t c = 0; c < f; ++c) {
            const ElementNum y = alg.mul_gen_left(static_cast<int>(i) + 1, basis[c]);
            for (const auto& [s, v] : y.terms()) rhs(lex_rank(s), i * f + c) = v;
        }
    const auto x = solve(g, rhs);
    if (!x) throw std::runtime_error("span of the G family is not stable under the generators");

    std::vector<ExactMatrix<BigRational>> mats(gens, ExactMatrix<BigRational>(f, f));
    for (std::size_t i = 0; i < gens; ++i)
        for (std::size_t r = 0; r < f; ++r)
            for (std::size_t c = 0; c < f; ++c) mats[i](r, c) = (*x)(r, i * f + c);
    return mats;
}

bool satisfies_hecke_relations(const std::vector<ExactMatrix<BigRational>>& mats, const BigRational& q0) {
    if (mats.empty()) return true;
    const std::size_t f = mats[0].rows();
    const auto id = ExactMatrix<BigRational>::identity(f);
    const ExactMatrix<BigRational> zero(f, f);
    for (const auto& m : mats) {
        if (!((m + id.scaled(-q0)) * (m + id.scaled(q0.inverse())) == zero)) return false;
    }
    for (std::size_t i = 0; i < mats.size(); ++i) {
        for (std::size_t j = i + 1; j < mats.size(); ++j) {
            const auto& a = mats[i];
            const auto& b = mats[j];
            if (j == i + 1) {
                if (!(a * b * a == b * a * b)) return false;
            } else if (!(a * b == b * a)) {
                return false;
            }
        }
    }
    return true;
}

std::size_t generated_algebra_dimension(const std::vector<ExactMatrix<BigRational>>& mats, std::size_t f) {
    EchelonBasis<BigRational> basis(f * f);
    std::vector<ExactMatrix<BigRational>> frontier{ExactMatrix<BigRational>::identity(f)};
    basis.insert(frontier[0].entries());
    while (!frontier.empty()) {
        std::vector<ExactMatrix<BigRational>> next;
        for (const auto& x : frontier) {
            for (const auto& m : mats) {
                auto y = m * x;
                if (basis.insert(y.entries())) next.push_back(std::move(y));
            }
        }
        frontier = std::move(next);
    }
    return basis.rank();
}

bool burnside_irreducibility(const std::vector<ExactMatrix<BigRational>>& mats, std::size_t f) {
    for (const auto& m : mats)
        if (m.rows() != f || m.cols() != f) throw std::invalid_argument("matrices must all be f x f");
    return generated_algebra_dimension(mats, f) == f * f;
}

bool burnside_irreducibility(const std::vector<ExactMatrix<BigRational>>& mats) {
    if (mats.empty()) throw std::invalid_argument("no matrices; pass the dimension explicitly");
    return burnside_irreducibility(mats, mats[0].rows());
}

ElementNum specialize_q1(const ElementQ& f) {
    try {
        return evaluate_at(f, BigRational(1));
    } catch (const PoleError&) {
        throw PoleError("specialization pole");
    }
}

std::vector<BigRational> q0_pool(std::uint64_t seed, std::size_t count) {
    std::mt19937_64 rng(seed);
    std::vector<BigRational> out;
    while (out.size() < count) {
        const long num = static_cast<long>(rng() % 201) - 100;
        const long den = static_cast<long>(rng() % 100) + 1;
        if (num == 0) continue;
        const BigRational v{mpz_class(num), mpz_class(den)};
        if (v == BigRational(1) || v == BigRational(-1)) continue;
        if (std::find(out.begin(), out.end(), v) != out.end()) continue;
        out.push_back(v);
    }
    return out;
}

std::size_t ideal_dimension(const ElementQ& f, const EvalMode& mode) {
    if (!mode.numeric) return ideal_dimension(symbolic_algebra(f.n()), f);
    return ideal_dimension(numeric_algebra(f.n(), mode.q0), evaluate_at(f, mode.q0));
}

}  // namespace fusionq
