#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fusionq/fusion.hpp"

namespace fusionq {

/// Dense matrix over an exact field.
template <class S>
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static ExactMatrix identity(std::size_t n) {
        ExactMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    S& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const S& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    /// Row-major entries.
    const std::vector<S>& entries() const { return a_; }

    friend ExactMatrix operator*(const ExactMatrix& x, const ExactMatrix& y) {
        if (x.cols_ != y.rows_) throw std::invalid_argument("matrix shapes do not match");
        ExactMatrix r(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                const S& v = x(i, k);
                if (v.is_zero()) continue;
                for (std::size_t j = 0; j < y.cols_; ++j) r(i, j) = r(i, j) + v * y(k, j);
            }
        return r;
    }
    friend ExactMatrix operator+(ExactMatrix x, const ExactMatrix& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw std::invalid_argument("matrix shapes do not match");
        for (std::size_t i = 0; i < x.a_.size(); ++i) x.a_[i] = x.a_[i] + y.a_[i];
        return x;
    }
    ExactMatrix scaled(const S& c) const {
        ExactMatrix r = *this;
        for (auto& v : r.a_) v = v * c;
        return r;
    }
    friend bool operator==(const ExactMatrix& x, const ExactMatrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

    std::size_t rank() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<S> a_;
};

/// Row-reduced basis of a growing subspace of S^dim.
template <class S>
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return rows_.size(); }

    /// v reduced against the basis.
    std::vector<S> reduce(std::vector<S> v) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const S c = v[pivots_[r]];
            if (c.is_zero()) continue;
            const auto& row = rows_[r];
            for (std::size_t j = pivots_[r]; j < dim_; ++j) {
                if (!row[j].is_zero()) v[j] = v[j] - c * row[j];
            }
        }
        return v;
    }

    /// Adds v; false when v already lies in the span.
    bool insert(const std::vector<S>& v) {
        std::vector<S> w = reduce(v);
        std::size_t p = 0;
        while (p < dim_ && w[p].is_zero()) ++p;
        if (p == dim_) return false;
        const S inv = S(1) / w[p];
        for (std::size_t j = p; j < dim_; ++j)
            if (!w[j].is_zero()) w[j] = w[j] * inv;
        // Keep earlier rows reduced at the new pivot so reduce() stays a
        // single pass.
        for (auto& row : rows_) {
            const S c = row[p];
            if (c.is_zero()) continue;
            for (std::size_t j = p; j < dim_; ++j)
                if (!w[j].is_zero()) row[j] = row[j] - c * w[j];
        }
        rows_.push_back(std::move(w));
        pivots_.push_back(p);
        return true;
    }

private:
    std::size_t dim_;
    std::vector<std::vector<S>> rows_;
    std::vector<std::size_t> pivots_;
};

template <class S>
std::size_t ExactMatrix<S>::rank() const {
    EchelonBasis<S> b(cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        b.insert(std::vector<S>(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                                a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)));
    }
    return b.rank();
}

/// Solves A x = b for every column b of rhs; nullopt when some column is
/// inconsistent. Free unknowns are set to zero.
template <class S>
std::optional<ExactMatrix<S>> solve(const ExactMatrix<S>& a, const ExactMatrix<S>& rhs) {
    if (a.rows() != rhs.rows()) throw std::invalid_argument("matrix shapes do not match");
    const std::size_t m = a.rows(), k = a.cols(), c = rhs.cols(), w = k + c;
    std::vector<std::vector<S>> rows(m, std::vector<S>(w));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < k; ++j) rows[i][j] = a(i, j);
        for (std::size_t j = 0; j < c; ++j) rows[i][k + j] = rhs(i, j);
    }
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t col = 0; col < k && r < m; ++col) {
        std::size_t p = r;
        while (p < m && rows[p][col].is_zero()) ++p;
        if (p == m) continue;
        std::swap(rows[r], rows[p]);
        const S inv = S(1) / rows[r][col];
        for (std::size_t j = col; j < w; ++j)
            if (!rows[r][j].is_zero()) rows[r][j] = rows[r][j] * inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || rows[i][col].is_zero()) continue;
            const S f = rows[i][col];
            for (std::size_t j = col; j < w; ++j)
                if (!rows[r][j].is_zero()) rows[i][j] = rows[i][j] - f * rows[r][j];
        }
        pivot_cols.push_back(col);
        ++r;
    }
    for (std::size_t i = r; i < m; ++i)
        for (std::size_t j = k; j < w; ++j)
            if (!rows[i][j].is_zero()) return std::nullopt;
    ExactMatrix<S> x(k, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) x(pivot_cols[i], j) = rows[i][k + j];
    return x;
}

/// Coordinates in the T_sigma basis, ordered by lexicographic rank.
template <class S>
std::vector<S> coordinates(const HeckeElement<S>& x) {
    std::vector<S> v(factorial(x.n()));
    for (const auto& [s, c] : x.terms()) v[lex_rank(s)] = c;
    return v;
}

template <class S>
HeckeElement<S> from_coordinates(int n, const std::vector<S>& v) {
    const auto table = PermTable::get(n);
    HeckeElement<S> x(n);
    for (std::size_t r = 0; r < v.size(); ++r) x.add_term(table->perms()[r], v[r]);
    return x;
}

/// dim of the left ideal H_n F: the span of F closed under left
/// multiplication by every T_i. Throws std::invalid_argument for F = 0.
template <class S>
std::size_t ideal_dimension(const HeckeAlgebra<S>& alg, const HeckeElement<S>& f) {
    if (f.is_zero()) throw std::invalid_argument("ideal of the zero element");
    EchelonBasis<S> basis(factorial(alg.n()));
    std::vector<HeckeElement<S>> frontier{f};
    basis.insert(coordinates(f));
    while (!frontier.empty()) {
        std::vector<HeckeElement<S>> next;
        for (const auto& x : frontier) {
            for (int i = 1; i < alg.n(); ++i) {
                HeckeElement<S> y = alg.mul_gen_left(i, x);
                if (basis.insert(coordinates(y))) next.push_back(std::move(y));
            }
        }
        frontier = std::move(next);
    }
    return basis.rank();
}

enum class PairKind { column, row };

/// column: T_k F == -q^-1 F; row: T_k F == q F.
template <class S>
bool eigen_divisibility(const HeckeAlgebra<S>& alg, const HeckeElement<S>& f, int k, PairKind kind) {
    const S eig = kind == PairKind::column ? -alg.q_inverse() : alg.q();
    return alg.mul_gen_left(k, f) == f.scaled(eig);
}

namespace detail {

// Columns are the coordinates of make(T_sigma) for every sigma.
template <class S, class Make>
std::optional<HeckeElement<S>> solve_in_basis(int n, const HeckeElement<S>& target, Make&& make) {
    const auto table = PermTable::get(n);
    const std::size_t m = table->size();
    ExactMatrix<S> a(m, m), b(m, 1);
    for (std::size_t c = 0; c < m; ++c) {
        const HeckeElement<S> col = make(table->perms()[c]);
        for (const auto& [s, v] : col.terms()) a(lex_rank(s), c) = v;
    }
    for (const auto& [s, v] : target.terms()) b(lex_rank(s), 0) = v;
    auto x = solve(a, b);
    if (!x) return std::nullopt;
    std::vector<S> v(m);
    for (std::size_t i = 0; i < m; ++i) v[i] = (*x)(i, 0);
    return from_coordinates(n, v);
}

}  // namespace detail

/// Some X with F = P X, or nullopt.
template <class S>
std::optional<HeckeElement<S>> left_divisibility_solve(const HeckeAlgebra<S>& alg, const HeckeElement<S>& p,
                                                       const HeckeElement<S>& f) {
    if (p.is_zero()) throw std::invalid_argument("divisor is zero");
    return detail::solve_in_basis(alg.n(), f, [&](const Permutation& s) { return alg.mul(p, alg.t_sigma(s)); });
}

/// Some X with F = X Y, or nullopt.
template <class S>
std::optional<HeckeElement<S>> right_divisibility_solve(const HeckeAlgebra<S>& alg, const HeckeElement<S>& y,
                                                        const HeckeElement<S>& f) {
    if (y.is_zero()) throw std::invalid_argument("divisor is zero");
    return detail::solve_in_basis(alg.n(), f, [&](const Permutation& s) { return alg.mul(alg.t_sigma(s), y); });
}

/// x T_0^{-1}, by right multiplication with inverse generators.
template <class S>
HeckeElement<S> times_longest_inverse(const HeckeAlgebra<S>& alg, const HeckeElement<S>& x) {
    const auto word = perm_length_and_word(longest_element(alg.n())).word;
    HeckeElement<S> r = x;
    for (auto it = word.rbegin(); it != word.rend(); ++it) r = alg.mul_inverse_gen_right(r, *it);
    return r;
}

/// Matrices of left multiplication by T_1, ..., T_{n-1} on the span of
/// {G_T}, in the basis ordered as standard_tableaux(p). Throws
/// std::runtime_error when the G_T are dependent or their span is not
/// stable.
std::vector<ExactMatrix<BigRational>> action_matrices(const Partition& p, const BigRational& q0);

/// Whether relations (T_i - q)(T_i + q^-1) = 0, the braid relations and
/// the far commutations hold for the given generator matrices at q0.
bool satisfies_hecke_relations(const std::vector<ExactMatrix<BigRational>>& mats, const BigRational& q0);

/// Whether the algebra generated by the f x f matrices is all of M_f.
bool burnside_irreducibility(const std::vector<ExactMatrix<BigRational>>& mats, std::size_t f);
/// Same, with f read off the first matrix; throws on an empty list.
bool burnside_irreducibility(const std::vector<ExactMatrix<BigRational>>& mats);

/// Dimension of the algebra spanned by all words in the matrices,
/// the empty word included.
std::size_t generated_algebra_dimension(const std::vector<ExactMatrix<BigRational>>& mats, std::size_t f);

/// Coefficient-wise value at q = 1; the result lives in the group ring,
/// multiplied with numeric_algebra(n, 1). Throws
/// PoleError("specialization pole").
ElementNum specialize_q1(const ElementQ& f);

/// Seeded rationals num/den with 0 < |num|, den <= 100, excluding 0 and +-1,
/// without repeats.
std::vector<BigRational> q0_pool(std::uint64_t seed, std::size_t count);

/// Calls fn(q0) for successive pool values until it does not throw
/// PoleError; at most max_retries retries.
template <class Fn>
auto with_numeric_q(std::uint64_t seed, Fn&& fn, int max_retries = 5) {
    const auto pool = q0_pool(seed, static_cast<std::size_t>(max_retries) + 1);
    for (std::size_t i = 0;; ++i) {
        try {
            return fn(pool[i]);
        } catch (const PoleError&) {
            if (i + 1 == pool.size()) throw;
        }
    }
}

/// ideal_dimension in the requested mode; numeric evaluates F at pool
/// values of q until one avoids the poles.
std::size_t ideal_dimension(const ElementQ& f, const EvalMode& mode);

}  // namespace fusionq
