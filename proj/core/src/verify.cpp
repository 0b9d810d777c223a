#include "fusionq/verify.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <type_traits>

#include "fusionq/repr.hpp"

namespace fusionq {

VerifyContext::VerifyContext(VerifyOptions opts) : opts_(std::move(opts)), q0_(verify_q0(opts_)) {}

const FusionResult& VerifyContext::result(const FusionSpec& spec, Kind kind, const EvalMode& mode) {
    const std::string key = cache_key(spec, kind, mode);
    auto it = memo_.find(key);
    if (it == memo_.end()) it = memo_.emplace(key, compute(spec, kind, mode, opts_.cache)).first;
    return it->second;
}

BigRational verify_q0(const VerifyOptions& opts) { return q0_pool(opts.seed, 1)[0]; }

std::vector<Partition> selected_partitions(const VerifyOptions& opts) {
    if (opts.shape) return {*opts.shape};
    std::vector<Partition> out;
    for (int n = 1; n <= opts.max_n; ++n)
        for (auto& p : partitions_of(n)) out.push_back(std::move(p));
    return out;
}

std::vector<StandardTableau> selected_tableaux(const Partition& p, const VerifyOptions& opts) {
    if (opts.tableaux == "all") return standard_tableaux(p);
    if (opts.tableaux == "hook") return {hook_tableau(p)};
    std::size_t used = 0;
    long idx = -1;
    try {
        idx = std::stol(opts.tableaux, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != opts.tableaux.size() || idx < 0) {
        throw std::invalid_argument("tableau selector must be all, hook, or an index");
    }
    auto all = standard_tableaux(p);
    if (static_cast<std::size_t>(idx) >= all.size()) {
        throw std::invalid_argument("tableau index " + opts.tableaux + " out of range for shape " + p.to_string() +
                                    " (" + std::to_string(all.size()) + " tableaux)");
    }
    return {all[static_cast<std::size_t>(idx)]};
}

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

Outcome yes(std::string detail = {}) { return {true, std::move(detail)}; }

// Runs fn and records its outcome; an exception fails the check with its
// message as the detail. A string key is a note prefixed to the detail.
template <class Key, class Fn>
void check(Recorder& rec, const std::string& name, const Key& key, Fn&& fn) {
    Outcome o;
    try {
        o = fn();
    } catch (const std::exception& e) {
        o = {false, e.what()};
    }
    if constexpr (std::is_same_v<Key, std::string>) {
        rec.add(name, o.pass, o.detail.empty() ? key : key + "; " + o.detail);
    } else {
        rec.add(name, key, o.pass, std::move(o.detail));
    }
}

// The algebra a check runs in, and the map from Q(q) elements into it.
struct SymbolicField {
    using S = RationalFunctionQ;
    explicit SymbolicField(int n) : alg(symbolic_algebra(n)) {}
    HeckeQ alg;
    const ElementQ& operator()(const ElementQ& x) const { return x; }
};

struct NumericField {
    using S = BigRational;
    NumericField(int n, const BigRational& q) : alg(numeric_algebra(n, q)), q0(q) {}
    HeckeNum alg;
    BigRational q0;
    ElementNum operator()(const ElementQ& x) const { return evaluate_at(x, q0); }
};

template <class Fn>
void with_field(const VerifyContext& ctx, int n, Fn&& fn) {
    if (ctx.opts().numeric) {
        fn(NumericField(n, ctx.q0()));
    } else {
        fn(SymbolicField(n));
    }
}

// Partitions the suite runs on; the rest are recorded as skipped.
std::vector<Partition> capped(const VerifyContext& ctx, Recorder& rec, int cap) {
    std::vector<Partition> out;
    for (auto& p : selected_partitions(ctx.opts())) {
        if (ctx.opts().shape || p.size() <= cap) {
            out.push_back(std::move(p));
        } else {
            rec.skip(p);
        }
    }
    return out;
}

int top_n(const VerifyOptions& opts) { return opts.shape ? opts.shape->size() : opts.max_n; }

std::string q0_note(const BigRational& q0) { return "q0=" + q0.to_string(); }

// Adjacent k, k+1 sharing a column or a row.
std::vector<std::pair<int, PairKind>> adjacent_pairs(const StandardTableau& t) {
    std::vector<std::pair<int, PairKind>> out;
    for (int k = 1; k < t.size(); ++k) {
        const Box a = t.box_of(k), b = t.box_of(k + 1);
        if (a.col == b.col) out.emplace_back(k, PairKind::column);
        if (a.row == b.row) out.emplace_back(k, PairKind::row);
    }
    return out;
}

std::string pair_note(int k, PairKind kind) {
    return "k=" + std::to_string(k) + (kind == PairKind::column ? " column" : " row");
}

constexpr Grouping kVariants[] = {Grouping::hook, Grouping::row, Grouping::column};

BigRational random_rational(std::mt19937_64& rng, int bound) {
    for (;;) {
        const long num = static_cast<long>(rng() % static_cast<unsigned>(2 * bound + 1)) - bound;
        const long den = static_cast<long>(rng() % static_cast<unsigned>(bound)) + 1;
        if (num != 0) return BigRational(mpz_class(num), mpz_class(den));
    }
}

BigRational random_q(std::mt19937_64& rng) {
    for (;;) {
        BigRational q = random_rational(rng, 20);
        if (q != BigRational(1) && q != BigRational(-1)) return q;
    }
}

RationalFunctionQ random_scalar(std::mt19937_64& rng, const RationalFunctionQ*) {
    std::vector<BigRational> c;
    for (int i = 0; i < 3; ++i) c.emplace_back(static_cast<long>(rng() % 7) - 3);
    RationalFunctionQ x{PolynomialQ(std::move(c))};
    if (x.is_zero()) x = RationalFunctionQ(1);
    return x * q_power(-static_cast<int>(rng() % 3));
}

BigRational random_scalar(std::mt19937_64& rng, const BigRational*) { return random_rational(rng, 9); }

template <class S>
HeckeElement<S> random_element(std::mt19937_64& rng, int n, int terms) {
    const auto table = PermTable::get(n);
    HeckeElement<S> x(n);
    for (int i = 0; i < terms; ++i) {
        x.add_term(table->perms()[rng() % table->size()], random_scalar(rng, static_cast<const S*>(nullptr)));
    }
    return x;
}

// ---------------------------------------------------------------- algebra

template <class Alg>
void algebra_relations(const Alg& alg, Recorder& rec) {
    using E = typename Alg::Element;
    using S = typename E::Scalar;
    const int n = alg.n();
    const E one = alg.one();
    const std::string tag = "n=" + std::to_string(n);
    const S qq = alg.q() + alg.q_inverse();
    for (int i = 1; i < n; ++i) {
        const std::string at = tag + " i=" + std::to_string(i);
        const E ti = alg.t_gen(i);
        const E minus = ti - alg.scalar(alg.q());
        const E plus = ti + alg.scalar(alg.q_inverse());
        rec.add("quadratic", alg.mul(minus, plus).is_zero(), at);
        rec.add("inverse", alg.mul(ti, alg.t_inverse_gen(i)) == one && alg.mul(alg.t_inverse_gen(i), ti) == one, at);
        const E pm = minus.scaled(-(S(1) / qq));
        const E pp = plus.scaled(S(1) / qq);
        rec.add("idempotents", alg.mul(pm, pm) == pm && alg.mul(pp, pp) == pp && alg.mul(pm, pp).is_zero(), at);
        for (int j = i + 1; j < n; ++j) {
            const E tj = alg.t_gen(j);
            if (j == i + 1) {
                rec.add("braid", alg.mul(alg.mul(ti, tj), ti) == alg.mul(alg.mul(tj, ti), tj), at);
            } else {
                rec.add("commutation", alg.mul(ti, tj) == alg.mul(tj, ti), at + " j=" + std::to_string(j));
            }
        }
    }
    const Permutation w0 = longest_element(n);
    rec.add("longest-inverse", alg.mul(alg.t_sigma(w0), alg.t_sigma_inverse(w0)) == one, tag);
}

template <class Alg>
void random_algebra_checks(const Alg& alg, std::uint64_t seed, int samples, Recorder& rec) {
    using S = typename Alg::Element::Scalar;
    std::mt19937_64 rng(seed);
    const int n = alg.n();
    int phi_ok = 0, assoc_ok = 0;
    for (int s = 0; s < samples; ++s) {
        const auto x = random_element<S>(rng, n, 4);
        const auto y = random_element<S>(rng, n, 4);
        const auto z = random_element<S>(rng, n, 3);
        if (alg.phi(alg.phi(x)) == x && alg.phi(alg.mul(x, y)) == alg.mul(alg.phi(y), alg.phi(x))) ++phi_ok;
        if (alg.mul(alg.mul(x, y), z) == alg.mul(x, alg.mul(y, z))) ++assoc_ok;
    }
    const std::string tail = "/" + std::to_string(samples) + " random samples in H_" + std::to_string(n);
    rec.add("phi-antiautomorphism", phi_ok == samples, std::to_string(phi_ok) + tail);
    rec.add("associativity", assoc_ok == samples, std::to_string(assoc_ok) + tail);
}

void suite_hecke_relations(VerifyContext& ctx, Recorder& rec) {
    const int top = std::max(top_n(ctx.opts()), 2);
    for (int n = 2; n <= top; ++n) {
        with_field(ctx, n, [&](const auto& fld) { algebra_relations(fld.alg, rec); });
    }
    const int samples = std::max(1, ctx.opts().samples / 2);
    with_field(ctx, 4, [&](const auto& fld) { random_algebra_checks(fld.alg, ctx.opts().seed, samples, rec); });
}

// ---------------------------------------------------------------- factors

using FactorNum = ElementNum;

FactorNum factor_num(const HeckeNum& alg, int i, const BigRational& a, const BigRational& b) {
    return fusion_factor(alg, i, a, b);
}

void suite_factor_identities(VerifyContext& ctx, Recorder& rec) {
    std::mt19937_64 rng(ctx.opts().seed ^ 0x9e3779b97f4a7c15ULL);
    const int samples = ctx.opts().samples;

    auto sampled = [&](const std::string& name, auto&& one_sample) {
        int ok = 0, tried = 0;
        std::string first_failure;
        for (int done = 0; done < samples && tried < 20 * samples; ++tried) {
            try {
                const Outcome o = one_sample();
                ++done;
                if (o.pass) {
                    ++ok;
                } else if (first_failure.empty()) {
                    first_failure = o.detail;
                }
            } catch (const SingularFactorError&) {
                // a singular draw; draw again
            }
        }
        std::string detail = std::to_string(ok) + "/" + std::to_string(samples) + " random samples";
        if (!first_failure.empty()) detail += "; first failure: " + first_failure;
        rec.add(name, ok == samples, detail);
    };

    auto sample_note = [](const BigRational& q, std::initializer_list<BigRational> xs) {
        std::string s = "q=" + q.to_string();
        char name = 'a';
        for (const auto& x : xs) s += std::string(" ") + name++ + "=" + x.to_string();
        return s;
    };

    sampled("yang-baxter", [&]() -> Outcome {
        const BigRational q = random_q(rng);
        const BigRational a = random_rational(rng, 30), b = random_rational(rng, 30), c = random_rational(rng, 30);
        const HeckeNum alg = numeric_algebra(3, q);
        const auto lhs = alg.mul(alg.mul(factor_num(alg, 1, a, b), factor_num(alg, 2, a, c)), factor_num(alg, 1, b, c));
        const auto rhs = alg.mul(alg.mul(factor_num(alg, 2, b, c), factor_num(alg, 1, a, c)), factor_num(alg, 2, a, b));
        return {lhs == rhs, sample_note(q, {a, b, c})};
    });

    sampled("factor-commutation", [&]() -> Outcome {
        const BigRational q = random_q(rng);
        const BigRational a = random_rational(rng, 30), b = random_rational(rng, 30);
        const BigRational c = random_rational(rng, 30), d = random_rational(rng, 30);
        const HeckeNum alg = numeric_algebra(4, q);
        const auto x = factor_num(alg, 1, a, b);
        const auto y = factor_num(alg, 3, c, d);
        return {alg.mul(x, y) == alg.mul(y, x), sample_note(q, {a, b, c, d})};
    });

    sampled("inversion", [&]() -> Outcome {
        const BigRational q = random_q(rng);
        const BigRational a = random_rational(rng, 30), b = random_rational(rng, 30);
        const HeckeNum alg = numeric_algebra(2, q);
        const auto prod = alg.mul(factor_num(alg, 1, a, b), factor_num(alg, 1, b, a));
        const BigRational d = q - q.inverse();
        const BigRational expected = BigRational(1) - d * d * a * b / ((a - b) * (a - b));
        return {prod == alg.scalar(expected), sample_note(q, {a, b})};
    });

    check(rec, "yang-baxter-symbolic", std::string("a=1+t b=1+2t c=1+3t over Q(q)(t)"), [&] {
        const HeckeQT alg = symbolic_algebra_t(3);
        auto line = [](int m) {
            return RationalFunctionQT(PolynomialQT(std::vector<RationalFunctionQ>{RationalFunctionQ(1), RationalFunctionQ(m)}));
        };
        const auto a = line(1), b = line(2), c = line(3);
        const auto lhs = alg.mul(alg.mul(fusion_factor(alg, 1, a, b), fusion_factor(alg, 2, a, c)),
                                 fusion_factor(alg, 1, b, c));
        const auto rhs = alg.mul(alg.mul(fusion_factor(alg, 2, b, c), fusion_factor(alg, 1, a, c)),
                                 fusion_factor(alg, 2, a, b));
        return Outcome{lhs == rhs, {}};
    });
}

// ---------------------------------------------------------------- fusion

void suite_regularity(VerifyContext& ctx, Recorder& rec) {
    for (const auto& p : selected_partitions(ctx.opts())) {
        for (const auto& t : selected_tableaux(p, ctx.opts())) {
            for (Grouping v : kVariants) {
                check(rec, "regularity", t, [&] {
                    ctx.result({t, v, {}}, Kind::F);
                    return yes("variant=" + to_string(v));
                });
            }
        }
    }
}

void suite_variant_agreement(VerifyContext& ctx, Recorder& rec) {
    for (const auto& p : selected_partitions(ctx.opts())) {
        for (const auto& t : selected_tableaux(p, ctx.opts())) {
            check(rec, "variant-agreement", t, [&] {
                const ElementQ& hook = ctx.result({t, Grouping::hook, {}}, Kind::F).element;
                for (Grouping v : {Grouping::row, Grouping::column}) {
                    if (!(ctx.result({t, v, {}}, Kind::F).element == hook)) {
                        return Outcome{false, "hook and " + to_string(v) + " values differ"};
                    }
                }
                return yes();
            });
        }
    }
}

void suite_direction_independence(VerifyContext& ctx, Recorder& rec) {
    for (const auto& p : selected_partitions(ctx.opts())) {
        for (const auto& t : selected_tableaux(p, ctx.opts())) {
            for (Grouping v : kVariants) {
                check(rec, "direction-independence", t, [&] {
                    const auto groups = entry_groups(t, v);
                    const int ng = *std::max_element(groups.begin(), groups.end()) + 1;
                    std::vector<int> squares;
                    for (int g = 0; g < ng; ++g) squares.push_back((g + 1) * (g + 1));
                    const bool same = ctx.result({t, v, {}}, Kind::F).element ==
                                      ctx.result({t, v, squares}, Kind::F).element;
                    return Outcome{same, "variant=" + to_string(v) + " slopes g vs (g+1)^2"};
                });
            }
        }
    }
}

void suite_t0coeff(VerifyContext& ctx, Recorder& rec) {
    for (const auto& p : selected_partitions(ctx.opts())) {
        const Permutation w0 = longest_element(p.size());
        for (const auto& t : selected_tableaux(p, ctx.opts())) {
            check(rec, "t0coeff", t, [&] {
                const RationalFunctionQ c = ctx.result({t, Grouping::hook, {}}, Kind::F).element.coeff(w0);
                return Outcome{c == RationalFunctionQ(1), "coefficient " + to_string(c)};
            });
        }
    }
}

void suite_phi_invariance(VerifyContext& ctx, Recorder& rec) {
    for (const auto& p : selected_partitions(ctx.opts())) {
        with_field(ctx, p.size(), [&](const auto& fld) {
            for (const auto& t : selected_tableaux(p, ctx.opts())) {
                check(rec, "phi-invariance", t, [&] {
                    const auto x = times_longest_inverse(fld.alg, fld(ctx.result({t, Grouping::hook, {}}, Kind::F).element));
                    return Outcome{fld.alg.phi(x) == x, {}};
                });
            }
        });
    }
}

void suite_eigen_divisibility(VerifyContext& ctx, Recorder& rec) {
    for (const auto& p : selected_partitions(ctx.opts())) {
        with_field(ctx, p.size(), [&](const auto& fld) {
            for (const auto& t : selected_tableaux(p, ctx.opts())) {
                for (auto [k, kind] : adjacent_pairs(t)) {
                    check(rec, "eigen-divisibility", t, [&] {
                        const auto f = fld(ctx.result({t, Grouping::hook, {}}, Kind::F).element);
                        return Outcome{eigen_divisibility(fld.alg, f, k, kind), pair_note(k, kind)};
                    });
                }
            }
        });
    }
}

void suite_triple_regularity(VerifyContext&, Recorder& rec) {
    for (int sign : {1, -1}) {
        check(rec, "triple-regularity", std::string("b = q^") + (sign > 0 ? "-2" : "2") + " a, c = a(1+t)",
              [&] { return Outcome{check_triple_regularity(sign), {}}; });
    }
    check(rec, "single-factor-pole", std::string("F_1(a, a(1+t)) must have a pole at t=0"),
          [] { return Outcome{!single_factor_regular(), {}}; });
}

constexpr int kIdentityCap = 5;
constexpr int kSolveCap = 5;
// Row reduction over Q(q) is only a cross-check of the numeric solves.
constexpr int kSymbolicSolveCap = 4;

void suite_intertwining(VerifyContext& ctx, Recorder& rec) {
    for (const auto& p : capped(ctx, rec, kIdentityCap)) {
        for (const auto& t : selected_tableaux(p, ctx.opts())) {
            for (int k = 1; k < p.size(); ++k) {
                if (!swap_is_standard(t, k)) continue;
                check(rec, "intertwining", t, [&] {
                    return Outcome{check_intertwining({t, Grouping::hook, {}}, k), "k=" + std::to_string(k)};
                });
            }
        }
    }
}

void suite_complement(VerifyContext& ctx, Recorder& rec) {
    for (const auto& p : capped(ctx, rec, kIdentityCap)) {
        for (const auto& t : selected_tableaux(p, ctx.opts())) {
            check(rec, "complement", t, [&] { return Outcome{check_complement({t, Grouping::hook, {}}), {}}; });
        }
    }
}

// ---------------------------------------------------------------- solves

void suite_stripping(VerifyContext& ctx, Recorder& rec) {
    const BigRational& q0 = ctx.q0();
    const EvalMode at = EvalMode::at(q0);
    for (const auto& p : capped(ctx, rec, kSolveCap)) {
        const PartitionAnalysis pa = partition_analyze(p);
        if (pa.durfee < 2) continue;
        const int n = p.size();
        const HeckeNum alg = numeric_algebra(n, q0);
        const StandardTableau h = hook_tableau(p);
        int offset = 0;
        for (int k = 1; k < pa.durfee; ++k) {
            offset += pa.hook_lengths[static_cast<std::size_t>(k - 1)];
            const Partition mu = remove_principal_hooks(p, k);
            check(rec, "stripping", p, [&] {
                const ElementNum f = evaluate_at(ctx.result({h, Grouping::hook, {}}, Kind::F, at).element, q0);
                const ElementNum g =
                    evaluate_at(ctx.result({hook_tableau(mu), Grouping::hook, {}}, Kind::F, at).element, q0);
                const bool ok = right_divisibility_solve(alg, shift_element(g, offset, n), f).has_value();
                return Outcome{ok, "strip " + std::to_string(k) + " to " + mu.to_string() + ", shift " +
                                       std::to_string(offset) + ", " + q0_note(q0)};
            });
        }
    }
}

void suite_pair_divisibility(VerifyContext& ctx, Recorder& rec) {
    const BigRational& q0 = ctx.q0();
    const EvalMode at = EvalMode::at(q0);
    for (const auto& p : capped(ctx, rec, kSolveCap)) {
        const int n = p.size();
        const HeckeNum alg = numeric_algebra(n, q0);
        const StandardTableau h = hook_tableau(p);
        for (int u = 1; u <= n; ++u) {
            const Box b = h.box_of(u);
            const bool below = b.row < p.column_length(b.col);
            const bool right = b.col < p.row_length(b.row);
            for (PairKind kind : {PairKind::column, PairKind::row}) {
                if (kind == PairKind::column ? !below : !right) continue;
                check(rec, "pair-divisibility", h, [&] {
                    const ElementQ div = kind == PairKind::column ? column_pair_divisor(p, u) : row_pair_divisor(p, u);
                    const ElementNum f = evaluate_at(ctx.result({h, Grouping::hook, {}}, Kind::F, at).element, q0);
                    const bool ok = left_divisibility_solve(alg, evaluate_at(div, q0), f).has_value();
                    return Outcome{ok, pair_note(u, kind) + ", " + q0_note(q0)};
                });
            }
        }
    }
}

// ---------------------------------------------------------------- modules

void suite_g_basis(VerifyContext& ctx, Recorder& rec) {
    const BigRational& q0 = ctx.q0();
    for (const auto& p : selected_partitions(ctx.opts())) {
        const StandardTableau h = hook_tableau(p);
        check(rec, "g-hook-equals-f", h, [&] {
            return Outcome{ctx.result({h, Grouping::hook, {}}, Kind::G).element ==
                               ctx.result({h, Grouping::hook, {}}, Kind::F).element,
                           {}};
        });
        for (const auto& t : selected_tableaux(p, ctx.opts())) {
            check(rec, "g-regularity", t, [&] {
                ctx.result({t, Grouping::hook, {}}, Kind::G);
                return yes();
            });
        }
        check(rec, "g-rank", p, [&] {
            const auto tabs = standard_tableaux(p);
            ExactMatrix<BigRational> m(tabs.size(), factorial(p.size()));
            for (std::size_t r = 0; r < tabs.size(); ++r) {
                const ElementNum g = evaluate_at(ctx.result({tabs[r], Grouping::hook, {}}, Kind::G).element, q0);
                for (const auto& [s, v] : g.terms()) m(r, lex_rank(s)) = v;
            }
            const std::size_t rank = m.rank();
            return Outcome{rank == tabs.size(), "rank " + std::to_string(rank) + " of " +
                                                    std::to_string(tabs.size()) + " at " + q0_note(q0)};
        });
    }
}

void suite_ideal_dimension(VerifyContext& ctx, Recorder& rec) {
    const BigRational& q0 = ctx.q0();
    for (const auto& p : capped(ctx, rec, kSolveCap)) {
        const StandardTableau h = hook_tableau(p);
        const std::size_t f = hook_length_count(p);
        check(rec, "ideal-dimension", h, [&] {
            const std::size_t d = ideal_dimension(ctx.result({h, Grouping::hook, {}}, Kind::F).element, EvalMode::at(q0));
            return Outcome{d == f, "dimension " + std::to_string(d) + ", f=" + std::to_string(f) + " at " + q0_note(q0)};
        });
        if (!ctx.opts().numeric && p.size() <= kSymbolicSolveCap) {
            check(rec, "ideal-dimension-symbolic", h, [&] {
                const std::size_t d = ideal_dimension(ctx.result({h, Grouping::hook, {}}, Kind::F).element,
                                                      EvalMode::symbolic());
                return Outcome{d == f, "dimension " + std::to_string(d) + ", f=" + std::to_string(f)};
            });
        }
    }
}

void suite_irreducibility(VerifyContext& ctx, Recorder& rec) {
    const BigRational& q0 = ctx.q0();
    for (const auto& p : capped(ctx, rec, kSolveCap)) {
        std::vector<ExactMatrix<BigRational>> mats;
        check(rec, "action-matrices", p, [&] {
            mats = action_matrices(p, q0);
            return Outcome{satisfies_hecke_relations(mats, q0), "relations at " + q0_note(q0)};
        });
        if (p.size() < 2 || mats.empty()) continue;
        check(rec, "burnside", p, [&] {
            const std::size_t f = mats[0].rows();
            const std::size_t d = generated_algebra_dimension(mats, f);
            return Outcome{d == f * f, "algebra dimension " + std::to_string(d) + ", f^2=" + std::to_string(f * f)};
        });
    }
}

void suite_dimension_sum(VerifyContext& ctx, Recorder& rec) {
    const int top = top_n(ctx.opts());
    for (int n = ctx.opts().shape ? top : 1; n <= top; ++n) {
        std::size_t sum = 0;
        for (const auto& p : partitions_of(n)) {
            const std::size_t f = hook_length_count(p);
            const std::size_t count = standard_tableaux(p).size();
            rec.add("hook-length-count", p, f == count,
                    "hook formula " + std::to_string(f) + ", enumerated " + std::to_string(count));
            sum += f * f;
        }
        rec.add("dimension-sum", sum == factorial(n),
                "n=" + std::to_string(n) + ": sum f^2 = " + std::to_string(sum) + ", n! = " +
                    std::to_string(factorial(n)));
    }
}

void suite_specialization(VerifyContext& ctx, Recorder& rec) {
    for (const auto& p : selected_partitions(ctx.opts())) {
        const int n = p.size();
        const HeckeNum group_ring = numeric_algebra(n, BigRational(1));
        const Permutation w0 = longest_element(n);
        for (const auto& t : selected_tableaux(p, ctx.opts())) {
            check(rec, "specialization", t, [&] {
                const ElementNum f1 = specialize_q1(ctx.result({t, Grouping::hook, {}}, Kind::F, EvalMode::symbolic()).element);
                if (!(f1.coeff(w0) == BigRational(1))) {
                    return Outcome{false, "coefficient of sigma_0 is " + f1.coeff(w0).to_string()};
                }
                for (auto [k, kind] : adjacent_pairs(t)) {
                    if (!eigen_divisibility(group_ring, f1, k, kind)) return Outcome{false, pair_note(k, kind)};
                }
                return yes();
            });
        }
    }
}

}  // namespace

const std::vector<Suite>& verify_suites() {
    static const std::vector<Suite> suites = {
        {"hecke-relations", "quadratic, braid, commutation, inverse and idempotent relations; phi and associativity on random elements",
         suite_hecke_relations},
        {"factor-identities", "Yang-Baxter, commutation and inversion of fusion factors on random exact samples, Yang-Baxter in t",
         suite_factor_identities},
        {"regularity", "F exists at t=0 for every tableau and variant", suite_regularity},
        {"variant-agreement", "hook, row and column variants give the same F", suite_variant_agreement},
        {"direction-independence", "F does not depend on the slopes of the line", suite_direction_independence},
        {"t0coeff", "coefficient of T_0 in F is 1", suite_t0coeff},
        {"phi-invariance", "F T_0^-1 is fixed by phi", suite_phi_invariance},
        {"eigen-divisibility", "T_k F = -q^-1 F for a column pair, q F for a row pair", suite_eigen_divisibility},
        {"triple-regularity", "regular triple products, and the pole of a lone factor", suite_triple_regularity},
        {"intertwining", "F_T F_{n-k} = F_k F_T' for standard adjacent swaps", suite_intertwining},
        {"complement", "F equals G times the A product", suite_complement},
        {"stripping", "F of the hook tableau is right divisible by the shifted F of the stripped shape", suite_stripping},
        {"pair-divisibility", "F of the hook tableau is left divisible by the column and row pair divisors",
         suite_pair_divisibility},
        {"g-basis", "G of the hook tableau equals F; the G family has full rank", suite_g_basis},
        {"ideal-dimension", "the left ideal generated by F has dimension f", suite_ideal_dimension},
        {"irreducibility", "action matrices on the G basis satisfy the relations and generate all f x f matrices",
         suite_irreducibility},
        {"dimension-sum", "hook length counts match enumeration and sum f^2 = n!", suite_dimension_sum},
        {"specialization", "F at q=1 has no pole, coefficient 1 at sigma_0 and eigenvalues -1 / +1",
         suite_specialization},
    };
    return suites;
}

bool VerifyReport::pass() const {
    return std::all_of(records.begin(), records.end(), [](const CheckRecord& r) { return r.pass; });
}

VerifyReport run_verify(const std::string& suite, const VerifyOptions& opts) {
    const auto& all = verify_suites();
    if (suite != "all" && std::none_of(all.begin(), all.end(), [&](const Suite& s) { return s.name == suite; })) {
        std::string names;
        for (const auto& s : all) names += (names.empty() ? "" : "|") + s.name;
        throw std::invalid_argument("unknown suite '" + suite + "' (expected all|" + names + ")");
    }
    if (opts.max_n < 1) throw std::invalid_argument("max-n must be at least 1");
    VerifyContext ctx(opts);
    VerifyReport report;
    for (const auto& s : all) {
        if (suite != "all" && s.name != suite) continue;
        Recorder rec;
        s.run(ctx, rec);
        SuiteSummary sum{s.name, rec.records().size(), 0, rec.skipped()};
        for (CheckRecord r : rec.records()) {
            if (!r.pass) ++sum.failed;
            r.suite = s.name;
            report.records.push_back(std::move(r));
        }
        report.suites.push_back(std::move(sum));
    }
    return report;
}

Json report_to_json(const VerifyReport& report, const VerifyOptions& opts) {
    Json records = Json::array();
    for (const auto& r : report.records) {
        records.push_back({{"suite", r.suite},
                           {"check", r.check},
                           {"shape", r.shape},
                           {"tableau", r.tableau ? Json(*r.tableau) : Json(nullptr)},
                           {"pass", r.pass},
                           {"detail", r.detail}});
    }
    Json suites = Json::array();
    for (const auto& s : report.suites) {
        std::string description;
        for (const auto& d : verify_suites())
            if (d.name == s.name) description = d.description;
        suites.push_back({{"name", s.name},
                          {"description", description},
                          {"checks", s.checks},
                          {"failed", s.failed},
                          {"skipped_shapes", s.skipped}});
    }
    return {{"pass", report.pass()},
            {"max_n", opts.max_n},
            {"shape", opts.shape ? Json(opts.shape->parts()) : Json(nullptr)},
            {"tableaux", opts.tableaux},
            {"mode", opts.numeric ? "numeric" : "symbolic"},
            {"q0", verify_q0(opts).to_string()},
            {"seed", opts.seed},
            {"suites", std::move(suites)},
            {"records", std::move(records)}};
}

}  // namespace fusionq
