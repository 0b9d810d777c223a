// Acceptance run: one PASS/FAIL line per criterion, with timings.
// Exits 0 only when every criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "fusionq/repr.hpp"
#include "fusionq/verify.hpp"

using namespace fusionq;

namespace {

struct Tally {
    std::size_t checks = 0;
    std::size_t failed = 0;
    std::string first_failure;

    void add(bool pass, const std::string& what) {
        ++checks;
        if (!pass) {
            ++failed;
            if (first_failure.empty()) first_failure = what;
        }
    }
    void add(const VerifyReport& r) {
        for (const auto& rec : r.records) {
            std::string what = rec.suite + "/" + rec.check;
            if (!rec.shape.empty()) what += " shape=" + Partition(rec.shape).to_string();
            if (rec.tableau) what += " tableau=" + StandardTableau(*rec.tableau).to_string();
            if (!rec.detail.empty()) what += " (" + rec.detail + ")";
            add(rec.pass, what);
        }
    }
};

VerifyOptions options(int max_n, bool numeric) {
    VerifyOptions o;
    o.max_n = max_n;
    o.numeric = numeric;
    return o;
}

VerifyOptions shape_options(const Partition& p, const std::string& tableaux, bool numeric) {
    VerifyOptions o = options(p.size(), numeric);
    o.shape = p;
    o.tableaux = tableaux;
    return o;
}

void suites(Tally& t, std::initializer_list<const char*> names, const VerifyOptions& o) {
    for (const char* s : names) t.add(run_verify(s, o));
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Criterion {
    int id;
    std::string title;
    double limit_s;  // 0: no runtime bound
    std::function<void(Tally&)> run;
};

const Partition kRunning({3, 3, 2});

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "Hecke relations n<=5, phi on 50 random pairs in H_4, T_i T_i^-1 = 1", 60,
         [](Tally& t) { suites(t, {"hecke-relations"}, options(5, false)); }},
        {2, "Yang-Baxter, commutation, inversion on 100 samples each; Yang-Baxter in t", 60,
         [](Tally& t) { suites(t, {"factor-identities"}, options(5, false)); }},
        {3, "regularity: every tableau and variant n<=5 symbolic; (3,3,2) numeric", 600,
         [](Tally& t) {
             suites(t, {"regularity"}, options(5, false));
             suites(t, {"regularity"}, shape_options(kRunning, "all", true));
         }},
        {4, "hook = row = column: n<=5 symbolic; (3,3,2) at 3 numeric q", 0,
         [](Tally& t) {
             suites(t, {"variant-agreement"}, options(5, false));
             for (const BigRational& q0 : q0_pool(VerifyOptions{}.seed, 3)) {
                 for (const auto& tab : standard_tableaux(kRunning)) {
                     const EvalMode m = EvalMode::at(q0);
                     const ElementQ hook = evaluate_F({tab, Grouping::hook, {}}, m).element;
                     const bool pass = hook == evaluate_F({tab, Grouping::row, {}}, m).element &&
                                       hook == evaluate_F({tab, Grouping::column, {}}, m).element;
                     t.add(pass, "variants differ at q0=" + q0.to_string() + " tableau=" + tab.to_string());
                 }
             }
         }},
        {5, "coefficient of T_0 in F is 1, n<=5", 0, [](Tally& t) { suites(t, {"t0coeff"}, options(5, false)); }},
        {6, "phi(F T_0^-1) = F T_0^-1, n<=5", 0, [](Tally& t) { suites(t, {"phi-invariance"}, options(5, false)); }},
        {7, "T_k F = -q^-1 F (column pairs), q F (row pairs), n<=5", 0,
         [](Tally& t) { suites(t, {"eigen-divisibility"}, options(5, false)); }},
        {8, "triple products regular for both signs; lone factor has a pole", 0,
         [](Tally& t) { suites(t, {"triple-regularity"}, options(3, false)); }},
        {9, "intertwining for every standard adjacent swap, n<=4 symbolic", 0,
         [](Tally& t) { suites(t, {"intertwining"}, options(4, false)); }},
        {10, "stripping (d>=2) and pair divisibility at numeric q, n<=5", 0,
         [](Tally& t) { suites(t, {"stripping", "pair-divisibility"}, options(5, true)); }},
        {11, "G = F on the hook tableau, rank f, complement n<=4, ideal dim f n<=5, Burnside n<=4, sum f^2 = n! n<=6", 0,
         [](Tally& t) {
             suites(t, {"g-basis"}, options(5, false));
             suites(t, {"complement"}, options(4, false));
             suites(t, {"ideal-dimension"}, options(5, true));
             suites(t, {"irreducibility"}, options(4, true));
             suites(t, {"dimension-sum"}, options(6, false));
         }},
        {12, "q=1 specialization without poles; sigma_0 coefficient 1 and eigenvalues -1/+1, n<=5", 0,
         [](Tally& t) { suites(t, {"specialization"}, options(5, false)); }},
        {13, "(3,3,2) hook tableau F in numeric mode under 30 min; criteria 5-7 at that q", 1800,
         [](Tally& t) {
             const VerifyOptions o = shape_options(kRunning, "hook", true);
             const auto t0 = std::chrono::steady_clock::now();
             const FusionResult r = evaluate_F({hook_tableau(kRunning), Grouping::hook, {}}, EvalMode::at(verify_q0(o)));
             const double s = seconds_since(t0);
             std::printf("    (3,3,2) numeric F: %zu terms in %.2f s\n", r.element.size(), s);
             t.add(s < 1800, "evaluation took " + std::to_string(s) + " s");
             suites(t, {"t0coeff", "phi-invariance", "eigen-divisibility"}, o);
         }},
    };

    const auto start = std::chrono::steady_clock::now();
    int failed = 0;
    for (const auto& c : criteria) {
        Tally t;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            c.run(t);
        } catch (const std::exception& e) {
            t.add(false, std::string("exception: ") + e.what());
        }
        const double s = seconds_since(t0);
        bool pass = t.failed == 0 && t.checks > 0;
        std::string why = t.first_failure;
        if (c.limit_s > 0 && s >= c.limit_s) {
            pass = false;
            if (why.empty()) why = "runtime over " + std::to_string(static_cast<int>(c.limit_s)) + " s";
        }
        if (!pass) ++failed;
        std::printf("criterion %2d %s  %s  [%zu checks, %zu failed, %.2f s]\n", c.id, pass ? "PASS" : "FAIL",
                    c.title.c_str(), t.checks, t.failed, s);
        if (!pass) std::printf("    first failure: %s\n", why.empty() ? "no checks ran" : why.c_str());
        std::fflush(stdout);
    }
    std::printf("%s: %zu/%zu criteria passed in %.2f s\n", failed == 0 ? "PASS" : "FAIL", criteria.size() - failed,
                criteria.size(), seconds_since(start));
    return failed == 0 ? 0 : 1;
}
