#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <optional>

#include "fusionq/io.hpp"
#include "fusionq/repr.hpp"
#include "fusionq/verify.hpp"

namespace fusionq::cli {
namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string shape;
    std::string tableau = "hook";
    std::string variant = "hook";
    std::string kind = "F";
    std::string mode = "symbolic";
    std::string suite = "all";
    int max_n = 4;
    int repetitions = 3;
    std::string out;
    std::string report;
    std::uint64_t seed = 2024;
};

Partition parse_shape(const std::string& s) {
    if (s.empty()) throw UsageError("--shape is required");
    try {
        return Partition::parse(s);
    } catch (const std::invalid_argument& e) {
        throw UsageError("invalid partition '" + s + "': " + e.what());
    }
}

bool numeric_mode(const std::string& m) {
    if (m == "numeric") return true;
    if (m == "symbolic") return false;
    throw UsageError("unknown mode '" + m + "' (expected symbolic|numeric)");
}

StandardTableau pick_tableau(const Partition& p, const std::string& selector) {
    if (selector == "hook") return hook_tableau(p);
    VerifyOptions o;
    o.tableaux = selector;
    try {
        return selected_tableaux(p, o).at(0);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

// Writes text to path, or to out when path is empty.
void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    f << text;
    if (!f) throw UsageError("cannot write " + path);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int cmd_compute(const Options& o, std::ostream& out) {
    const Partition p = parse_shape(o.shape);
    FusionSpec spec;
    try {
        spec = {pick_tableau(p, o.tableau), parse_grouping(o.variant), {}};
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    Kind kind;
    try {
        kind = parse_kind(o.kind);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const auto cache = ResultCache::from_env();
    const ResultCache* c = cache ? &*cache : nullptr;
    FusionResult r = numeric_mode(o.mode)
                         ? with_numeric_q(o.seed, [&](const BigRational& q0) { return compute(spec, kind, EvalMode::at(q0), c); })
                         : compute(spec, kind, EvalMode::symbolic(), c);
    emit(dump_json(result_to_json(r)), o.out, out);
    return kOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
    VerifyOptions v;
    v.max_n = o.max_n;
    if (v.max_n < 1) throw UsageError("--max-n must be at least 1");
    if (!o.shape.empty()) v.shape = parse_shape(o.shape);
    v.tableaux = o.tableau == "hook" && o.shape.empty() ? "all" : o.tableau;
    v.numeric = numeric_mode(o.mode);
    v.seed = o.seed;
    const auto cache = ResultCache::from_env();
    v.cache = cache ? &*cache : nullptr;

    const auto& suites = verify_suites();
    if (o.suite != "all" &&
        std::none_of(suites.begin(), suites.end(), [&](const Suite& s) { return s.name == o.suite; })) {
        std::string names;
        for (const auto& s : suites) names += "|" + s.name;
        throw UsageError("unknown suite '" + o.suite + "' (expected all" + names + ")");
    }
    try {
        selected_tableaux(v.shape ? *v.shape : Partition({1}), v);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }

    VerifyReport report;
    for (const auto& s : suites) {
        if (o.suite != "all" && s.name != o.suite) continue;
        const auto t0 = std::chrono::steady_clock::now();
        VerifyReport part = run_verify(s.name, v);
        const auto& sum = part.suites.at(0);
        err << "suite " << s.name << ": " << sum.checks << " checks, " << sum.failed << " failed";
        if (!sum.skipped.empty()) err << ", " << sum.skipped.size() << " shapes skipped";
        err << " (" << std::fixed << std::setprecision(2) << seconds_since(t0) << " s)\n";
        for (auto& r : part.records) report.records.push_back(std::move(r));
        report.suites.push_back(sum);
    }
    const std::string text = dump_json(report_to_json(report, v));
    if (!o.report.empty()) emit(text, o.report, out);
    std::size_t failed = 0;
    for (const auto& r : report.records) {
        if (r.pass) continue;
        ++failed;
        out << "FAIL " << r.suite << " " << r.check;
        if (!r.shape.empty()) out << " shape=" << Partition(r.shape).to_string();
        if (r.tableau) out << " tableau=" << StandardTableau(*r.tableau).to_string();
        if (!r.detail.empty()) out << " (" << r.detail << ")";
        out << "\n";
    }
    out << (failed == 0 ? "PASS" : "FAIL") << ": " << report.records.size() - failed << "/" << report.records.size()
        << " checks passed\n";
    return failed == 0 ? kOk : kCheckFailed;
}

int cmd_bench(const Options& o, std::ostream& out) {
    const Partition p = parse_shape(o.shape);
    if (o.repetitions < 1) throw UsageError("--repetitions must be at least 1");
    const FusionSpec spec{pick_tableau(p, o.tableau), Grouping::hook, {}};
    const BigRational q0 = q0_pool(o.seed, 1)[0];

    struct Row {
        std::string mode;
        std::optional<double> best, mean;
        std::size_t terms = 0;
        std::string note;
        std::optional<ElementNum> value;
    };
    auto time_mode = [&](const EvalMode& mode) {
        Row row{mode.name(), {}, {}, 0, {}, {}};
        double total = 0;
        for (int i = 0; i < o.repetitions; ++i) {
            const auto t0 = std::chrono::steady_clock::now();
            const FusionResult r = evaluate_F(spec, mode);
            const double s = seconds_since(t0);
            total += s;
            row.best = row.best ? std::min(*row.best, s) : s;
            if (i == 0) {
                row.terms = r.element.size();
                row.value = evaluate_at(r.element, q0);
            }
        }
        row.mean = total / o.repetitions;
        return row;
    };

    std::vector<Row> rows;
    if (p.size() < kBenchSymbolicLimit) {
        rows.push_back(time_mode(EvalMode::symbolic()));
    } else {
        rows.push_back({"symbolic", {}, {}, 0,
                        "skipped: n >= " + std::to_string(kBenchSymbolicLimit) + ", symbolic Q(q) evaluation too slow",
                        {}});
    }
    rows.push_back(time_mode(EvalMode::at(q0)));
    std::optional<bool> equal;
    if (rows[0].value && rows[1].value) equal = *rows[0].value == *rows[1].value;

    std::ostringstream table;
    table << "shape " << p.to_string() << ", tableau " << spec.tableau.to_string() << ", q0=" << q0.to_string()
          << ", repetitions " << o.repetitions << "\n";
    table << std::left << std::setw(10) << "mode" << std::right << std::setw(12) << "best_s" << std::setw(12)
          << "mean_s" << std::setw(8) << "terms" << "  note\n";
    for (const auto& r : rows) {
        table << std::left << std::setw(10) << r.mode << std::right << std::fixed << std::setprecision(4);
        if (r.best) {
            table << std::setw(12) << *r.best << std::setw(12) << *r.mean << std::setw(8) << r.terms;
        } else {
            table << std::setw(12) << "-" << std::setw(12) << "-" << std::setw(8) << "-";
        }
        table << "  " << r.note << "\n";
    }
    table << "equal: " << (equal ? (*equal ? "true" : "false") : "n/a") << "\n";

    if (o.out.empty()) {
        out << table.str();
    } else {
        Json j_rows = Json::array();
        for (const auto& r : rows) {
            j_rows.push_back({{"mode", r.mode},
                              {"best_s", r.best ? Json(*r.best) : Json(nullptr)},
                              {"mean_s", r.mean ? Json(*r.mean) : Json(nullptr)},
                              {"terms", r.best ? Json(r.terms) : Json(nullptr)},
                              {"note", r.note}});
        }
        emit(dump_json({{"shape", p.parts()},
                        {"tableau", spec.tableau.rows()},
                        {"q0", q0.to_string()},
                        {"repetitions", o.repetitions},
                        {"rows", j_rows},
                        {"equal", equal ? Json(*equal) : Json(nullptr)}}),
             o.out, out);
        out << table.str();
    }
    return equal.value_or(true) ? kOk : kMath;
}

int cmd_list_tableaux(const Options& o, std::ostream& out) {
    const Partition p = parse_shape(o.shape);
    const auto tabs = standard_tableaux(p);
    const StandardTableau hook = hook_tableau(p);
    Json list = Json::array();
    for (std::size_t i = 0; i < tabs.size(); ++i) {
        list.push_back({{"index", i}, {"rows", tabs[i].rows()}, {"contents", contents(tabs[i])}, {"hook", tabs[i] == hook}});
    }
    const PartitionAnalysis pa = partition_analyze(p);
    emit(dump_json({{"shape", p.parts()},
                    {"count", tabs.size()},
                    {"hook_length_count", hook_length_count(p)},
                    {"durfee", pa.durfee},
                    {"frobenius", {{"alpha", pa.alpha}, {"beta", pa.beta}}},
                    {"tableaux", std::move(list)}}),
         o.out, out);
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Fusion procedure for the Hecke algebra H_n: primitive idempotent generators F and G"};
    app.name("fusionq");
    app.require_subcommand(1);

    auto shape = [&](CLI::App* c, bool required) {
        auto* opt = c->add_option("--shape", o.shape, "partition, comma separated, e.g. 3,3,2");
        if (required) opt->required();
    };
    auto seed = [&](CLI::App* c) { c->add_option("--seed", o.seed, "seed of the numeric q0 pool")->capture_default_str(); };
    auto mode = [&](CLI::App* c) {
        c->add_option("--mode", o.mode, "symbolic|numeric")->capture_default_str();
    };

    auto* compute = app.add_subcommand("compute", "evaluate F or G for one tableau and print its JSON");
    shape(compute, true);
    compute->add_option("--tableau", o.tableau, "hook, or an index into list-tableaux")->capture_default_str();
    compute->add_option("--variant", o.variant, "hook|row|column")->capture_default_str();
    compute->add_option("--kind", o.kind, "F|G")->capture_default_str();
    mode(compute);
    seed(compute);
    compute->add_option("--out", o.out, "output file (default stdout)");

    auto* verify = app.add_subcommand("verify", "run property suites");
    verify->add_option("--suite", o.suite, "all, or a suite name")->capture_default_str();
    verify->add_option("--max-n", o.max_n, "largest n swept")->capture_default_str();
    shape(verify, false);
    verify->add_option("--tableau", o.tableau, "all, hook or an index (all when no shape is given)");
    mode(verify);
    seed(verify);
    verify->add_option("--report", o.report, "JSON report file");

    auto* bench = app.add_subcommand("bench", "time symbolic against numeric evaluation of F");
    shape(bench, true);
    bench->add_option("--tableau", o.tableau, "hook, or an index")->capture_default_str();
    bench->add_option("--repetitions", o.repetitions, "timed runs per mode")->capture_default_str();
    seed(bench);
    bench->add_option("--out", o.out, "JSON table file");

    auto* list = app.add_subcommand("list-tableaux", "standard tableaux of a shape, with their indices");
    shape(list, true);
    list->add_option("--out", o.out, "output file (default stdout)");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kUsage;
    }

    try {
        if (compute->parsed()) return cmd_compute(o, out);
        if (verify->parsed()) return cmd_verify(o, out, err);
        if (bench->parsed()) return cmd_bench(o, out);
        return cmd_list_tableaux(o, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const RegularityError& e) {
        err << "math error: " << e.what() << "\n";
        return kMath;
    } catch (const PoleError& e) {
        err << "math error: " << e.what() << "\n";
        return kMath;
    } catch (const SingularFactorError& e) {
        err << "math error: " << e.what() << "\n";
        return kMath;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kMath;
    }
}

}  // namespace fusionq::cli
