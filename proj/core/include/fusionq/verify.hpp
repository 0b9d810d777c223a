#pragma once

// Property suites over all partitions up to a size bound. Each suite
// appends one record per individual check. The expensive suites cap the
// size of the shapes they sweep; an explicit shape is always run.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fusionq/io.hpp"

namespace fusionq {

struct CheckRecord {
    std::string check;
    std::vector<int> shape;  // empty when the check is not tied to a shape
    std::optional<std::vector<std::vector<int>>> tableau;
    bool pass = false;
    std::string detail;
    std::string suite;  // filled in by run_verify
};

struct VerifyOptions {
    int max_n = 4;
    /// Restricts to one partition instead of all partitions up to max_n.
    std::optional<Partition> shape;
    /// "all", "hook", or a 0-based index into standard_tableaux.
    std::string tableaux = "all";
    bool numeric = false;
    std::uint64_t seed = 2024;
    /// Random samples per randomised identity.
    int samples = 100;
    const ResultCache* cache = nullptr;
};

struct SuiteSummary {
    std::string name;
    std::size_t checks = 0;
    std::size_t failed = 0;
    /// Shapes left out because the suite caps their size.
    std::vector<std::string> skipped;
};

class Recorder {
public:
    void add(CheckRecord r) { records_.push_back(std::move(r)); }
    void add(std::string check, bool pass, std::string detail = {}) {
        add(CheckRecord{std::move(check), {}, std::nullopt, pass, std::move(detail), {}});
    }
    void add(std::string check, const StandardTableau& t, bool pass, std::string detail = {}) {
        add(CheckRecord{std::move(check), t.shape().parts(), t.rows(), pass, std::move(detail), {}});
    }
    void add(std::string check, const Partition& p, bool pass, std::string detail = {}) {
        add(CheckRecord{std::move(check), p.parts(), std::nullopt, pass, std::move(detail), {}});
    }
    void skip(const Partition& p) { skipped_.push_back(p.to_string()); }

    const std::vector<CheckRecord>& records() const { return records_; }
    const std::vector<std::string>& skipped() const { return skipped_; }

private:
    std::vector<CheckRecord> records_;
    std::vector<std::string> skipped_;
};

/// Options plus a memo of fusion results shared by the suites of one run.
class VerifyContext {
public:
    explicit VerifyContext(VerifyOptions opts);

    const VerifyOptions& opts() const { return opts_; }
    const BigRational& q0() const { return q0_; }
    EvalMode mode() const { return opts_.numeric ? EvalMode::at(q0_) : EvalMode::symbolic(); }

    /// F or G for a FusionSpec in the given mode, memoised.
    const FusionResult& result(const FusionSpec& spec, Kind kind, const EvalMode& mode);
    const FusionResult& result(const FusionSpec& spec, Kind kind) { return result(spec, kind, mode()); }

private:
    VerifyOptions opts_;
    BigRational q0_;
    std::map<std::string, FusionResult> memo_;
};

struct Suite {
    std::string name;
    std::string description;
    std::function<void(VerifyContext&, Recorder&)> run;
};

const std::vector<Suite>& verify_suites();

struct VerifyReport {
    std::vector<CheckRecord> records;
    std::vector<SuiteSummary> suites;
    bool pass() const;
};

/// Runs one suite by name, or every suite for "all". Throws
/// std::invalid_argument for an unknown name.
VerifyReport run_verify(const std::string& suite, const VerifyOptions& opts);

Json report_to_json(const VerifyReport& report, const VerifyOptions& opts);

/// The value of q used by numeric checks under these options.
BigRational verify_q0(const VerifyOptions& opts);

/// Partitions selected by the options.
std::vector<Partition> selected_partitions(const VerifyOptions& opts);
/// Tableaux of p selected by the options.
std::vector<StandardTableau> selected_tableaux(const Partition& p, const VerifyOptions& opts);

}  // namespace fusionq
