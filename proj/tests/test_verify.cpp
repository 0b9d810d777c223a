#include <doctest.h>

#include <set>

#include "fusionq/repr.hpp"
#include "fusionq/verify.hpp"

using namespace fusionq;

// n = 4 is the first size with a Durfee square of side 2, so every suite
// has something to check.
TEST_CASE("every suite runs and passes for n <= 4") {
    VerifyOptions o;
    o.max_n = 4;
    o.samples = 10;
    const VerifyReport r = run_verify("all", o);
    CHECK(r.pass());
    REQUIRE(r.suites.size() == verify_suites().size());
    for (std::size_t i = 0; i < r.suites.size(); ++i) {
        CHECK(r.suites[i].name == verify_suites()[i].name);
        CHECK(r.suites[i].checks > 0);
        CHECK(r.suites[i].failed == 0);
    }
    std::set<std::string> seen;
    for (const auto& rec : r.records) {
        CHECK(rec.pass);
        seen.insert(rec.suite);
    }
    CHECK(seen.size() == verify_suites().size());
}

TEST_CASE("numeric mode passes for n <= 3") {
    VerifyOptions o;
    o.max_n = 3;
    o.numeric = true;
    o.samples = 10;
    CHECK(run_verify("all", o).pass());
}

TEST_CASE("unknown suite and bad bounds") {
    CHECK_THROWS_AS(run_verify("no-such-suite", {}), std::invalid_argument);
    VerifyOptions o;
    o.max_n = 0;
    CHECK_THROWS_AS(run_verify("t0coeff", o), std::invalid_argument);
}

TEST_CASE("selection of partitions and tableaux") {
    VerifyOptions o;
    o.max_n = 4;
    CHECK(selected_partitions(o).size() == 1 + 2 + 3 + 5);
    o.shape = Partition({2, 2});
    CHECK(selected_partitions(o) == std::vector<Partition>{Partition({2, 2})});
    CHECK(selected_tableaux(Partition({3, 3, 2}), o).size() == 42);
    o.tableaux = "hook";
    CHECK(selected_tableaux(Partition({3, 3, 2}), o) == std::vector<StandardTableau>{hook_tableau(Partition({3, 3, 2}))});
    o.tableaux = "1";
    CHECK(selected_tableaux(Partition({2, 1}), o) == std::vector<StandardTableau>{standard_tableaux(Partition({2, 1}))[1]});
    o.tableaux = "2";
    CHECK_THROWS_AS(selected_tableaux(Partition({2, 1}), o), std::invalid_argument);
    o.tableaux = "x";
    CHECK_THROWS_AS(selected_tableaux(Partition({2, 1}), o), std::invalid_argument);
}

TEST_CASE("verify q0 comes from the seeded pool") {
    VerifyOptions o;
    CHECK(verify_q0(o) == BigRational(mpz_class(6), mpz_class(5)));
    o.seed = 5;
    CHECK(verify_q0(o) == q0_pool(5, 1)[0]);
}

TEST_CASE("capped suites skip large shapes unless named") {
    VerifyOptions o;
    o.max_n = 6;
    o.numeric = true;
    const VerifyReport r = run_verify("intertwining", o);
    REQUIRE(r.suites.size() == 1);
    CHECK(r.suites[0].skipped.size() == 11);
    o.shape = Partition({3, 3});
    o.tableaux = "hook";
    const VerifyReport named = run_verify("intertwining", o);
    CHECK(named.suites[0].skipped.empty());
    CHECK(named.suites[0].checks > 0);
}

TEST_CASE("report json") {
    VerifyOptions o;
    o.max_n = 3;
    const VerifyReport r = run_verify("t0coeff", o);
    const Json j = report_to_json(r, o);
    CHECK(j.at("pass") == true);
    CHECK(j.at("max_n") == 3);
    CHECK(j.at("mode") == "symbolic");
    CHECK(j.at("q0") == "6/5");
    CHECK(j.at("shape").is_null());
    REQUIRE(j.at("suites").size() == 1);
    CHECK(j.at("suites")[0].at("name") == "t0coeff");
    CHECK(j.at("suites")[0].at("checks") == r.records.size());
    for (const auto& rec : j.at("records")) {
        CHECK(rec.at("suite") == "t0coeff");
        CHECK(rec.contains("tableau"));
        CHECK(rec.contains("detail"));
    }
}

TEST_CASE("one failed record fails the report") {
    VerifyReport r;
    r.records.push_back({"x", {}, std::nullopt, true, {}, "s"});
    CHECK(r.pass());
    r.records.push_back({"y", {}, std::nullopt, false, "bad", "s"});
    CHECK_FALSE(r.pass());
}
