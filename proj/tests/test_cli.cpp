#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "fusionq/verify.hpp"

using namespace fusionq;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("fusionq-cli-" + std::to_string(::getpid()) + "-" + name);
}

Json read_json(const std::filesystem::path& p) {
    std::ifstream in(p);
    return Json::parse(in);
}

}  // namespace

TEST_CASE("compute prints the element json") {
    const Run r = run({"compute", "--shape", "1,1"});
    REQUIRE(r.code == cli::kOk);
    const HeckeQ h = symbolic_algebra(2);
    const Json j = Json::parse(r.out);
    CHECK(element_from_json(j) == h.t_gen(1) - h.scalar(RationalFunctionQ::variable()));
    CHECK(j.at("kind") == "F");
    CHECK(j.at("mode") == "symbolic");
    CHECK(r.out == dump_json(j));
}

TEST_CASE("compute numeric for (3,3,2)") {
    const Run r = run({"compute", "--shape", "3,3,2", "--mode", "numeric"});
    REQUIRE(r.code == cli::kOk);
    const Json j = Json::parse(r.out);
    CHECK(j.at("q0") == "6/5");
    const ElementQ f = element_from_json(j);
    CHECK(f.coeff(longest_element(8)) == RationalFunctionQ(1));
}

TEST_CASE("compute writes --out and accepts every option") {
    const auto path = temp_file("compute.json");
    const Run r = run({"compute", "--shape", "2,1", "--tableau", "1", "--variant", "column", "--kind", "G", "--out",
                       path.string()});
    REQUIRE(r.code == cli::kOk);
    CHECK(r.out.empty());
    const Json j = read_json(path);
    CHECK(j.at("kind") == "G");
    CHECK(j.at("variant") == "column");
    std::filesystem::remove(path);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({}).code == cli::kUsage);
    CHECK(run({"compute"}).code == cli::kUsage);
    CHECK(run({"compute", "--shape", "0"}).code == cli::kUsage);
    CHECK(run({"compute", "--shape", "1,2"}).code == cli::kUsage);
    CHECK(run({"compute", "--shape", "2,1", "--tableau", "5"}).code == cli::kUsage);
    CHECK(run({"compute", "--shape", "2,1", "--variant", "diagonal"}).code == cli::kUsage);
    CHECK(run({"compute", "--shape", "2,1", "--kind", "H"}).code == cli::kUsage);
    CHECK(run({"compute", "--shape", "2,1", "--mode", "fast"}).code == cli::kUsage);
    CHECK(run({"verify", "--suite", "no-such-suite"}).code == cli::kUsage);
    CHECK(run({"verify", "--max-n", "0"}).code == cli::kUsage);
    CHECK(run({"frobnicate"}).code == cli::kUsage);
    const Run bad = run({"compute", "--shape", "0"});
    CHECK(bad.err.find("invalid partition") != std::string::npos);
}

TEST_CASE("help exits 0") {
    const Run r = run({"--help"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("verify") != std::string::npos);
}

TEST_CASE("verify single suites") {
    const Run t0 = run({"verify", "--suite", "t0coeff", "--max-n", "4"});
    CHECK(t0.code == cli::kOk);
    CHECK(t0.out.find("PASS") != std::string::npos);
    CHECK(run({"verify", "--suite", "variant-agreement", "--max-n", "4"}).code == cli::kOk);
    CHECK(run({"verify", "--suite", "regularity", "--shape", "3,3,2", "--tableau", "hook", "--mode", "numeric"}).code ==
          cli::kOk);
}

TEST_CASE("verify all writes a report listing every suite") {
    const auto path = temp_file("report.json");
    const Run r = run({"verify", "--suite", "all", "--max-n", "2", "--report", path.string()});
    CHECK(r.code == cli::kOk);
    const Json j = read_json(path);
    CHECK(j.at("pass") == true);
    CHECK(j.at("suites").size() == verify_suites().size());
    std::filesystem::remove(path);
}

TEST_CASE("bench") {
    const Run two = run({"bench", "--shape", "2,2"});
    CHECK(two.code == cli::kOk);
    CHECK(two.out.find("equal: true") != std::string::npos);
    CHECK(run({"bench", "--shape", "1"}).code == cli::kOk);
    const auto path = temp_file("bench.json");
    const Run big = run({"bench", "--shape", "3,3,2", "--out", path.string()});
    CHECK(big.code == cli::kOk);
    CHECK(big.out.find("skipped") != std::string::npos);
    const Json j = read_json(path);
    CHECK(j.at("equal").is_null());
    CHECK(j.at("rows")[0].at("best_s").is_null());
    CHECK(j.at("rows")[1].at("terms") == 28824);
    std::filesystem::remove(path);
}

TEST_CASE("list-tableaux") {
    const Run r = run({"list-tableaux", "--shape", "3,3,2"});
    REQUIRE(r.code == cli::kOk);
    const Json j = Json::parse(r.out);
    CHECK(j.at("count") == 42);
    CHECK(j.at("hook_length_count") == 42);
    CHECK(j.at("durfee") == 2);
    CHECK(j.at("frobenius").at("alpha") == std::vector<int>{2, 1});
    CHECK(j.at("frobenius").at("beta") == std::vector<int>{3, 2});
    int hooks = 0;
    for (const auto& t : j.at("tableaux")) hooks += t.at("hook").get<bool>() ? 1 : 0;
    CHECK(hooks == 1);
}

TEST_CASE("FUSIONQ_CACHE_DIR is used by compute") {
    const auto dir = temp_file("cache");
    std::filesystem::remove_all(dir);
    ::setenv("FUSIONQ_CACHE_DIR", dir.string().c_str(), 1);
    const Run a = run({"compute", "--shape", "2,2"});
    const Run b = run({"compute", "--shape", "2,2"});
    ::unsetenv("FUSIONQ_CACHE_DIR");
    CHECK(a.code == cli::kOk);
    CHECK(a.out == b.out);
    CHECK(std::distance(std::filesystem::directory_iterator(dir), std::filesystem::directory_iterator{}) == 1);
    std::filesystem::remove_all(dir);
}
