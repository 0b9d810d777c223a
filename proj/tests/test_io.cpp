#include <doctest.h>

#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "fusionq/io.hpp"

using namespace fusionq;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("fusionq-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter()++));
        std::filesystem::remove_all(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    static int& counter() {
        static int c = 0;
        return c;
    }
};

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("element json round trip") {
    const ElementQ f = evaluate_F({hook_tableau(P({2, 1})), Grouping::hook, {}}).element;
    const Json j = element_to_json(f);
    CHECK(j.at("n") == 3);
    CHECK(j.at("terms").size() == 6);
    CHECK(j.at("terms")[0].at("perm") == std::vector<int>{1, 2, 3});
    CHECK(element_from_json(j) == f);
    CHECK(dump_json(element_to_json(element_from_json(j))) == dump_json(j));
}

TEST_CASE("result json round trip is byte identical") {
    for (const auto& t : standard_tableaux(P({3, 1}))) {
        for (Kind k : {Kind::F, Kind::G}) {
            const FusionResult r = compute({t, Grouping::row, {}}, k, EvalMode::symbolic());
            const std::string a = dump_json(result_to_json(r));
            const FusionResult back = result_from_json(Json::parse(a));
            CHECK(back.element == r.element);
            CHECK(back.kind == k);
            CHECK(back.spec.tableau == t);
            CHECK(dump_json(result_to_json(back)) == a);
        }
    }
    const BigRational q0(mpz_class(-77), mpz_class(15));
    const FusionResult r = compute({hook_tableau(P({2, 2})), Grouping::hook, {2, 5}}, Kind::F, EvalMode::at(q0));
    const Json j = result_to_json(r);
    CHECK(j.at("mode") == "numeric");
    CHECK(j.at("q0") == "-77/15");
    CHECK(j.at("direction") == std::vector<int>{2, 5});
    const FusionResult back = result_from_json(j);
    CHECK(back.mode.numeric);
    CHECK(back.mode.q0 == q0);
    CHECK(back.spec.direction == std::vector<int>{2, 5});
}

TEST_CASE("dump_json sorts keys and ends with a newline") {
    const std::string s = dump_json(Json{{"zeta", 1}, {"alpha", "\xce\xbb"}});
    CHECK(s.back() == '\n');
    CHECK(s.find("alpha") < s.find("zeta"));
    CHECK(s.find("\xce\xbb") != std::string::npos);
}

TEST_CASE("cache keys") {
    const FusionSpec a{hook_tableau(P({2, 1})), Grouping::hook, {}};
    const FusionSpec b{hook_tableau(P({2, 1})), Grouping::row, {}};
    CHECK(cache_key(a, Kind::F, EvalMode::symbolic()) != cache_key(b, Kind::F, EvalMode::symbolic()));
    CHECK(cache_key(a, Kind::F, EvalMode::symbolic()) != cache_key(a, Kind::G, EvalMode::symbolic()));
    CHECK(cache_key(a, Kind::F, EvalMode::at(BigRational(2))) != cache_key(a, Kind::F, EvalMode::at(BigRational(3))));
    CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
}

TEST_CASE("cache returns what was stored") {
    TempDir dir;
    const ResultCache cache(dir.path);
    int keys = 0;
    for (int n = 1; n <= 4 && keys < 10; ++n)
        for (const auto& p : partitions_of(n))
            for (const auto& t : standard_tableaux(p)) {
                if (keys == 10) break;
                const FusionSpec spec{t, Grouping::hook, {}};
                CHECK_FALSE(cache.load(spec, Kind::F, EvalMode::symbolic()).has_value());
                const FusionResult r = compute(spec, Kind::F, EvalMode::symbolic(), &cache);
                const auto hit = cache.load(spec, Kind::F, EvalMode::symbolic());
                REQUIRE(hit.has_value());
                CHECK(hit->element == r.element);
                CHECK(compute(spec, Kind::F, EvalMode::symbolic(), &cache).element == r.element);
                ++keys;
            }
    CHECK(keys == 10);
    std::size_t files = 0;
    for (const auto& e : std::filesystem::directory_iterator(dir.path)) {
        CHECK(e.path().extension() == ".json");
        CHECK(e.path().string().find(".tmp.") == std::string::npos);
        ++files;
    }
    CHECK(files == 10);
}

TEST_CASE("cache entry under another key is ignored") {
    TempDir dir;
    const ResultCache cache(dir.path);
    const FusionSpec a{hook_tableau(P({2, 1})), Grouping::hook, {}};
    const FusionSpec b{hook_tableau(P({1, 1})), Grouping::hook, {}};
    cache.store(compute(a, Kind::F, EvalMode::symbolic()));
    const auto src = cache.path_for(cache_key(a, Kind::F, EvalMode::symbolic()));
    const auto dst = cache.path_for(cache_key(b, Kind::F, EvalMode::symbolic()));
    std::filesystem::copy_file(src, dst);
    CHECK_FALSE(cache.load(b, Kind::F, EvalMode::symbolic()).has_value());
    std::ofstream(dst) << "{ truncated";
    CHECK_FALSE(cache.load(b, Kind::F, EvalMode::symbolic()).has_value());
}

TEST_CASE("stored entries are complete json") {
    TempDir dir;
    const ResultCache cache(dir.path);
    const FusionSpec a{hook_tableau(P({2, 2})), Grouping::hook, {}};
    cache.store(compute(a, Kind::G, EvalMode::symbolic()));
    const std::string text = slurp(cache.path_for(cache_key(a, Kind::G, EvalMode::symbolic())));
    CHECK(text.back() == '\n');
    const Json j = Json::parse(text);
    CHECK(j.at("key") == cache_key(a, Kind::G, EvalMode::symbolic()));
    CHECK(j.contains("created"));
    CHECK(j.at("result").at("kind") == "G");
}

TEST_CASE("FUSIONQ_CACHE_DIR") {
    ::unsetenv("FUSIONQ_CACHE_DIR");
    CHECK_FALSE(ResultCache::from_env().has_value());
    ::setenv("FUSIONQ_CACHE_DIR", "", 1);
    CHECK_FALSE(ResultCache::from_env().has_value());
    ::setenv("FUSIONQ_CACHE_DIR", "/tmp/fusionq-cache-x", 1);
    const auto c = ResultCache::from_env();
    REQUIRE(c.has_value());
    CHECK(c->dir() == std::filesystem::path("/tmp/fusionq-cache-x"));
    ::unsetenv("FUSIONQ_CACHE_DIR");
}
