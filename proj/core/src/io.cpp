#include "fusionq/io.hpp"

#include <unistd.h>

#include <atomic>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <sstream>

namespace fusionq {

Json element_to_json(const ElementQ& x) {
    Json terms = Json::array();
    for (const auto& [s, c] : x.terms()) {
        terms.push_back({{"perm", s.images()}, {"coeff", {{"num", to_string(c.num())}, {"den", to_string(c.den())}}}});
    }
    return {{"n", x.n()}, {"terms", std::move(terms)}};
}

ElementQ element_from_json(const Json& j) {
    ElementQ x(j.at("n").get<int>());
    for (const auto& t : j.at("terms")) {
        const auto& c = t.at("coeff");
        x.add_term(Permutation(t.at("perm").get<std::vector<int>>()),
                   parse_rational_function(c.at("num").get<std::string>(), c.at("den").get<std::string>()));
    }
    return x;
}

Json result_to_json(const FusionResult& r) {
    Json j = element_to_json(r.element);
    j["shape"] = r.spec.tableau.shape().parts();
    j["tableau"] = r.spec.tableau.rows();
    j["variant"] = to_string(r.spec.variant);
    j["kind"] = to_string(r.kind);
    j["mode"] = r.mode.name();
    j["q0"] = r.mode.numeric ? Json(r.mode.q0.to_string()) : Json(nullptr);
    j["direction"] = r.spec.direction;
    return j;
}

FusionResult result_from_json(const Json& j) {
    FusionResult r;
    r.element = element_from_json(j);
    r.spec.tableau = StandardTableau(j.at("tableau").get<std::vector<std::vector<int>>>());
    if (r.spec.tableau.shape().parts() != j.at("shape").get<std::vector<int>>()) {
        throw std::invalid_argument("shape does not match tableau");
    }
    r.spec.variant = parse_grouping(j.at("variant").get<std::string>());
    r.spec.direction = j.value("direction", std::vector<int>{});
    r.kind = parse_kind(j.at("kind").get<std::string>());
    const std::string mode = j.at("mode").get<std::string>();
    if (mode == "numeric") {
        r.mode = EvalMode::at(BigRational::parse(j.at("q0").get<std::string>()));
    } else if (mode != "symbolic") {
        throw std::invalid_argument("unknown mode '" + mode + "'");
    }
    return r;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

std::string cache_key(const FusionSpec& spec, Kind kind, const EvalMode& mode) {
    std::ostringstream os;
    os << "shape=" << spec.tableau.shape().to_string() << ";tableau=" << spec.tableau.to_string()
       << ";variant=" << to_string(spec.variant) << ";kind=" << to_string(kind) << ";mode=" << mode.name();
    if (mode.numeric) os << ";q0=" << mode.q0.to_string();
    os << ";direction=";
    for (std::size_t i = 0; i < spec.direction.size(); ++i) os << (i ? "," : "") << spec.direction[i];
    return os.str();
}

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::optional<ResultCache> ResultCache::from_env() {
    const char* d = std::getenv("FUSIONQ_CACHE_DIR");
    if (d == nullptr || *d == '\0') return std::nullopt;
    return ResultCache(d);
}

std::filesystem::path ResultCache::path_for(const std::string& key) const {
    char name[32];
    std::snprintf(name, sizeof name, "%016llx.json", static_cast<unsigned long long>(fnv1a64(key)));
    return dir_ / name;
}

std::optional<FusionResult> ResultCache::load(const FusionSpec& spec, Kind kind, const EvalMode& mode) const {
    const std::string key = cache_key(spec, kind, mode);
    std::ifstream in(path_for(key));
    if (!in) return std::nullopt;
    Json j;
    try {
        in >> j;
    } catch (const Json::exception&) {
        return std::nullopt;
    }
    if (j.value("key", std::string()) != key) return std::nullopt;  // hash collision
    return result_from_json(j.at("result"));
}

namespace {

std::string utc_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

void ResultCache::store(const FusionResult& r) const {
    static std::atomic<unsigned> counter{0};
    const std::string key = cache_key(r.spec, r.kind, r.mode);
    const std::filesystem::path target = path_for(key);
    std::filesystem::create_directories(dir_);
    const std::filesystem::path tmp =
        target.string() + ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
    {
        std::ofstream out(tmp, std::ios::binary);
        out << dump_json({{"key", key}, {"created", utc_timestamp()}, {"result", result_to_json(r)}});
        if (!out) throw std::runtime_error("cannot write cache entry " + tmp.string());
    }
    std::filesystem::rename(tmp, target);
}

FusionResult compute(const FusionSpec& spec, Kind kind, const EvalMode& mode, const ResultCache* cache) {
    if (cache) {
        if (auto hit = cache->load(spec, kind, mode)) return *hit;
    }
    FusionResult r = kind == Kind::F ? evaluate_F(spec, mode) : evaluate_G(spec, mode);
    if (cache) cache->store(r);
    return r;
}

}  // namespace fusionq
