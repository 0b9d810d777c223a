#pragma once

// JSON forms of elements and fusion results, and the on-disk result cache.

#include <filesystem>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "fusionq/fusion.hpp"

namespace fusionq {

using Json = nlohmann::json;

/// {"n", "terms": [{"perm", "coeff": {"num", "den"}}]}, terms in
/// lexicographic permutation order.
Json element_to_json(const ElementQ& x);
ElementQ element_from_json(const Json& j);

/// The element schema plus "shape", "tableau", "variant", "kind", "mode",
/// "q0" (null when symbolic) and "direction".
Json result_to_json(const FusionResult& r);
FusionResult result_from_json(const Json& j);

/// Sorted keys, two-space indent, trailing newline.
std::string dump_json(const Json& j);

/// Canonical text of the cache key of a computation.
std::string cache_key(const FusionSpec& spec, Kind kind, const EvalMode& mode);

/// 64-bit FNV-1a.
std::uint64_t fnv1a64(const std::string& s);

/// One JSON file per key, named by the key hash. Writes go through a
/// temporary file and a rename, so readers see either nothing or a
/// complete entry.
class ResultCache {
public:
    explicit ResultCache(std::filesystem::path dir);

    /// The directory named by FUSIONQ_CACHE_DIR, if set and non-empty.
    static std::optional<ResultCache> from_env();

    const std::filesystem::path& dir() const { return dir_; }
    std::filesystem::path path_for(const std::string& key) const;

    std::optional<FusionResult> load(const FusionSpec& spec, Kind kind, const EvalMode& mode) const;
    void store(const FusionResult& r) const;

private:
    std::filesystem::path dir_;
};

/// evaluate_F / evaluate_G, consulting and filling the cache when given.
FusionResult compute(const FusionSpec& spec, Kind kind, const EvalMode& mode, const ResultCache* cache = nullptr);

}  // namespace fusionq
