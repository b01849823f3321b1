// On-disk cache of computed genus polynomials: one file per (genus, weight),
// digest-validated, written atomically.
#pragma once

#include <unistd.h>

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "genuslab/genus.hpp"
#include "genuslab/serialize.hpp"

namespace genuslab {

inline constexpr int kCacheSchemaVersion = 1;

inline std::string fnv1a64_hex(const std::string& data) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

/// GENUSLAB_CACHE_DIR, else the platform user cache directory, else a
/// temp-directory fallback.
inline std::filesystem::path cache_dir() {
    if (const char* env = std::getenv("GENUSLAB_CACHE_DIR"); env && *env)
        return std::filesystem::path(env);
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
        return std::filesystem::path(xdg) / "genuslab";
    if (const char* home = std::getenv("HOME"); home && *home)
        return std::filesystem::path(home) / ".cache" / "genuslab";
    return std::filesystem::temp_directory_path() / "genuslab-cache";
}

inline std::string cache_file_name(Genus genus, unsigned weight) {
    return std::string(genus == Genus::L ? "L" : "Ahat") + "_w" +
           std::to_string(weight) + ".json";
}

inline std::filesystem::path cache_path(Genus genus, unsigned weight) {
    return cache_dir() / cache_file_name(genus, weight);
}

/// Load and validate one cache entry. Any structural problem, schema or
/// digest mismatch yields nullopt; the caller recomputes and rewrites.
inline std::optional<GradedPolynomial> cache_load(Genus genus, unsigned weight) {
    const std::filesystem::path path = cache_path(genus, weight);
    std::ifstream in(path);
    if (!in) return std::nullopt;
    Json entry;
    try {
        in >> entry;
        if (entry.at("schema_version").get<int>() != kCacheSchemaVersion) return std::nullopt;
        if (entry.at("genus").get<std::string>() != to_string(genus)) return std::nullopt;
        if (entry.at("weight").get<unsigned>() != weight) return std::nullopt;
        const Json& terms = entry.at("terms");
        if (entry.at("content_digest").get<std::string>() != fnv1a64_hex(terms.dump()))
            return std::nullopt;
        GradedPolynomial poly(weight);
        for (const Json& t : terms) {
            std::vector<unsigned> parts;
            for (const Json& p : t.at("partition")) parts.push_back(p.get<unsigned>());
            poly.add_term(Partition(parts),
                          ExactRational::from_decimal_strings(
                              t.at("numerator").get<std::string>(),
                              t.at("denominator").get<std::string>()));
        }
        if (poly.is_zero() || !poly.is_homogeneous(weight)) return std::nullopt;
        return poly;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

/// Write one cache entry atomically (temp file + rename).
inline void cache_store(Genus genus, unsigned weight, const GradedPolynomial& poly) {
    const std::filesystem::path dir = cache_dir();
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) return;  // cache is best-effort
    const Json terms = polynomial_terms(poly);
    Json entry;
    entry["schema_version"] = kCacheSchemaVersion;
    entry["genus"] = to_string(genus);
    entry["weight"] = weight;
    entry["terms"] = terms;
    entry["content_digest"] = fnv1a64_hex(terms.dump());
    const std::filesystem::path final_path = dir / cache_file_name(genus, weight);
    const std::filesystem::path tmp_path =
        final_path.string() + ".tmp" + std::to_string(::getpid());
    {
        std::ofstream out(tmp_path);
        if (!out) return;
        out << entry.dump(2) << '\n';
    }
    std::filesystem::rename(tmp_path, final_path, ec);
    if (ec) std::filesystem::remove(tmp_path, ec);
}

struct CacheEntryInfo {
    std::string file;
    std::string genus;
    unsigned weight = 0;
    bool valid = false;
};

/// Inventory of the cache directory; validity means the entry loads and
/// passes schema + digest + shape checks.
inline std::vector<CacheEntryInfo> cache_info() {
    std::vector<CacheEntryInfo> out;
    const std::filesystem::path dir = cache_dir();
    std::error_code ec;
    if (!std::filesystem::exists(dir, ec)) return out;
    for (Genus genus : {Genus::L, Genus::AHat}) {
        for (unsigned w = 1; w <= 512; ++w) {
            const std::filesystem::path p = dir / cache_file_name(genus, w);
            if (!std::filesystem::exists(p, ec)) continue;
            CacheEntryInfo info;
            info.file = cache_file_name(genus, w);
            info.genus = to_string(genus);
            info.weight = w;
            info.valid = cache_load(genus, w).has_value();
            out.push_back(info);
        }
    }
    return out;
}

/// Remove all cache entries this tool owns. Returns the number removed.
inline std::size_t cache_clear() {
    std::size_t removed = 0;
    std::error_code ec;
    const std::filesystem::path dir = cache_dir();
    if (!std::filesystem::exists(dir, ec)) return removed;
    for (Genus genus : {Genus::L, Genus::AHat}) {
        for (unsigned w = 1; w <= 512; ++w) {
            const std::filesystem::path p = dir / cache_file_name(genus, w);
            if (std::filesystem::remove(p, ec)) ++removed;
        }
    }
    return removed;
}

}  // namespace genuslab
