#pragma once

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "sfs/full_path.hpp"
#include "sfs/json_io.hpp"
#include "sfs/star_graph.hpp"

// On-disk cache of full-path bases, keyed by the canonical graph text.
// Entries that fail to parse, replay, or match versions are recomputed and
// overwritten; a cache must never change a result, only skip work.

namespace sfs {

inline uint64_t fnv1a64(const std::string& text) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

// Cache directory from the CLI flag, else the environment, else disabled.
inline std::string cache_directory(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  const char* env = std::getenv("SFS_CACHE_DIR");
  return env ? std::string(env) : std::string();
}

inline std::string cache_entry_path(const std::string& dir, const StarGraph& g) {
  std::ostringstream name;
  name << std::hex << fnv1a64(graph_to_text(g));
  return (std::filesystem::path(dir) / (name.str() + ".json")).string();
}

inline std::optional<HFBasis> cache_load(const std::string& dir, const StarGraph& g) {
  if (dir.empty()) return std::nullopt;
  std::ifstream in(cache_entry_path(dir, g));
  if (!in) return std::nullopt;
  try {
    Json j = Json::parse(in);
    return basis_from_cache_json(g, j);
  } catch (const std::exception&) {
    return std::nullopt;  // stale or foreign entry; fall through to recompute
  }
}

inline void cache_store(const std::string& dir, const HFBasis& basis) {
  if (dir.empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) return;  // a read-only cache location disables caching silently
  std::ofstream out(cache_entry_path(dir, basis.graph));
  if (!out) return;
  out << basis_cache_json(basis).dump(1) << "\n";
}

inline HFBasis hf_basis_cached(const StarGraph& g, const std::string& dir) {
  if (auto hit = cache_load(dir, g)) return std::move(*hit);
  HFBasis basis = hf_basis(g);
  cache_store(dir, basis);
  return basis;
}

}  // namespace sfs
