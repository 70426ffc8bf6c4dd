#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "quasicell/kl.hpp"

namespace quasicell {

// Versioned JSON cache for KL tables.  Entries are keyed by (rank, schema
// version) in the file name and carry the version in the payload; a version
// bump invalidates old entries.  Serialization is canonical, so
// save(load(save(T))) is byte-identical.
inline constexpr int kCacheSchemaVersion = 1;

inline std::filesystem::path kl_cache_path(const std::filesystem::path& dir, int n) {
  return dir / ("kl_n" + std::to_string(n) + "_v" + std::to_string(kCacheSchemaVersion) + ".json");
}

inline nlohmann::ordered_json kl_to_json(const KLTable& T) {
  nlohmann::ordered_json j;
  j["v"] = kCacheSchemaVersion;
  j["rank"] = T.n;
  nlohmann::ordered_json elems = nlohmann::ordered_json::array();
  for (const Perm& p : T.elements) elems.push_back(p.window());
  j["elements"] = std::move(elems);
  nlohmann::ordered_json cols = nlohmann::ordered_json::array();
  for (int y = 0; y < T.size(); ++y) {
    nlohmann::ordered_json col = nlohmann::ordered_json::array();
    for (const auto& [x, p] : T.h[static_cast<size_t>(y)]) col.push_back({x, p.str()});
    cols.push_back(std::move(col));
  }
  j["h"] = std::move(cols);
  return j;
}

inline KLTable kl_from_json(const nlohmann::json& j) {
  if (!j.contains("v") || j["v"].get<int>() != kCacheSchemaVersion)
    throw std::runtime_error("cache entry has wrong schema version");
  KLTable T;
  T.n = j["rank"].get<int>();
  for (const auto& win : j["elements"]) T.elements.push_back(Perm::from_window(win.get<std::vector<int>>()));
  T.build_index();
  const int N = T.size();
  T.length_of.resize(static_cast<size_t>(N));
  for (int i = 0; i < N; ++i) T.length_of[static_cast<size_t>(i)] = T.elements[static_cast<size_t>(i)].length();
  T.h.resize(static_cast<size_t>(N));
  T.mu_of.resize(static_cast<size_t>(N));
  int y = 0;
  for (const auto& col : j["h"]) {
    for (const auto& entry : col) {
      const int x = entry.at(0).get<int>();
      auto p = LaurentPoly::parse(entry.at(1).get<std::string>());
      if (!p) throw std::runtime_error("cache entry has a malformed polynomial");
      const Int m = p->coeff(-1);
      if (m != 0 && x != y) T.mu_of[static_cast<size_t>(y)].emplace_back(x, m);
      T.h[static_cast<size_t>(y)].emplace_back(x, std::move(*p));
    }
    ++y;
  }
  return T;
}

inline void save_kl(const std::filesystem::path& dir, const KLTable& T) {
  std::filesystem::create_directories(dir);
  const auto path = kl_cache_path(dir, T.n);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp);
    out << kl_to_json(T).dump(1) << '\n';
  }
  std::filesystem::rename(tmp, path);
}

inline std::optional<KLTable> load_kl(const std::filesystem::path& dir, int n) {
  const auto path = kl_cache_path(dir, n);
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  nlohmann::json j;
  try {
    in >> j;
    return kl_from_json(j);
  } catch (const std::exception&) {
    return std::nullopt;  // unreadable entries are recomputed
  }
}

// Cached fetch; recomputation is bit-identical to the cache contents.
inline KLTable cached_kl(const std::filesystem::path& dir, int n, int max_rank) {
  if (auto cached = load_kl(dir, n)) {
    if (cached->n == n) return std::move(*cached);
  }
  KLTable T = compute_kl(n, max_rank);
  save_kl(dir, T);
  return T;
}

}  // namespace quasicell
