#pragma once

// Binary table cache.
//
// File layout (little endian): magic "G3TB", version u16, N u64, then the
// smallest-prime-factor table as a u32 array of length N+1. Everything else
// (Lambda, mu, phi, prime powers) is recomputed from spf on load.
//
// Cache directory comes from GOLDBACH3_CACHE_DIR, default "./.g3cache".

#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "goldbach3/arith.hpp"
#include "goldbach3/common.hpp"

namespace goldbach3 {

inline constexpr char kCacheMagic[4] = {'G', '3', 'T', 'B'};
inline constexpr std::uint16_t kCacheVersion = 1;

inline std::filesystem::path default_cache_dir() {
  if (const char* env = std::getenv("GOLDBACH3_CACHE_DIR"); env && *env)
    return std::filesystem::path(env);
  return std::filesystem::path(".g3cache");
}

inline std::filesystem::path cache_file_for(std::uint64_t N,
                                            const std::filesystem::path& dir) {
  return dir / ("mangoldt_" + std::to_string(N) + ".g3tb");
}

inline void save_table_cache(const MangoldtTable& table,
                             const std::filesystem::path& file) {
  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  if (!out) throw error("cache: cannot open " + file.string() + " for writing");
  out.write(kCacheMagic, 4);
  const std::uint16_t version = kCacheVersion;
  out.write(reinterpret_cast<const char*>(&version), sizeof version);
  const std::uint64_t n = table.limit();
  out.write(reinterpret_cast<const char*>(&n), sizeof n);
  const auto& spf = table.spf_raw();
  out.write(reinterpret_cast<const char*>(spf.data()),
            static_cast<std::streamsize>(spf.size() * sizeof(std::uint32_t)));
  if (!out) throw error("cache: short write to " + file.string());
}

inline MangoldtTable load_table_cache(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw error("cache: cannot open " + file.string());
  char magic[4];
  in.read(magic, 4);
  if (!in || std::memcmp(magic, kCacheMagic, 4) != 0)
    throw error("cache: bad magic in " + file.string());
  std::uint16_t version = 0;
  in.read(reinterpret_cast<char*>(&version), sizeof version);
  if (!in || version != kCacheVersion)
    throw error("cache: unsupported version in " + file.string());
  std::uint64_t n = 0;
  in.read(reinterpret_cast<char*>(&n), sizeof n);
  if (!in || n < 2) throw error("cache: bad table size in " + file.string());
  std::vector<std::uint32_t> spf(n + 1);
  in.read(reinterpret_cast<char*>(spf.data()),
          static_cast<std::streamsize>(spf.size() * sizeof(std::uint32_t)));
  if (!in) throw error("cache: truncated spf array in " + file.string());
  return MangoldtTable::from_spf(std::move(spf));
}

// Load a table covering N from the cache, or build and persist one.
// Persisting failures are non-fatal: the freshly built table is returned.
inline MangoldtTable cached_tables(
    std::uint64_t N, std::optional<std::filesystem::path> dir = std::nullopt,
    std::uint64_t ceiling = kDefaultTableCeiling) {
  const std::filesystem::path d = dir.value_or(default_cache_dir());
  if (N < 2) N = 2;
  if (N > ceiling)
    throw capacity_error("cached_tables: N=" + std::to_string(N) +
                         " exceeds table ceiling " + std::to_string(ceiling));
  std::error_code ec;
  // Exact hit first, then any cached table at least as large.
  const auto exact = cache_file_for(N, d);
  if (std::filesystem::exists(exact, ec)) {
    try {
      return load_table_cache(exact);
    } catch (const error&) {
      // fall through to rebuild
    }
  }
  std::uint64_t best = 0;
  if (std::filesystem::is_directory(d, ec)) {
    for (const auto& entry : std::filesystem::directory_iterator(d, ec)) {
      const std::string name = entry.path().filename().string();
      if (name.rfind("mangoldt_", 0) != 0) continue;
      const auto dot = name.find(".g3tb");
      if (dot == std::string::npos) continue;
      try {
        const std::uint64_t m = std::stoull(name.substr(9, dot - 9));
        if (m >= N && (best == 0 || m < best)) best = m;
      } catch (...) {
        continue;
      }
    }
  }
  if (best != 0) {
    try {
      return load_table_cache(cache_file_for(best, d));
    } catch (const error&) {
      // fall through to rebuild
    }
  }
  MangoldtTable table = build_tables(N, ceiling);
  std::filesystem::create_directories(d, ec);
  try {
    save_table_cache(table, exact);
  } catch (const error&) {
    // cache is best-effort
  }
  return table;
}

}  // namespace goldbach3
