#pragma once

// Append-only determinant cache file. One record per line:
//   family<TAB>k<TAB>m<TAB>n<TAB>value
// with family "catalan" or "binomial" and all numbers in decimal.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hankelcat/hankel.hpp"

namespace hankelcat {

struct CacheRecord {
  HankelKey key;
  Int value;
};

std::string format_record(const HankelKey& key, const Int& value);

/// Absent for malformed lines.
std::optional<CacheRecord> parse_record(const std::string& line);

struct CacheReadResult {
  std::vector<CacheRecord> records;
  std::vector<std::string> warnings;  // one per skipped line
};

/// A missing file reads as empty.
CacheReadResult read_cache(const std::string& path);

struct CacheLoadResult {
  std::size_t loaded = 0;
  std::size_t already_present = 0;
  std::vector<std::string> warnings;
};

/// Inserts every well-formed record into the table. A record that conflicts
/// with a value already in the table produces a warning.
CacheLoadResult load_cache(const std::string& path, DetTable& table);

/// Appends the table's unpersisted computed entries; returns how many.
std::size_t store_cache(const std::string& path, DetTable& table);

struct CacheDivergence {
  HankelKey key;
  Int stored;
  Int recomputed;
};

struct CacheVerifyResult {
  std::size_t records = 0;
  std::size_t sampled = 0;
  std::vector<CacheDivergence> divergences;
  std::vector<std::string> warnings;
};

/// Recomputes ceil(fraction * records) records (at least one when the file
/// is nonempty), chosen with a seeded generator, directly from the Hankel
/// matrices.
CacheVerifyResult verify_cache(const std::string& path, double fraction = 0.01,
                               std::uint64_t seed = 1, unsigned jobs = 0);

}  // namespace hankelcat
