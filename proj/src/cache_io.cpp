#include "hankelcat/cache_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace hankelcat {

namespace {

bool parse_int64(const std::string& s, std::int64_t& out) {
  if (s.empty()) return false;
  try {
    std::size_t used = 0;
    out = std::stoll(s, &used);
    return used == s.size();
  } catch (const std::exception&) {
    return false;
  }
}

bool parse_decimal(const std::string& s, Int& out) {
  std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (start == s.size()) return false;
  if (!std::all_of(s.begin() + static_cast<long>(start), s.end(),
                   [](char c) { return c >= '0' && c <= '9'; })) {
    return false;
  }
  return out.set_str(s, 10) == 0;
}

}  // namespace

std::string format_record(const HankelKey& key, const Int& value) {
  return family_tag(key.spec.family) + "\t" + std::to_string(key.spec.k) + "\t" +
         std::to_string(key.m) + "\t" + std::to_string(key.n) + "\t" + to_string(value);
}

std::optional<CacheRecord> parse_record(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string f;
  while (std::getline(ss, f, '\t')) fields.push_back(f);
  if (fields.size() != 5 || line.back() == '\t') return std::nullopt;
  if (fields[0] != "catalan" && fields[0] != "binomial") return std::nullopt;
  std::int64_t k = 0, m = 0, n = 0;
  if (!parse_int64(fields[1], k) || !parse_int64(fields[2], m) || !parse_int64(fields[3], n)) {
    return std::nullopt;
  }
  if (k < 1 || k > 1'000'000 || n < 0) return std::nullopt;
  Int value;
  if (!parse_decimal(fields[4], value)) return std::nullopt;
  return CacheRecord{{SeqSpec(parse_family(fields[0]), static_cast<int>(k)), m, n}, value};
}

CacheReadResult read_cache(const std::string& path) {
  CacheReadResult out;
  std::ifstream in(path);
  if (!in) return out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (auto rec = parse_record(line)) {
      out.records.push_back(std::move(*rec));
    } else {
      out.warnings.push_back(path + ":" + std::to_string(lineno) + ": malformed record skipped");
    }
  }
  return out;
}

CacheLoadResult load_cache(const std::string& path, DetTable& table) {
  CacheLoadResult out;
  auto read = read_cache(path);
  out.warnings = std::move(read.warnings);
  for (const auto& rec : read.records) {
    if (table.insert_loaded(rec.key, rec.value)) {
      ++out.loaded;
      continue;
    }
    ++out.already_present;
    auto have = table.lookup(rec.key);
    if (have && *have != rec.value) {
      out.warnings.push_back("conflicting record for " + to_string(rec.key.spec) + " m=" +
                             std::to_string(rec.key.m) + " n=" + std::to_string(rec.key.n) +
                             " ignored");
    }
  }
  return out;
}

std::size_t store_cache(const std::string& path, DetTable& table) {
  auto entries = table.take_unpersisted();
  if (entries.empty()) return 0;
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("cannot open cache file for append: " + path);
  for (const auto& e : entries) out << format_record(e.key, e.value) << "\n";
  if (!out) throw std::runtime_error("write to cache file failed: " + path);
  return entries.size();
}

CacheVerifyResult verify_cache(const std::string& path, double fraction, std::uint64_t seed,
                               unsigned jobs) {
  if (!(fraction > 0.0) || fraction > 1.0) throw std::invalid_argument("fraction must be in (0, 1]");
  CacheVerifyResult out;
  auto read = read_cache(path);
  out.warnings = std::move(read.warnings);
  out.records = read.records.size();
  if (read.records.empty()) return out;

  auto wanted = static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(out.records)));
  wanted = std::clamp<std::size_t>(wanted, 1, out.records);
  std::vector<std::size_t> order(out.records);
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  order.resize(wanted);
  std::sort(order.begin(), order.end());
  out.sampled = wanted;

  std::vector<Int> recomputed(wanted);
  parallel_for(wanted, jobs, [&](std::size_t i) {
    recomputed[i] = bareiss_det(hankel_matrix(read.records[order[i]].key));
  });
  for (std::size_t i = 0; i < wanted; ++i) {
    const auto& rec = read.records[order[i]];
    if (rec.value != recomputed[i]) out.divergences.push_back({rec.key, rec.value, recomputed[i]});
  }
  return out;
}

}  // namespace hankelcat
