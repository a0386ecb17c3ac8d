#include "hankelcat/sequences.hpp"

#include <mutex>
#include <stdexcept>

namespace hankelcat {

std::string family_tag(Family f) {
  return f == Family::CatalanConv ? "catalan" : "binomial";
}

Family parse_family(const std::string& tag) {
  if (tag == "catalan" || tag == "C") return Family::CatalanConv;
  if (tag == "binomial" || tag == "B") return Family::CentralBinomial;
  throw std::invalid_argument("unknown family: " + tag);
}

SeqSpec::SeqSpec(Family family_, int k_) : family(family_), k(k_) {
  if (k < 1) throw std::invalid_argument("sequence parameter k must be >= 1");
}

std::string to_string(const SeqSpec& s) {
  return (s.family == Family::CatalanConv ? "C_" : "c_") + std::to_string(s.k);
}

Int seq_value(const SeqSpec& spec, std::int64_t n) {
  if (n < 0) return 0;
  if (spec.family == Family::CatalanConv) {
    return binomial(2 * n + spec.k - 1, n) - binomial(2 * n + spec.k - 1, n - 1);
  }
  return binomial(2 * n + spec.k, n);
}

void SequenceCache::ensure(const SeqSpec& spec, std::int64_t count) {
  {
    std::shared_lock lock(mutex_);
    auto it = prefixes_.find(spec);
    if (it != prefixes_.end() && static_cast<std::int64_t>(it->second.size()) >= count) return;
  }
  std::unique_lock lock(mutex_);
  auto& values = prefixes_[spec];
  for (auto n = static_cast<std::int64_t>(values.size()); n < count; ++n) {
    values.push_back(seq_value(spec, n));
  }
}

std::vector<Int> SequenceCache::prefix(const SeqSpec& spec, std::int64_t count) {
  return window(spec, 0, count);
}

std::vector<Int> SequenceCache::window(const SeqSpec& spec, std::int64_t first,
                                       std::int64_t count) {
  std::vector<Int> out;
  if (count <= 0) return out;
  ensure(spec, first + count);
  out.reserve(static_cast<std::size_t>(count));
  std::shared_lock lock(mutex_);
  const auto& values = prefixes_.at(spec);
  for (std::int64_t n = first; n < first + count; ++n) {
    out.push_back(n < 0 ? Int(0) : values[static_cast<std::size_t>(n)]);
  }
  return out;
}

Int SequenceCache::value(const SeqSpec& spec, std::int64_t n) {
  if (n < 0) return 0;
  return window(spec, n, 1).front();
}

SequenceCache& SequenceCache::shared() {
  static SequenceCache cache;
  return cache;
}

std::vector<Int> seq_prefix(const SeqSpec& spec, std::int64_t count) {
  return SequenceCache::shared().prefix(spec, count);
}

std::vector<Int> conv_power_oracle(int k, std::int64_t count) {
  if (k < 1) throw std::invalid_argument("conv_power_oracle: k must be >= 1");
  if (count <= 0) return {};
  const auto n = static_cast<std::size_t>(count);
  std::vector<Int> cat(n);
  cat[0] = 1;
  for (std::size_t m = 1; m < n; ++m) {
    Int acc = 0;
    for (std::size_t i = 0; i < m; ++i) acc += cat[i] * cat[m - 1 - i];
    cat[m] = acc;
  }
  std::vector<Int> power = cat;
  for (int step = 1; step < k; ++step) {
    std::vector<Int> next(n);
    for (std::size_t m = 0; m < n; ++m) {
      Int acc = 0;
      for (std::size_t i = 0; i <= m; ++i) acc += power[i] * cat[m - i];
      next[m] = acc;
    }
    power = std::move(next);
  }
  return power;
}

}  // namespace hankelcat
