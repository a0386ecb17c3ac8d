#pragma once

// Base integer families: convolution powers of the Catalan numbers
// C_{k,n} = [x^n] C(x)^k and the central-binomial family c_{k,n} =
// binom(2n+k, n). Both are zero for negative n.

#include <cstdint>
#include <map>
#include <shared_mutex>
#include <string>
#include <vector>

#include "hankelcat/exact.hpp"

namespace hankelcat {

enum class Family { CatalanConv, CentralBinomial };

std::string family_tag(Family f);  // "catalan" / "binomial"
Family parse_family(const std::string& tag);

struct SeqSpec {
  Family family;
  int k;

  /// Throws std::invalid_argument unless k >= 1.
  SeqSpec(Family family, int k);

  friend auto operator<=>(const SeqSpec&, const SeqSpec&) = default;
  friend bool operator==(const SeqSpec&, const SeqSpec&) = default;
};

inline SeqSpec catalan(int k) { return SeqSpec(Family::CatalanConv, k); }
inline SeqSpec central_binomial(int k) { return SeqSpec(Family::CentralBinomial, k); }

std::string to_string(const SeqSpec& s);

/// Closed-form value; 0 for n < 0.
Int seq_value(const SeqSpec& spec, std::int64_t n);

/// Growable prefix cache per (family, k). Readers share, growth is exclusive.
class SequenceCache {
 public:
  /// Values at 0..count-1.
  std::vector<Int> prefix(const SeqSpec& spec, std::int64_t count);

  /// Values at first..first+count-1, zero-extended below 0.
  std::vector<Int> window(const SeqSpec& spec, std::int64_t first, std::int64_t count);

  Int value(const SeqSpec& spec, std::int64_t n);

  static SequenceCache& shared();

 private:
  void ensure(const SeqSpec& spec, std::int64_t count);

  std::shared_mutex mutex_;
  std::map<SeqSpec, std::vector<Int>> prefixes_;
};

/// seq_prefix through the shared cache.
std::vector<Int> seq_prefix(const SeqSpec& spec, std::int64_t count);

/// First `count` coefficients of C(x)^k by repeated series convolution of the
/// Catalan numbers, which come from C_{n+1} = sum_i C_i C_{n-i}.
std::vector<Int> conv_power_oracle(int k, std::int64_t count);

}  // namespace hankelcat
