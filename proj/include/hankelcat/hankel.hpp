#pragma once

// Hankel matrices of shifted base sequences and their exact determinants
// D_{k,m}(n) = det(C_{k,i+j+m})_{i,j<n} (resp. d_{k,m}(n) for the
// central-binomial family).

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <shared_mutex>
#include <vector>

#include "hankelcat/exact.hpp"
#include "hankelcat/sequences.hpp"

namespace hankelcat {

struct HankelKey {
  SeqSpec spec;
  std::int64_t m;  // shift, may be negative
  std::int64_t n;  // order, >= 0

  friend auto operator<=>(const HankelKey&, const HankelKey&) = default;
  friend bool operator==(const HankelKey&, const HankelKey&) = default;
};

class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t order) : order_(order), data_(order * order) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t order() const { return order_; }
  Int& operator()(std::size_t i, std::size_t j) { return data_[i * order_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * order_ + j]; }

  IntMatrix transposed() const;
  void swap_rows(std::size_t a, std::size_t b);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t order_ = 0;
  std::vector<Int> data_;
};

/// n x n matrix with entry (i, j) = seq_value(spec, i + j + m).
IntMatrix hankel_matrix(const HankelKey& key, SequenceCache& seqs = SequenceCache::shared());

/// Fraction-free Bareiss elimination with first-nonzero row pivoting.
/// The empty matrix has determinant 1.
Int bareiss_det(IntMatrix m);

/// Laplace expansion along the first row. Rejects order > 8.
Int cofactor_det_oracle(const IntMatrix& m);

inline constexpr std::size_t kCofactorMaxOrder = 8;

enum class Provenance { Computed, Loaded };

/// Cache of exact determinants keyed by HankelKey. Concurrent readers,
/// serialized inserts. Order-0 entries are always 1.
class DetTable {
 public:
  struct Entry {
    HankelKey key;
    Int value;
    Provenance provenance;
  };

  explicit DetTable(SequenceCache& seqs = SequenceCache::shared()) : seqs_(&seqs) {}

  DetTable(const DetTable&) = delete;
  DetTable& operator=(const DetTable&) = delete;

  Int value(const HankelKey& key);

  /// D(0), ..., D(count-1); distinct orders are evaluated on up to `jobs`
  /// threads (0 = hardware concurrency).
  std::vector<Int> sequence(const SeqSpec& spec, std::int64_t m, std::int64_t count,
                            unsigned jobs = 0);

  /// Evaluates every key, in parallel, and returns values in input order.
  std::vector<Int> values(const std::vector<HankelKey>& keys, unsigned jobs = 0);

  std::optional<Int> lookup(const HankelKey& key) const;

  /// Inserts a value read from persistent storage. Returns false if the key is
  /// already present (the stored value wins).
  bool insert_loaded(const HankelKey& key, const Int& value);

  std::vector<Entry> snapshot() const;

  /// Computed entries not yet handed out by this call; marks them persisted.
  std::vector<Entry> take_unpersisted();

  std::size_t size() const;
  SequenceCache& sequences() const { return *seqs_; }

  static DetTable& shared();

 private:
  struct Record {
    Int value;
    Provenance provenance;
    bool persisted;
  };

  Int compute(const HankelKey& key) const;

  SequenceCache* seqs_;
  mutable std::shared_mutex mutex_;
  std::map<HankelKey, Record> entries_;
};

/// Through DetTable::shared().
Int det_value(const HankelKey& key);
std::vector<Int> det_sequence(const SeqSpec& spec, std::int64_t m, std::int64_t count,
                              unsigned jobs = 0);

/// Runs body(i) for i in [0, count) on up to `jobs` threads (0 = hardware).
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& body);

}  // namespace hankelcat
