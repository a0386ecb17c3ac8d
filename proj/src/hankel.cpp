#include "hankelcat/hankel.hpp"

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace hankelcat {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : order_(rows.size()), data_(rows.size() * rows.size()) {
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != order_) throw std::invalid_argument("IntMatrix: matrix must be square");
    std::size_t j = 0;
    for (long v : row) (*this)(i, j++) = v;
    ++i;
  }
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(order_);
  for (std::size_t i = 0; i < order_; ++i)
    for (std::size_t j = 0; j < order_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < order_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

IntMatrix hankel_matrix(const HankelKey& key, SequenceCache& seqs) {
  if (key.n < 0) throw std::invalid_argument("hankel_matrix: order must be >= 0");
  const auto n = static_cast<std::size_t>(key.n);
  IntMatrix h(n);
  if (n == 0) return h;
  auto window = seqs.window(key.spec, key.m, 2 * key.n - 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h(i, j) = window[i + j];
  return h;
}

Int bareiss_det(IntMatrix a) {
  const std::size_t n = a.order();
  if (n == 0) return 1;
  int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Sylvester's identity makes the division exact.
        a(i, j) = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a(k, k);
  }
  Int det = a(n - 1, n - 1);
  if (sign < 0) det = -det;
  return det;
}

namespace {

Int laplace(const IntMatrix& m, std::vector<std::size_t>& cols, std::size_t row) {
  const std::size_t n = m.order();
  if (row == n) return 1;
  Int acc = 0;
  int sign = 1;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    std::size_t col = cols[c];
    if (m(row, col) != 0) {
      cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(c));
      Int minor = laplace(m, cols, row + 1);
      cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(c), col);
      if (sign > 0)
        acc += m(row, col) * minor;
      else
        acc -= m(row, col) * minor;
    }
    sign = -sign;
  }
  return acc;
}

}  // namespace

Int cofactor_det_oracle(const IntMatrix& m) {
  if (m.order() > kCofactorMaxOrder) {
    throw std::invalid_argument("cofactor_det_oracle: order exceeds 8");
  }
  std::vector<std::size_t> cols(m.order());
  for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
  return laplace(m, cols, 0);
}

void parallel_for(std::size_t count, unsigned jobs,
                  const std::function<void(std::size_t)>& body) {
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, count));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::jthread> workers;
  workers.reserve(jobs);
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  workers.clear();
  if (failure) std::rethrow_exception(failure);
}

Int DetTable::compute(const HankelKey& key) const {
  if (key.n == 0) return 1;
  return bareiss_det(hankel_matrix(key, *seqs_));
}

Int DetTable::value(const HankelKey& key) {
  if (key.n < 0) throw std::invalid_argument("determinant order must be >= 0");
  if (auto hit = lookup(key)) return *hit;
  Int v = compute(key);
  std::unique_lock lock(mutex_);
  auto [it, inserted] = entries_.try_emplace(key, Record{v, Provenance::Computed, false});
  return it->second.value;
}

std::vector<Int> DetTable::values(const std::vector<HankelKey>& keys, unsigned jobs) {
  std::vector<Int> out(keys.size());
  parallel_for(keys.size(), jobs, [&](std::size_t i) { out[i] = value(keys[i]); });
  return out;
}

std::vector<Int> DetTable::sequence(const SeqSpec& spec, std::int64_t m, std::int64_t count,
                                    unsigned jobs) {
  if (count < 0) throw std::invalid_argument("sequence length must be >= 0");
  std::vector<HankelKey> keys;
  keys.reserve(static_cast<std::size_t>(count));
  // Largest orders first so the long determinants start early.
  for (std::int64_t n = count - 1; n >= 0; --n) keys.push_back({spec, m, n});
  auto vals = values(keys, jobs);
  return {vals.rbegin(), vals.rend()};
}

std::optional<Int> DetTable::lookup(const HankelKey& key) const {
  if (key.n == 0) return Int(1);
  std::shared_lock lock(mutex_);
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second.value;
}

bool DetTable::insert_loaded(const HankelKey& key, const Int& value) {
  std::unique_lock lock(mutex_);
  return entries_.try_emplace(key, Record{value, Provenance::Loaded, true}).second;
}

std::vector<DetTable::Entry> DetTable::snapshot() const {
  std::shared_lock lock(mutex_);
  std::vector<Entry> out;
  out.reserve(entries_.size());
  for (const auto& [key, rec] : entries_) out.push_back({key, rec.value, rec.provenance});
  return out;
}

std::vector<DetTable::Entry> DetTable::take_unpersisted() {
  std::unique_lock lock(mutex_);
  std::vector<Entry> out;
  for (auto& [key, rec] : entries_) {
    if (rec.persisted) continue;
    rec.persisted = true;
    out.push_back({key, rec.value, rec.provenance});
  }
  return out;
}

std::size_t DetTable::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

DetTable& DetTable::shared() {
  static DetTable table;
  return table;
}

Int det_value(const HankelKey& key) { return DetTable::shared().value(key); }

std::vector<Int> det_sequence(const SeqSpec& spec, std::int64_t m, std::int64_t count,
                              unsigned jobs) {
  return DetTable::shared().sequence(spec, m, count, jobs);
}

}  // namespace hankelcat
