#include "hankelcat/rat_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hankelcat {

RatPoly::RatPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

RatPoly::RatPoly(std::initializer_list<long> int_coeffs) {
  coeffs_.reserve(int_coeffs.size());
  for (long c : int_coeffs) coeffs_.emplace_back(c);
  normalize();
}

RatPoly RatPoly::constant(const Rat& c) { return RatPoly(std::vector<Rat>{c}); }

RatPoly RatPoly::monomial(const Rat& c, std::size_t power) {
  std::vector<Rat> v(power + 1);
  v[power] = c;
  return RatPoly(std::move(v));
}

RatPoly RatPoly::from_ints(const std::vector<Int>& coeffs) {
  std::vector<Rat> v;
  v.reserve(coeffs.size());
  for (const auto& c : coeffs) v.emplace_back(c);
  return RatPoly(std::move(v));
}

void RatPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat RatPoly::evaluate(const Rat& x) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatPoly RatPoly::reversed() const {
  std::vector<Rat> v(coeffs_.rbegin(), coeffs_.rend());
  return RatPoly(std::move(v));
}

RatPoly RatPoly::pow(std::int64_t exponent) const {
  if (exponent < 0) throw std::invalid_argument("RatPoly::pow: negative exponent");
  RatPoly result = constant(1);
  RatPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

RatPoly RatPoly::truncated(std::size_t max_index) const {
  if (coeffs_.size() <= max_index + 1) return *this;
  return RatPoly(std::vector<Rat>(coeffs_.begin(), coeffs_.begin() + max_index + 1));
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return RatPoly();
  std::vector<Rat> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RatPoly(std::move(out));
}

RatPoly& RatPoly::operator*=(const RatPoly& o) {
  *this = *this * o;
  return *this;
}

RatPoly& RatPoly::operator*=(const Rat& c) {
  for (auto& x : coeffs_) x *= c;
  normalize();
  return *this;
}

std::string RatPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rat& c = coeffs_[i];
    if (c == 0) continue;
    Rat mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = (mag == 1);
    if (i == 0 || !unit) os << mag.get_str();
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

RatPoly x_minus(const Rat& a) { return RatPoly(std::vector<Rat>{-a, Rat(1)}); }

}  // namespace hankelcat
