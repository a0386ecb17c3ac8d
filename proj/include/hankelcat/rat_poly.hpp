#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "hankelcat/exact.hpp"

namespace hankelcat {

/// Dense univariate polynomial over Q, coefficients stored low to high.
/// The highest stored coefficient is nonzero; the zero polynomial is empty.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> coeffs);
  RatPoly(std::initializer_list<long> int_coeffs);

  static RatPoly constant(const Rat& c);
  static RatPoly monomial(const Rat& c, std::size_t power);
  static RatPoly from_ints(const std::vector<Int>& coeffs);

  const std::vector<Rat>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rat lead() const { return is_zero() ? Rat(0) : coeffs_.back(); }
  Rat coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rat(0); }

  Rat evaluate(const Rat& x) const;

  /// x^d p(1/x) for d = degree(); the zero polynomial maps to itself.
  RatPoly reversed() const;

  RatPoly pow(std::int64_t exponent) const;

  /// Drops every coefficient of index > max_index.
  RatPoly truncated(std::size_t max_index) const;

  RatPoly& operator+=(const RatPoly& o);
  RatPoly& operator-=(const RatPoly& o);
  RatPoly& operator*=(const RatPoly& o);
  RatPoly& operator*=(const Rat& c);

  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(RatPoly a, const Rat& c) { return a *= c; }
  friend RatPoly operator-(RatPoly a) { return a *= Rat(-1); }
  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Human readable form in the variable `var`, e.g. "1 + 7*x + x^3".
  std::string to_string(const std::string& var = "x") const;

 private:
  void normalize();
  std::vector<Rat> coeffs_;
};

/// The linear polynomial x - a.
RatPoly x_minus(const Rat& a);

}  // namespace hankelcat
