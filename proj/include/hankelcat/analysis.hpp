#pragma once

// Analytic machinery over determinant tables: translation relations,
// the product formula p_m(n), polynomial fits of residue-class
// subsequences, and generating-function numerator extraction.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hankelcat/exact.hpp"
#include "hankelcat/hankel.hpp"
#include "hankelcat/rat_poly.hpp"
#include "hankelcat/sequences.hpp"

namespace hankelcat {

enum class Parity { Even, Odd };

std::string to_string(Parity p);
Parity parse_parity(const std::string& text);

// ---------------------------------------------------------------------------
// Translation T_r

/// Left sequence L equals (1, 0, ..., 0, sign*R(0), sign*R(1), ...) with the
/// leading block of length r: L(0) = 1, L(i) = 0 for 0 < i < r and
/// L(r + i) = sign * R(i).
struct TranslationClaim {
  SeqSpec left_spec;
  std::int64_t left_m;
  SeqSpec right_spec;
  std::int64_t right_m;
  std::int64_t r;
  int sign;
};

struct TranslationFailure {
  std::int64_t index;
  Int lhs;
  Int rhs;
};

struct TranslationResult {
  std::int64_t holds_through;
  std::optional<TranslationFailure> first_failure;
};

/// Requires N >= claim.r >= 1 and sign = +-1.
TranslationResult check_translation(DetTable& table, const TranslationClaim& claim,
                                    std::int64_t N, unsigned jobs = 0);

// ---------------------------------------------------------------------------
// Product formula

/// p_m(n) = prod_{1 <= i <= j <= m-1} (2n + i + j) / (i + j).
Rat product_formula_pm(std::int64_t m, std::int64_t n);

// ---------------------------------------------------------------------------
// Residue-class polynomial fits

/// Samples v(n) = (-1)^{n * sign_exponent} * Det(modulus * n + residue) for
/// n = 0..max_n.
struct PolyFitSpec {
  SeqSpec spec;
  std::int64_t m;
  std::int64_t modulus;
  std::int64_t residue;
  std::int64_t sign_exponent;
  std::int64_t max_n;

  std::int64_t max_order() const { return modulus * max_n + residue; }
};

/// Extra samples beyond degree + 1 that a fit has to explain.
inline constexpr int kFitGuard = 3;

struct FitResult {
  std::optional<RatPoly> poly;  // absent when no degree passes the guard
  bool guard_ok = false;
  std::vector<Rat> samples;

  /// Only meaningful when poly is present.
  int degree() const { return poly ? poly->degree() : -2; }
  Rat lead() const { return poly ? poly->lead() : Rat(0); }
};

/// Least-degree polynomial explaining every sample, with at least kFitGuard
/// samples beyond degree + 1.
FitResult fit_samples(std::vector<Rat> samples);

/// Residue-class fit; insufficient samples give guard_ok = false.
FitResult fit_subsequence_poly(DetTable& table, const PolyFitSpec& fit, unsigned jobs = 0);

/// Samples needed to certify a polynomial of the given degree.
inline std::int64_t fit_samples_for_degree(int degree) {
  return std::max(degree, 0) + 1 + kFitGuard;
}

// ---------------------------------------------------------------------------
// Generating-function numerators

/// Trailing zero coefficients required for a clean remainder.
inline constexpr std::int64_t kGfGuard = 8;

struct GFExtraction {
  Parity parity;
  int k;
  std::int64_t m;
  RatPoly factor;
  std::int64_t exponent;
  std::int64_t truncation;
  RatPoly numerator;          // product truncated at `truncation`
  std::int64_t zero_tail;     // truncation - degree
  bool remainder_clean;       // zero_tail >= kGfGuard
  int degree;
  std::optional<PalClass> pal_class;
};

/// Base sequence: C_{2k} for the even family, C_{2k-1} for the odd one.
SeqSpec gf_sequence(Parity parity, int k);

/// 1 - (-1)^{binom(k,2)} x^k (even) or 1 + (-1)^k x^{2k-1} (odd).
RatPoly gf_factor(Parity parity, int k);

/// Degree of gf_factor.
std::int64_t gf_modulus(Parity parity, int k);

/// binom(k+m, 2) + 1.
std::int64_t gf_exponent(int k, std::int64_t m);

/// pi_{k+2}(m+k-1) (even) or pi_{2k+1}(m+k-1) + k (odd). Requires m >= 1-k.
std::int64_t gf_expected_degree(Parity parity, int k, std::int64_t m);

/// expected degree + modulus * (exponent + 1) + kGfGuard.
std::int64_t gf_default_truncation(Parity parity, int k, std::int64_t m);

/// Multiplies the truncated determinant series by factor^exponent.
GFExtraction extract_gf(DetTable& table, Parity parity, int k, std::int64_t m,
                        std::optional<std::int64_t> truncation = std::nullopt,
                        unsigned jobs = 0);

/// Palindromicity asserted by the case rules; absent where no class is
/// stated. Requires k >= 1 and m >= 1-k.
std::optional<PalClass> expected_pal_class(Parity parity, int k, std::int64_t m);

}  // namespace hankelcat
