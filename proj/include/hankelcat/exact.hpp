#pragma once

// Exact integer/rational arithmetic and the special number sequences used
// throughout: binomials, odd double factorials, Phi_n, second polygonal
// numbers, Bernoulli numbers and the tan / x*cot(x) series coefficients.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace hankelcat {

using Int = mpz_class;
using Rat = mpq_class;

class RatPoly;

/// Normalized fraction num/den. Throws std::domain_error on den == 0.
Rat make_rat(const Int& num, const Int& den);

/// Decimal string for an Int ("-12", "0", ...).
std::string to_string(const Int& v);

/// "num/den" with den > 0; integers keep the "/1" suffix.
std::string to_fraction_string(const Rat& v);

/// Parses "a", "-a" or "a/b". Throws std::invalid_argument.
Rat parse_rat(const std::string& text);

/// Generalized binomial coefficient. Zero for r < 0 and for r > n >= 0;
/// for n < 0 the falling-factorial definition n(n-1)...(n-r+1)/r! is used.
Int binomial(std::int64_t n, std::int64_t r);

/// (-1)^e as an int, for any integer e.
int sign_power(const Int& e);
int sign_power(std::int64_t e);

/// (2j-1)!! = 1*3*...*(2j-1). Requires j >= 1.
Int double_factorial_odd(std::int64_t j);

/// Phi_m = prod_{j=1}^{m-1} (2j-1)!!. Requires m >= 1.
Int phi(std::int64_t m);

/// Second k-gonal number n((k-2)n + (k-4))/2. Requires k >= 3, n >= 0.
Int second_polygonal(std::int64_t k, std::int64_t n);

/// Bernoulli number B_idx for even idx >= 0, from
/// sum_{j=0}^{n} binom(n+1, j) B_j = 0.
Rat bernoulli(std::int64_t idx);

/// B_0, B_2, ..., B_{2 * count - 2}.
std::vector<Rat> bernoulli_even_list(std::int64_t count);

/// Coefficient of x^{2k-1} in tan x, k >= 1.
Rat tangent_coefficient(std::int64_t k);

/// Coefficient of x^{2k} in x cot x, k >= 0.
Rat cot_coefficient(std::int64_t k);

Int factorial(std::int64_t n);
Int power(const Int& base, std::uint64_t exponent);
/// base^exponent for a possibly negative exponent.
Rat rat_power(const Rat& base, std::int64_t exponent);

/// Consecutive differences v[i+1] - v[i]. Requires a nonempty input.
std::vector<Rat> finite_differences(const std::vector<Rat>& values);

/// Delta^d v(0) / d! from d+1 consecutive samples.
Rat difference_lead(const std::vector<Rat>& samples, int degree);

struct Sample {
  std::int64_t x;
  Rat value;
};

/// Unique polynomial of degree < samples.size() through all samples,
/// via Newton divided differences. Throws on duplicate abscissae.
RatPoly newton_interpolate(const std::vector<Sample>& samples);

struct LeadingInfo {
  int degree;  // -1 for the zero polynomial
  Rat lead;    // 0 for the zero polynomial
};

LeadingInfo leading_info(const RatPoly& p);

enum class PalClass { Palindromic, SkewPalindromic, Neither };

std::string to_string(PalClass c);

/// Throws std::invalid_argument for the zero polynomial.
PalClass palindrome_class(const RatPoly& p);

}  // namespace hankelcat
