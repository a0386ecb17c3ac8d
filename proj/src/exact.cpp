#include "hankelcat/exact.hpp"

#include <stdexcept>

#include "hankelcat/rat_poly.hpp"

namespace hankelcat {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Int& v) { return v.get_str(10); }

std::string to_fraction_string(const Rat& v) {
  return v.get_num().get_str(10) + "/" + v.get_den().get_str(10);
}

Rat parse_rat(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(text, 10));
    return make_rat(Int(text.substr(0, slash), 10), Int(text.substr(slash + 1), 10));
  } catch (const std::domain_error&) {
    throw std::invalid_argument("bad rational: " + text);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("bad rational: " + text);
  }
}

Int binomial(std::int64_t n, std::int64_t r) {
  if (r < 0) return 0;
  if (n >= 0 && r > n) return 0;
  Int out;
  Int top(static_cast<long>(n));
  mpz_bin_ui(out.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(r));
  return out;
}

int sign_power(const Int& e) { return mpz_odd_p(e.get_mpz_t()) ? -1 : 1; }

int sign_power(std::int64_t e) { return (e % 2 == 0) ? 1 : -1; }

Int double_factorial_odd(std::int64_t j) {
  if (j < 1) throw std::invalid_argument("double_factorial_odd: j must be >= 1");
  Int out;
  mpz_2fac_ui(out.get_mpz_t(), static_cast<unsigned long>(2 * j - 1));
  return out;
}

Int phi(std::int64_t m) {
  if (m < 1) throw std::invalid_argument("phi: m must be >= 1");
  Int out = 1;
  for (std::int64_t j = 1; j < m; ++j) out *= double_factorial_odd(j);
  return out;
}

Int second_polygonal(std::int64_t k, std::int64_t n) {
  if (k < 3) throw std::invalid_argument("second_polygonal: k must be >= 3");
  if (n < 0) throw std::invalid_argument("second_polygonal: n must be >= 0");
  Int nn(static_cast<long>(n));
  Int twice = nn * ((k - 2) * nn + (k - 4));
  return twice / 2;
}

Int factorial(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("factorial of negative number");
  Int out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

Int power(const Int& base, std::uint64_t exponent) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exponent));
  return out;
}

Rat rat_power(const Rat& base, std::int64_t exponent) {
  if (exponent >= 0) {
    return make_rat(power(base.get_num(), exponent), power(base.get_den(), exponent));
  }
  if (base == 0) throw std::domain_error("zero to a negative power");
  return make_rat(power(base.get_den(), -exponent), power(base.get_num(), -exponent));
}

std::vector<Rat> bernoulli_even_list(std::int64_t count) {
  std::vector<Rat> even;
  if (count <= 0) return even;
  std::int64_t top = 2 * (count - 1);
  // Full table B_0..B_top; B_1 = -1/2 is needed inside the recurrence only.
  std::vector<Rat> all(static_cast<std::size_t>(top + 1));
  all[0] = 1;
  for (std::int64_t n = 1; n <= top; ++n) {
    if (n > 1 && n % 2 == 1) {
      all[n] = 0;
      continue;
    }
    Rat acc = 0;
    for (std::int64_t j = 0; j < n; ++j) acc += Rat(binomial(n + 1, j)) * all[j];
    all[n] = -acc / Rat(n + 1);
  }
  for (std::int64_t i = 0; i <= top; i += 2) even.push_back(all[i]);
  return even;
}

Rat bernoulli(std::int64_t idx) {
  if (idx < 0 || idx % 2 != 0) {
    throw std::invalid_argument("bernoulli: index must be even and >= 0");
  }
  return bernoulli_even_list(idx / 2 + 1).back();
}

Rat tangent_coefficient(std::int64_t k) {
  if (k < 1) throw std::invalid_argument("tangent_coefficient: k must be >= 1");
  Int two_pow = power(2, 2 * k);
  Rat out = Rat(sign_power(k - 1)) * Rat(two_pow * (two_pow - 1)) * bernoulli(2 * k) /
            Rat(factorial(2 * k));
  return out;
}

Rat cot_coefficient(std::int64_t k) {
  if (k < 0) throw std::invalid_argument("cot_coefficient: k must be >= 0");
  Rat out = Rat(sign_power(k)) * Rat(power(2, 2 * k)) * bernoulli(2 * k) / Rat(factorial(2 * k));
  return out;
}

std::vector<Rat> finite_differences(const std::vector<Rat>& values) {
  if (values.empty()) throw std::invalid_argument("finite_differences: empty input");
  std::vector<Rat> out;
  out.reserve(values.size() - 1);
  for (std::size_t i = 0; i + 1 < values.size(); ++i) out.push_back(values[i + 1] - values[i]);
  return out;
}

Rat difference_lead(const std::vector<Rat>& samples, int degree) {
  if (degree < 0) return 0;
  if (samples.size() < static_cast<std::size_t>(degree) + 1) {
    throw std::invalid_argument("difference_lead: need degree+1 samples");
  }
  std::vector<Rat> row(samples.begin(), samples.begin() + degree + 1);
  for (int i = 0; i < degree; ++i) row = finite_differences(row);
  return row.front() / Rat(factorial(degree));
}

RatPoly newton_interpolate(const std::vector<Sample>& samples) {
  const std::size_t n = samples.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (samples[i].x == samples[j].x) {
        throw std::invalid_argument("newton_interpolate: duplicate abscissa");
      }
    }
  }
  // In-place divided differences: after pass `order`, table[i] holds
  // f[x_{i-order}, ..., x_i] for i >= order.
  std::vector<Rat> table;
  table.reserve(n);
  for (const auto& s : samples) table.push_back(s.value);
  for (std::size_t order = 1; order < n; ++order) {
    for (std::size_t i = n - 1; i >= order; --i) {
      table[i] = (table[i] - table[i - 1]) /
                 Rat(samples[i].x - samples[i - order].x);
    }
  }
  RatPoly p;
  for (std::size_t i = n; i-- > 0;) {
    p = p * x_minus(Rat(samples[i].x)) + RatPoly::constant(table[i]);
  }
  return p;
}

LeadingInfo leading_info(const RatPoly& p) { return {p.degree(), p.lead()}; }

std::string to_string(PalClass c) {
  switch (c) {
    case PalClass::Palindromic: return "palindromic";
    case PalClass::SkewPalindromic: return "skew-palindromic";
    case PalClass::Neither: return "neither";
  }
  return "neither";
}

PalClass palindrome_class(const RatPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("palindrome_class: zero polynomial");
  const auto& c = p.coeffs();
  const std::size_t n = c.size();
  bool pal = true;
  bool skew = true;
  for (std::size_t i = 0; i < n; ++i) {
    const Rat& mirror = c[n - 1 - i];
    if (c[i] != mirror) pal = false;
    if (c[i] != -mirror) skew = false;
  }
  if (pal) return PalClass::Palindromic;
  if (skew) return PalClass::SkewPalindromic;
  return PalClass::Neither;
}

}  // namespace hankelcat
