#include "hankelcat/analysis.hpp"

#include <stdexcept>

namespace hankelcat {

std::string to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

Parity parse_parity(const std::string& text) {
  if (text == "even") return Parity::Even;
  if (text == "odd") return Parity::Odd;
  throw std::invalid_argument("parity must be 'even' or 'odd': " + text);
}

TranslationResult check_translation(DetTable& table, const TranslationClaim& claim,
                                    std::int64_t N, unsigned jobs) {
  if (claim.r < 1) throw std::invalid_argument("translation shift must be >= 1");
  if (claim.sign != 1 && claim.sign != -1) throw std::invalid_argument("sign must be +-1");
  if (N < claim.r) throw std::invalid_argument("N must be >= the translation shift");

  std::vector<HankelKey> keys;
  for (std::int64_t i = 0; i < N; ++i) keys.push_back({claim.left_spec, claim.left_m, i});
  for (std::int64_t i = 0; i + claim.r < N; ++i) keys.push_back({claim.right_spec, claim.right_m, i});
  auto vals = table.values(keys, jobs);

  for (std::int64_t i = 0; i < N; ++i) {
    const Int& lhs = vals[static_cast<std::size_t>(i)];
    Int rhs;
    if (i == 0) {
      rhs = 1;
    } else if (i < claim.r) {
      rhs = 0;
    } else {
      rhs = vals[static_cast<std::size_t>(N + i - claim.r)] * claim.sign;
    }
    if (lhs != rhs) return {i, TranslationFailure{i, lhs, rhs}};
  }
  return {N, std::nullopt};
}

Rat product_formula_pm(std::int64_t m, std::int64_t n) {
  if (m < 0 || n < 0) throw std::invalid_argument("product_formula_pm: m, n must be >= 0");
  Int num = 1;
  Int den = 1;
  for (std::int64_t i = 1; i <= m - 1; ++i) {
    for (std::int64_t j = i; j <= m - 1; ++j) {
      num *= 2 * n + i + j;
      den *= i + j;
    }
  }
  return make_rat(num, den);
}

FitResult fit_samples(std::vector<Rat> samples) {
  FitResult out;
  out.samples = std::move(samples);
  const auto count = static_cast<std::int64_t>(out.samples.size());
  for (int degree = -1; fit_samples_for_degree(degree) <= count; ++degree) {
    std::vector<Sample> pts;
    for (int x = 0; x <= degree; ++x) pts.push_back({x, out.samples[static_cast<std::size_t>(x)]});
    RatPoly candidate = newton_interpolate(pts);
    bool ok = true;
    for (std::int64_t x = degree + 1; x < count && ok; ++x) {
      ok = candidate.evaluate(Rat(x)) == out.samples[static_cast<std::size_t>(x)];
    }
    if (ok) {
      out.poly = std::move(candidate);
      out.guard_ok = true;
      return out;
    }
  }
  return out;
}

FitResult fit_subsequence_poly(DetTable& table, const PolyFitSpec& fit, unsigned jobs) {
  if (fit.modulus < 1) throw std::invalid_argument("fit modulus must be >= 1");
  if (fit.residue < 0 || fit.residue >= fit.modulus) {
    throw std::invalid_argument("fit residue must lie in [0, modulus)");
  }
  if (fit.max_n < 0) throw std::invalid_argument("fit max_n must be >= 0");
  std::vector<HankelKey> keys;
  for (std::int64_t n = fit.max_n; n >= 0; --n) {
    keys.push_back({fit.spec, fit.m, fit.modulus * n + fit.residue});
  }
  auto dets = table.values(keys, jobs);
  std::vector<Rat> samples(dets.size());
  for (std::int64_t n = 0; n <= fit.max_n; ++n) {
    const Int& d = dets[static_cast<std::size_t>(fit.max_n - n)];
    samples[static_cast<std::size_t>(n)] = Rat(d * sign_power(n * fit.sign_exponent));
  }
  return fit_samples(std::move(samples));
}

SeqSpec gf_sequence(Parity parity, int k) {
  return catalan(parity == Parity::Even ? 2 * k : 2 * k - 1);
}

std::int64_t gf_modulus(Parity parity, int k) {
  return parity == Parity::Even ? k : 2 * k - 1;
}

RatPoly gf_factor(Parity parity, int k) {
  if (k < 1) throw std::invalid_argument("generating function parameter k must be >= 1");
  const auto deg = static_cast<std::size_t>(gf_modulus(parity, k));
  std::vector<Rat> c(deg + 1);
  c[0] += 1;
  if (parity == Parity::Even) {
    c[deg] -= sign_power(binomial(k, 2));
  } else {
    c[deg] += sign_power(k);
  }
  return RatPoly(std::move(c));
}

std::int64_t gf_exponent(int k, std::int64_t m) {
  return binomial(k + m, 2).get_si() + 1;
}

std::int64_t gf_expected_degree(Parity parity, int k, std::int64_t m) {
  if (k < 1 || m < 1 - k) throw std::invalid_argument("degree formula needs k >= 1, m >= 1-k");
  if (parity == Parity::Even) return second_polygonal(k + 2, m + k - 1).get_si();
  return second_polygonal(2 * k + 1, m + k - 1).get_si() + k;
}

std::int64_t gf_default_truncation(Parity parity, int k, std::int64_t m) {
  return gf_expected_degree(parity, k, m) + gf_modulus(parity, k) * (gf_exponent(k, m) + 1) +
         kGfGuard;
}

GFExtraction extract_gf(DetTable& table, Parity parity, int k, std::int64_t m,
                        std::optional<std::int64_t> truncation, unsigned jobs) {
  GFExtraction out;
  out.parity = parity;
  out.k = k;
  out.m = m;
  out.factor = gf_factor(parity, k);
  out.exponent = gf_exponent(k, m);
  out.truncation = truncation ? *truncation : gf_default_truncation(parity, k, m);
  if (out.truncation < 0) throw std::invalid_argument("truncation must be >= 0");

  auto dets = table.sequence(gf_sequence(parity, k), m, out.truncation + 1, jobs);
  RatPoly series = RatPoly::from_ints(dets);
  RatPoly product = (out.factor.pow(out.exponent).truncated(static_cast<std::size_t>(out.truncation)) *
                     series)
                        .truncated(static_cast<std::size_t>(out.truncation));
  out.numerator = product;
  out.degree = product.degree();
  out.zero_tail = out.truncation - out.degree;
  out.remainder_clean = out.zero_tail >= kGfGuard;
  if (!product.is_zero()) out.pal_class = palindrome_class(product);
  return out;
}

std::optional<PalClass> expected_pal_class(Parity parity, int k, std::int64_t m) {
  if (k < 1 || m < 1 - k) throw std::invalid_argument("expected_pal_class needs k >= 1, m >= 1-k");
  const auto kr = k % 4;
  const auto mr = ((m % 4) + 4) % 4;
  const auto pal = PalClass::Palindromic;
  if (parity == Parity::Even) {
    switch (kr) {
      case 1: return pal;
      case 0: return (mr % 2 == 1) ? pal : PalClass::SkewPalindromic;
      case 2: return (mr == 0 || mr == 3) ? std::optional(pal) : std::nullopt;
      default: return (mr == 1 || mr == 2) ? std::optional(pal) : std::nullopt;
    }
  }
  switch (kr) {
    case 1: return (mr % 2 == 0) ? std::optional(pal) : std::nullopt;
    case 3: return (mr % 2 == 1) ? std::optional(pal) : std::nullopt;
    default: return (mr == 0 || mr == 1) ? std::optional(pal) : std::nullopt;
  }
}

}  // namespace hankelcat
