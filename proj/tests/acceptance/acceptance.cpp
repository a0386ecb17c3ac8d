// Acceptance gate: one PASS/FAIL line per criterion, exact comparisons only.

#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hankelcat/analysis.hpp"
#include "hankelcat/conjectures.hpp"
#include "hankelcat/exact.hpp"
#include "hankelcat/hankel.hpp"
#include "hankelcat/rat_poly.hpp"
#include "hankelcat/sequences.hpp"

using namespace hankelcat;

namespace {

DetTable& table() {
  static DetTable t;
  return t;
}

Int D(int k, std::int64_t m, std::int64_t n) { return table().value({catalan(k), m, n}); }
Int d(int k, std::int64_t m, std::int64_t n) { return table().value({central_binomial(k), m, n}); }

std::vector<Int> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

Rat R(const char* s) { return parse_rat(s); }

/// Collects failure reasons for one criterion.
struct Checks {
  std::vector<std::string> failures;
  int count = 0;

  void expect(bool ok, const std::string& what) {
    ++count;
    if (!ok) failures.push_back(what);
  }
};

std::string str(const Int& v) { return v.get_str(); }
std::string str(const Rat& v) { return v.get_str(); }

std::string join(const std::vector<std::string>& parts, std::size_t limit = 4) {
  std::ostringstream os;
  for (std::size_t i = 0; i < parts.size() && i < limit; ++i) os << (i ? "; " : "") << parts[i];
  if (parts.size() > limit) os << "; ... (" << parts.size() << " total)";
  return os.str();
}

void compare_seq(Checks& c, const std::string& label, const std::vector<Int>& got,
                 const std::vector<Int>& want, std::vector<std::size_t> skip = {}) {
  for (std::size_t i = 0; i < want.size(); ++i) {
    bool skipped = false;
    for (auto s : skip) skipped |= s == i;
    if (skipped) continue;
    c.expect(i < got.size() && got[i] == want[i],
             label + "[" + std::to_string(i) + "] = " + (i < got.size() ? str(got[i]) : "?") +
                 ", printed " + str(want[i]));
  }
}

std::vector<Int> dets(int k, std::int64_t m, std::int64_t count) {
  return table().sequence(catalan(k), m, count);
}

/// Fit with one sample more than a degree-`expected` certificate needs.
FitResult fit(int k, std::int64_t m, std::int64_t modulus, std::int64_t residue,
              std::int64_t sign_exponent, int expected) {
  PolyFitSpec spec{catalan(k), m, modulus, residue, sign_exponent,
                   fit_samples_for_degree(expected)};
  return fit_subsequence_poly(table(), spec);
}

FitResult fit_binomial(int k, std::int64_t m, std::int64_t modulus, std::int64_t residue,
                       std::int64_t sign_exponent, int expected) {
  PolyFitSpec spec{central_binomial(k), m, modulus, residue, sign_exponent,
                   fit_samples_for_degree(expected)};
  return fit_subsequence_poly(table(), spec);
}

std::int64_t C2(std::int64_t n) { return binomial(n, 2).get_si(); }
int sgn(std::int64_t e) { return sign_power(e); }

RatPoly cubic_family() {
  // (n+1)(n+2)(2n+3)/6
  return RatPoly{1, 1} * RatPoly{2, 1} * RatPoly{3, 2} * R("1/6");
}

// ---------------------------------------------------------------------------

Checks criterion1() {
  Checks c;
  compare_seq(c, "D_{3,1}", dets(3, 1, 12), ints({1, 3, 3, -1, -6, -6, 1, 9, 9, -1, -12, -12}));
  compare_seq(c, "D_{4,-3}", dets(4, -3, 13), ints({1, 0, 0, 0, 1, 4, -4, -20, 9, 56, -16, -120, 25}));
  for (std::int64_t n = 0; n <= 20; ++n) {
    c.expect(D(1, 0, n) == 1, "D_{1,0}(" + std::to_string(n) + ") != 1");
    c.expect(D(1, 1, n) == 1, "D_{1,1}(" + std::to_string(n) + ") != 1");
  }
  return c;
}

Checks criterion2() {
  Checks c;
  c.expect(D(4, 1, 1) == 4, "D_{4,1}(1) = " + str(D(4, 1, 1)));
  c.expect(seq_value(catalan(4), 1) == 4, "C_{4,1} != 4");
  auto report = run_checker("conj5", table(), Json::object(), Budget{});
  bool flagged = false;
  for (const auto& note : report.notes) {
    flagged |= note.find("D_{4,1}") != std::string::npos && note.find("misprint") != std::string::npos;
  }
  c.expect(flagged, "conj5 report does not flag the D_{4,1} listing");
  return c;
}

Checks criterion3() {
  Checks c;
  for (std::int64_t m = 0; m <= 6; ++m) {
    for (std::int64_t n = 0; n <= 8; ++n) {
      Rat p = product_formula_pm(m, n);
      c.expect(p.get_den() == 1 && p == Rat(D(1, m, n)),
               "p_" + std::to_string(m) + "(" + std::to_string(n) + ") = " + str(p) + " vs D = " +
                   str(D(1, m, n)));
    }
  }
  for (std::int64_t m = 2; m <= 6; ++m) {
    auto f = fit(1, m, 1, 0, 0, static_cast<int>(C2(m)));
    c.expect(f.poly && f.lead() == Rat(1) / Rat(phi(m)),
             "lead of D_{1," + std::to_string(m) + "} fit = " + str(f.lead()));
  }
  return c;
}

Checks criterion4() {
  Checks c;
  for (int k = 2; k <= 4; ++k) {
    for (std::int64_t n = 0; n <= 36; ++n) {
      Int want = n % k == 0 ? Int(sgn((n / k) * C2(k))) : Int(0);
      c.expect(D(2 * k, 1 - k, n) == want, "thm2 k=" + std::to_string(k) + " n=" + std::to_string(n));
    }
  }
  for (int k = 1; k <= 2; ++k) {
    const std::int64_t q = 2 * k + 1;
    for (std::int64_t n = 0; n <= 30; ++n) {
      const std::int64_t i = n / q, r = n % q;
      Int a = r == 0 ? Int(sgn(k * i)) : r == k + 1 ? Int(sgn(k * i + C2(k + 1))) : Int(0);
      Int b = r == 0 ? Int(sgn(k * i)) : r == k ? Int(sgn(k * i + C2(k))) : Int(0);
      c.expect(D(q, -k, n) == a, "(12) k=" + std::to_string(k) + " n=" + std::to_string(n));
      c.expect(D(q, 1 - k, n) == b, "(13) k=" + std::to_string(k) + " n=" + std::to_string(n));
    }
  }
  compare_seq(c, "D_{3,-1}", dets(3, -1, 9), ints({1, 0, -1, -1, 0, 1, 1, 0, -1}));
  compare_seq(c, "D_{3,0}", dets(3, 0, 9), ints({1, 1, 0, -1, -1, 0, 1, 1, 0}));
  compare_seq(c, "D_{5,-2}", dets(5, -2, 10), ints({1, 0, 0, -1, 0, 1, 0, 0, -1, 0}));
  compare_seq(c, "D_{5,-1}", dets(5, -1, 10), ints({1, 0, -1, 0, 0, 1, 0, -1, 0, 0}));
  return c;
}

Checks criterion5() {
  Checks c;
  const std::int64_t N = 16;
  auto run = [&](const std::string& label, TranslationClaim claim) {
    auto res = check_translation(table(), claim, N);
    c.expect(!res.first_failure && res.holds_through >= 12,
             label + " fails at " + std::to_string(res.holds_through));
  };
  for (std::int64_t m = 0; m <= 3; ++m) {
    run("(5) m=" + std::to_string(m),
        {catalan(1), -m, catalan(1), m + 1, m + 1, sgn(C2(m + 1))});
  }
  for (int k = 2; k <= 3; ++k) {
    for (std::int64_t m = 0; m <= 3; ++m) {
      run("(7) k=" + std::to_string(k) + " m=" + std::to_string(m),
          {catalan(2 * k), 1 - k - m, catalan(2 * k), 1 - k + m, m + k, sgn(C2(m + k))});
      run("(8) k=" + std::to_string(k) + " m=" + std::to_string(m),
          {catalan(2 * k - 1), 2 - k - m, catalan(2 * k - 1), m + 1 - k, m + k - 1,
           sgn(C2(m + k - 1))});
    }
  }
  return c;
}

Checks criterion6() {
  Checks c;
  for (int k = 2; k <= 3; ++k) {
    for (std::int64_t m = -1; m <= 2; ++m) {
      const int idx = 2 * static_cast<int>(k + m);
      const std::int64_t q = k + m;
      for (std::int64_t n = 1; n <= 6; ++n) {
        Int pw = power(Int(n + 1), static_cast<std::uint64_t>(k - 1));
        Int s = sgn(n * C2(q));
        const std::string at = "k=" + std::to_string(k) + " m=" + std::to_string(m) + " n=" + std::to_string(n);
        c.expect(s * D(idx, -m, q * n) == pw, "(18a) " + at);
        c.expect(s * D(idx, -m, q * n + 1 + m) == sgn(C2(m + 1)) * pw, "(18b) " + at);
      }
    }
  }
  // The D_{4,1} listing prints -4 at n = 1; the computed value is pinned by criterion 2.
  compare_seq(c, "D_{4,1}", dets(4, 1, 13), ints({1, -4, -4, -20, 9, 56, -16, -120, 25, 220, -36, -364, 49}), {1});
  compare_seq(c, "D_{6,0}", dets(6, 0, 13), ints({1, 1, -9, -4, -4, 45, 9, 9, -126, -16, -16, 270, 25}));
  compare_seq(c, "D_{8,-1}", dets(8, -1, 15), ints({1, 0, -1, -16, 4, 0, -4, -80, 9, 0, -9, -224, 16, 0, -16}));
  compare_seq(c, "D_{10,-2}", dets(10, -2, 19),
              ints({1, 0, 0, -1, 25, 4, 0, 0, -4, 125, 9, 0, 0, -9, 350, 16, 0, 0, -16}));
  return c;
}

Checks criterion7() {
  Checks c;
  const std::vector<std::pair<int, std::vector<int>>> even = {{6, {3}}, {8, {6, 6}}, {10, {9, 10, 9}}};
  for (const auto& [row, degs] : even) {
    const int k = row / 2;
    for (std::size_t i = 0; i < degs.size(); ++i) {
      const int j = static_cast<int>(i) + 2;
      auto f = fit(row, 0, k, j, C2(k), degs[i]);
      c.expect(f.poly && f.degree() == degs[i], "deg p_{" + std::to_string(row) + ",0," +
                                                    std::to_string(j) + "} = " + std::to_string(f.degree()));
    }
  }
  const std::vector<std::pair<int, std::vector<int>>> odd = {
      {3, {-1}}, {5, {1, -1, 1}}, {7, {3, 2, -1, 2, 3}}, {9, {5, 6, 3, -1, 3, 6, 5}}};
  for (const auto& [row, degs] : odd) {
    const int k = (row - 1) / 2;
    for (std::size_t i = 0; i < degs.size(); ++i) {
      const int j = static_cast<int>(i) + 2;
      auto f = fit(row, 0, row, j, k, degs[i]);
      c.expect(f.poly && f.degree() == degs[i], "deg p_{" + std::to_string(row) + ",0," +
                                                    std::to_string(j) + "} = " + std::to_string(f.degree()));
    }
  }
  return c;
}

Checks criterion8() {
  Checks c;
  const std::vector<std::pair<int, std::vector<Rat>>> a_rows = {
      {6, {R("-1/3")}}, {8, {R("1/45"), R("-1/45")}}, {10, {R("-2/945"), R("1/4725"), R("2/945")}}};
  const std::vector<std::vector<long>> phi_rows = {{-1}, {1, -1}, {-10, 1, 10}};
  for (std::size_t r = 0; r < a_rows.size(); ++r) {
    const int row = a_rows[r].first, k = row / 2;
    for (std::size_t i = 0; i < a_rows[r].second.size(); ++i) {
      const int j = static_cast<int>(i) + 2;
      const int jj = k >= 2 * j - 1 ? j : k + 1 - j;
      const int deg = (2 * jj - 1) * (k - jj);
      auto f = fit(row, 0, k, j, C2(k), deg);
      const std::string at = "A_{" + std::to_string(row) + "," + std::to_string(j) + "}";
      if (!f.poly) {
        c.expect(false, at + " fit failed");
        continue;
      }
      Rat a = f.lead() / Rat(power(Int(k), static_cast<std::uint64_t>(2 * (j - 1) * (k - j))));
      c.expect(a == a_rows[r].second[i], at + " = " + str(a));
      Rat scaled = a * Rat(phi(k));
      c.expect(scaled.get_den() == 1, at + " * Phi_k not integral");
      c.expect(scaled == phi_rows[r][i], at + " * Phi_k = " + str(scaled));
    }
  }
  return c;
}

Checks criterion9() {
  Checks c;
  auto f = fit(6, 0, 3, 2, 3, 3);
  c.expect(f.poly && *f.poly == cubic_family() * Rat(-9), "p_{6,0,2} = " + (f.poly ? f.poly->to_string("n") : "?"));
  for (std::int64_t m = -2; m <= 1; ++m) {
    const int k = static_cast<int>(3 + m);
    auto g = fit(2 * k, -m, k, 2 + m, C2(k), 3);
    RatPoly want = cubic_family() * Rat(sgn(C2(m + 2)) * k * k);
    c.expect(g.poly && *g.poly == want, "(21) m=" + std::to_string(m) + ": " +
                                            (g.poly ? g.poly->to_string("n") : "?"));
  }
  return c;
}

Checks criterion10() {
  Checks c;
  for (int k = 3; k <= 4; ++k) {
    const int deg = 3 * (k - 2);
    Rat want = -bernoulli(2 * k - 4) / Rat(factorial(2 * k - 4)) *
               Rat(power(Int(2 * k), static_cast<std::uint64_t>(2 * k - 4)));
    auto f22 = fit(2 * k, 0, k, 2, C2(k), deg);
    c.expect(f22.poly && f22.degree() == deg && f22.lead() == want,
             "(22) k=" + std::to_string(k) + ": degree " + std::to_string(f22.degree()) + ", lead " + str(f22.lead()));
    auto f23 = fit(2 * k, 0, k, k - 1, C2(k), deg);
    Rat lead23 = f23.lead() * sgn(C2(k + 2));
    c.expect(f23.poly && f23.degree() == deg && lead23 == want,
             "(23) k=" + std::to_string(k) + ": degree " + std::to_string(f23.degree()) + ", lead " + str(lead23));
  }
  c.expect(R("-3") == -bernoulli(2) / 2 * 36, "k=3 value");
  c.expect(R("256/45") == -bernoulli(4) / 24 * 4096, "k=4 value");
  return c;
}

Checks criterion11() {
  Checks c;
  compare_seq(c, "D_{3,0}", dets(3, 0, 23),
              ints({1, 1, 0, -1, -1, 0, 1, 1, 0, -1, -1, 0, 1, 1, 0, -1, -1, 0, 1, 1, 0, -1, -1}));
  compare_seq(c, "D_{5,0}", dets(5, 0, 22),
              ints({1, 1, -5, 0, 5, 1, 1, -10, 0, 10, 1, 1, -15, 0, 15, 1, 1, -20, 0, 20, 1, 1}));
  compare_seq(c, "D_{7,0}", dets(7, 0, 16),
              ints({1, 1, -14, -49, 0, 49, 329, -1, -1, -315, 196, 0, -196, -1687, 1, 1}));
  const std::vector<std::vector<Int>> lists = {ints({1, -1, 1, -1, 1, -1, 1, -1, 1}),
                                               ints({3, -6, 9, -12, 15, -18, 21, -24, 27}),
                                               ints({9, -36, 81, -144, 225, -324, 441, -576, 729})};
  for (int m = 0; m <= 2; ++m) {
    std::vector<Int> got;
    for (std::int64_t n = 0; n < 9; ++n) got.push_back(D(3, m, 3 * n + 1));
    compare_seq(c, "D_{3," + std::to_string(m) + "}(3n+1)", got, lists[m]);
  }
  return c;
}

Checks criterion12() {
  Checks c;
  const std::vector<std::pair<int, std::vector<Rat>>> rows = {
      {5, {-1, 0, 1}}, {7, {R("1/3"), -1, 0, 1, R("1/3")}}};
  const std::vector<std::vector<int>> degrees = {{1, -1, 1}, {3, 2, -1, 2, 3}};
  Rat b72 = 0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const int row = rows[r].first, k = (row - 1) / 2;
    for (std::size_t i = 0; i < rows[r].second.size(); ++i) {
      const int j = static_cast<int>(i) + 2;
      const int jj = j <= k ? j : 2 * k + 2 - j;
      const std::int64_t e = (jj - 1) * (1 + 2 * (k - jj));
      auto f = fit(row, 0, row, j, k, degrees[r][i]);
      const std::string at = "B_{" + std::to_string(row) + "," + std::to_string(j) + "}";
      if (!f.poly) {
        c.expect(false, at + " fit failed");
        continue;
      }
      Rat b = f.poly->is_zero() ? Rat(0) : f.lead() / Rat(power(Int(row), static_cast<std::uint64_t>(e)));
      c.expect(b == rows[r].second[i], at + " = " + str(b));
      if (row == 7 && j == 2) b72 = b;
    }
  }
  c.expect(b72 == tangent_coefficient(2), "B_{7,2} = " + str(b72) + " vs tan coefficient " + str(tangent_coefficient(2)));
  Rat lead = fit(7, 0, 7, 2, 3, 3).lead() * sgn(2);
  c.expect(lead == tangent_coefficient(2) * 343, "lead of p_{7,0,2} = " + str(lead));
  return c;
}

Checks criterion13() {
  Checks c;
  using P = RatPoly;
  auto check = [&](Parity parity, int k, std::int64_t m, const RatPoly& printed, const std::string& name) {
    auto ex = extract_gf(table(), parity, k, m);
    c.expect(ex.remainder_clean, name + " remainder not clean");
    c.expect(ex.numerator == printed, name + " = " + ex.numerator.to_string("x"));
    if (!(parity == Parity::Odd && k == 1)) {
      const std::int64_t want = parity == Parity::Even ? second_polygonal(k + 2, m + k - 1).get_si()
                                                       : second_polygonal(2 * k + 1, m + k - 1).get_si() + k;
      c.expect(ex.degree == want, name + " degree " + std::to_string(ex.degree) + " vs " + std::to_string(want));
    }
    if (auto cls = expected_pal_class(parity, k, m)) {
      c.expect(ex.pal_class == *cls, name + " palindromicity");
    }
    return ex;
  };
  const std::vector<RatPoly> p2 = {P{1}, P{1}, P{1, 1}, P{1, 7, 7, 1}, P{1, 31, 187, 330, 187, 31, 1}};
  std::vector<RatPoly> p2_computed;
  for (int m = 0; m <= 4; ++m) p2_computed.push_back(check(Parity::Even, 1, m, p2[m], "P_{2," + std::to_string(m) + "}").numerator);
  const std::vector<RatPoly> p4 = {
      P{1}, P{1, 1}, P{1, 4, 0, -4, -1}, P{1, 14, 13, -111, -119, 119, 111, -13, -14, -1},
      P{1, 48, 242, -1760, -7960, 10112, 47918, -9680, -84370, -9680, 47918, 10112, -7960, -1760, 242, 48, 1}};
  for (int m = -1; m <= 3; ++m) check(Parity::Even, 2, m, p4[m + 1], "P_{4," + std::to_string(m) + "}");
  const std::vector<RatPoly> p6 = {
      P{1}, P{1, 0, -1}, P{1, 1, -9, 0, 0, 9, -1, -1},
      P{1, 6, -69, -1, 63, 561, -8, -609, -609, -8, 561, 63, -1, -69, 6, 1}};
  for (int m = -2; m <= 1; ++m) check(Parity::Even, 3, m, p6[m + 2], "P_{6," + std::to_string(m) + "}");
  const P x1{1, 1}, x2{1, -1, 1};
  const std::vector<RatPoly> q3 = {P{1, 0, -1}, x1.pow(2) * x2, x1.pow(5) * x2.pow(2),
                                   P{1, -1} * x1.pow(8) * x2.pow(3) * P{1, 5, 1}};
  for (int m = -1; m <= 2; ++m) check(Parity::Odd, 2, m, q3[m + 1], "Q_{3," + std::to_string(m) + "}");
  for (int m = 0; m <= 4; ++m) {
    auto q = extract_gf(table(), Parity::Odd, 1, m + 1);
    c.expect(q.remainder_clean, "Q_{1," + std::to_string(m + 1) + "} remainder not clean");
    RatPoly rhs = P{-1, 1}.pow(m + 1) * p2_computed[m];
    c.expect(q.numerator == rhs, "Q_{1," + std::to_string(m + 1) + "} = " + q.numerator.to_string("x") +
                                     " but (x-1)^" + std::to_string(m + 1) + " P_{2," + std::to_string(m) +
                                     "} = " + rhs.to_string("x"));
  }
  return c;
}

Checks criterion14() {
  Checks c;
  for (int k = 1; k <= 4; ++k) {
    for (std::int64_t m = -1; k + m <= 3; ++m) {
      const std::int64_t q = 2 * k + 2 * m + 1;
      const std::string km = "k=" + std::to_string(k) + " m=" + std::to_string(m);
      for (std::int64_t n = 0; n <= 4; ++n) {
        const std::string at = km + " n=" + std::to_string(n);
        Int odd_pow = power(Int(2 * n + 1), k);
        c.expect(d(q, -m, q * n) == odd_pow, "(i) " + at);
        c.expect(d(q, -m, q * n + 1 + m) == sgn(C2(m + 1)) * odd_pow, "(ii) " + at);
        Int third = d(q, -m, q * n + k + m + 1);
        Int want = sgn(C2(m + k + 1)) * power(Int(4), k) * power(Int(n + 1), k);
        c.expect(third == want, "(iii) " + at + ": " + str(third) + " vs " + str(want));
        const std::int64_t e = 2 * k + 2 * m;
        if (e >= 1) {
          c.expect(d(e, -m, e * n) == sgn((k + m) * n), "(iv) " + at);
          c.expect(d(e, -m, e * n + m + 1) == sgn(C2(m + 1) + (k + m) * n), "(v) " + at);
        }
      }
    }
  }
  return c;
}

Checks criterion15() {
  Checks c;
  const int k = 2;
  for (std::int64_t m = 0; m <= 1; ++m) {
    const int idx = static_cast<int>(2 * k + 2 * m);
    auto f = fit_binomial(idx, -m, idx, m + 2, k + m, 2 * k - 3);
    Rat want = Rat(sgn(C2(m) + 1)) * Rat(power(Int(k + m), 2 * k - 3)) * Rat(power(Int(4), 2 * k - 2)) *
               Rat(power(Int(2), 2 * k - 2) - 1) * bernoulli(2 * k - 2) / Rat(factorial(2 * k - 2));
    c.expect(f.poly && f.degree() == 2 * k - 3 && f.lead() == want,
             "q_{" + std::to_string(idx) + "," + std::to_string(-m) + "}: degree " + std::to_string(f.degree()) +
                 ", lead " + str(f.lead()) + " vs " + str(want));
  }
  c.expect(Rat(sgn(1)) * 2 * 16 * 3 * bernoulli(2) / 2 == -8, "k=2 m=0 value");
  const std::int64_t m = 0;
  const int idx = static_cast<int>(2 * k + 2 * m + 1);
  auto g = fit_binomial(idx, -m, idx, 2 + m, 0, 3 * k - 3);
  Rat want = Rat(sgn(C2(m) + 1)) * Rat(power(Int(2), 3 * k - 2)) * Rat(power(Int(2 * k + m + 1), 2 * k - 2)) *
             bernoulli(2 * k - 2) / Rat(factorial(2 * k - 2));
  c.expect(g.poly && g.degree() == 3 * k - 3 && g.lead() == want,
           "q_{5,0}: degree " + std::to_string(g.degree()) + ", lead " + str(g.lead()) + " vs " + str(want));
  return c;
}

Checks criterion16() {
  Checks c;
  for (int k = 1; k <= 8; ++k) {
    auto oracle = conv_power_oracle(k, 61);
    for (std::int64_t n = 0; n <= 60; ++n) {
      Rat a = Rat(binomial(2 * n + k, n)) * make_rat(k, 2 * n + k);
      Rat b = make_rat(k, n + k) * Rat(binomial(2 * n + k - 1, n));
      Int v = seq_value(catalan(k), n);
      c.expect(a == b && b == Rat(v) && a.get_den() == 1, "three formulas k=" + std::to_string(k) + " n=" + std::to_string(n));
      c.expect(oracle[n] == v, "oracle k=" + std::to_string(k) + " n=" + std::to_string(n));
    }
  }
  for (int k = 1; k <= 4; ++k) {
    for (std::int64_t m = -4; m <= 4; ++m) {
      for (std::int64_t n = 0; n <= 6; ++n) {
        for (auto spec : {catalan(k), central_binomial(k)}) {
          auto h = hankel_matrix({spec, m, n});
          c.expect(bareiss_det(h) == cofactor_det_oracle(h), "Bareiss vs cofactor at " + to_string(spec));
        }
      }
    }
  }
  std::mt19937 rng(99);
  std::uniform_int_distribution<long> entry(-99, 99);
  for (int t = 0; t < 100; ++t) {
    IntMatrix a(static_cast<std::size_t>(1 + t % 6));
    for (std::size_t i = 0; i < a.order(); ++i)
      for (std::size_t j = 0; j < a.order(); ++j) a(i, j) = entry(rng);
    c.expect(bareiss_det(a) == cofactor_det_oracle(a), "random matrix " + std::to_string(t));
  }
  const std::vector<Rat> bern = {1, R("1/6"), R("-1/30"), R("1/42"), R("-1/30"), R("5/66"), R("-691/2730"), R("7/6")};
  for (std::size_t i = 0; i < bern.size(); ++i) c.expect(bernoulli(2 * i) == bern[i], "B_" + std::to_string(2 * i));
  const std::vector<Rat> tan = {1, R("1/3"), R("2/15"), R("17/315"), R("62/2835"), R("1382/155925")};
  for (std::size_t i = 0; i < tan.size(); ++i) c.expect(tangent_coefficient(i + 1) == tan[i], "tan " + std::to_string(i + 1));
  const std::vector<Rat> cot = {1, R("-1/3"), R("-1/45"), R("-2/945"), R("-1/4725"), R("-2/93555"), R("-1382/638512875")};
  for (std::size_t i = 0; i < cot.size(); ++i) c.expect(cot_coefficient(i) == cot[i], "cot " + std::to_string(i));
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Checks()>>> criteria = {
      {"sequence goldens", criterion1},
      {"D_{4,1}(1) discrepancy pin", criterion2},
      {"product formula p_m", criterion3},
      {"periodic theorems and displays", criterion4},
      {"translation relations", criterion5},
      {"shifted even identities and listings", criterion6},
      {"degree tables", criterion7},
      {"A tables", criterion8},
      {"cubic polynomial family", criterion9},
      {"Bernoulli leads for D_{2k,0}", criterion10},
      {"odd zero-shift listings", criterion11},
      {"B tables and tangent cross-check", criterion12},
      {"generating-function numerators", criterion13},
      {"binomial-family identities", criterion14},
      {"binomial-family leads", criterion15},
      {"oracle and property suites", criterion16},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Checks c;
    std::string error;
    try {
      c = criteria[i].second();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const bool ok = error.empty() && c.failures.empty();
    failed += ok ? 0 : 1;
    std::printf("%s %2zu %s (%d checks)", ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), c.count);
    if (!error.empty()) std::printf(": error: %s", error.c_str());
    if (!c.failures.empty()) std::printf(": %s", join(c.failures).c_str());
    std::printf("\n");
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
