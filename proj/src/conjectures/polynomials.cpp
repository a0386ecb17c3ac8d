#include <stdexcept>

#include "common.hpp"

namespace hankelcat {

namespace {

Rat int_pow(std::int64_t base, std::int64_t e) {
  if (e < 0) throw std::domain_error("negative exponent");
  return Rat(power(Int(static_cast<long>(base)), static_cast<std::uint64_t>(e)));
}

std::string key_of(std::int64_t a, std::int64_t b) {
  return std::to_string(a) + "," + std::to_string(b);
}

ConjectureReport new_report(const std::string& id, const std::string& claim, const Json& params,
                            const Budget& budget) {
  ConjectureReport r;
  r.id = id;
  r.claim = claim;
  r.params = params.is_object() ? params : Json::object();
  r.params["max_order"] = budget.max_order;
  return r;
}

void compare_lead(ConjectureReport& report, const Json& point, const RatPoly& poly,
                  std::optional<int> degree, const Rat& expected_lead, const std::string& what) {
  bool ok = true;
  if (degree && poly.degree() != *degree) {
    report.refute(point, -1, "degree " + std::to_string(*degree),
                  "degree " + std::to_string(poly.degree()), what);
    ok = false;
  }
  Rat lead = poly.is_zero() ? Rat(0) : poly.lead();
  if (lead != expected_lead) {
    report.refute(point, -1, "lead " + detail::rat_str(expected_lead),
                  "lead " + detail::rat_str(lead), what);
    ok = false;
  }
  if (ok) report.verify(point, "degree " + std::to_string(poly.degree()) + ", lead " +
                                   detail::rat_str(lead));
}

int even_row_k(std::int64_t row) {
  if (row < 2 || row % 2 != 0) throw std::invalid_argument("even table rows are even numbers >= 2");
  return static_cast<int>(row / 2);
}

int odd_row_k(std::int64_t row) {
  if (row < 3 || row % 2 != 1) throw std::invalid_argument("odd table rows are odd numbers >= 3");
  return static_cast<int>((row - 1) / 2);
}

const Rat* reference_cell(const reference::RatTable& t, std::int64_t row, int j) {
  auto it = t.rows.find(static_cast<int>(row));
  if (it == t.rows.end()) return nullptr;
  auto idx = static_cast<std::size_t>(j - t.first_j);
  if (j < t.first_j || idx >= it->second.size()) return nullptr;
  return &it->second[idx];
}

void compare_reference(ConjectureReport& report, const reference::RatTable& t, std::int64_t row,
                       int j, const Rat& computed) {
  const Rat* printed = reference_cell(t, row, j);
  if (!printed || *printed == computed) return;
  report.refute({{"row", row}, {"j", j}}, -1, detail::rat_str(*printed), detail::rat_str(computed),
                "reference table " + t.name);
}

// --- conj8 ---------------------------------------------------------------

void run_conj8(ConjectureReport& report, DetTable& table, const Json& params,
               const Budget& budget) {
  report.claim =
      "(-1)^{n binom(k,2)} D_{2k,0}(kn+2) and (-1)^{n binom(k,2)+binom(k+2,2)} D_{2k,0}(kn+k-1) "
      "have degree 3(k-2) and lead -B_{2k-4}/(2k-4)! (2k)^{2k-4}";
  for (auto k64 : int_list(params, "k", {3, 4, 5})) {
    if (k64 < 3) throw std::invalid_argument("conj8 needs k >= 3");
    int k = static_cast<int>(k64);
    const int degree = 3 * (k - 2);
    Rat lead = -bernoulli(2 * k - 4) / Rat(factorial(2 * k - 4)) * int_pow(2 * k, 2 * k - 4);
    Rat via_cot = Rat(sign_power(k + 1)) * cot_coefficient(k - 2) * int_pow(k, 2 * k - 4);
    report.artifacts["cot_form"][std::to_string(k)] = {{"lead", detail::rat_str(lead)},
                                                       {"cot_form", detail::rat_str(via_cot)},
                                                       {"agree", lead == via_cot}};
    if (lead != via_cot) {
      report.refute({{"k", k}}, -1, detail::rat_str(via_cot), detail::rat_str(lead),
                    "cot-series form of the lead");
    }
    for (int variant = 0; variant < 2; ++variant) {
      int residue = variant == 0 ? 2 : k - 1;
      int constant_sign = variant == 0 ? 1 : sign_power(binomial(k + 2, 2));
      Json point = {{"k", k}, {"residue", residue}};
      auto poly = detail::fit_for_claim(report, table, point, detail::even_fit(k, 0, residue),
                                        degree, budget);
      if (!poly) continue;
      RatPoly q = *poly * Rat(constant_sign);
      report.artifacts["polynomials"][key_of(k, residue)] = poly_json(q);
      compare_lead(report, point, q, degree, lead, "degree 3(k-2), Bernoulli lead");
    }
  }
}

// --- conj9 ---------------------------------------------------------------

void run_conj9(ConjectureReport& report, DetTable& table, const Json& params,
               const Budget& budget) {
  report.claim =
      "lead p_{2(k+m),-m,j+m} = (-1)^{binom(m,2)} (even j) or (-1)^{binom(m+1,2)} (odd j) times "
      "A_{2k,j} (k+m)^{2(j-1)(k-j)}";
  const bool explicit_grid = params.contains("k") || params.contains("m");
  for (auto k64 : int_list(params, "k", {3, 4, 5})) {
    if (k64 < 3) throw std::invalid_argument("conj9 needs k >= 3");
    int k = static_cast<int>(k64);
    for (int j = 2; j <= k - 1; ++j) {
      const std::int64_t e = detail::even_lead_exponent(k, j);
      const int base_degree = detail::even_degree_formula(k, j);
      Json base_point = {{"k", k}, {"j", j}, {"m", 0}};
      auto base = detail::fit_for_claim(report, table, base_point, detail::even_fit(k, 0, j),
                                        base_degree, budget);
      if (!base) continue;
      Rat a = (base->is_zero() ? Rat(0) : base->lead()) / int_pow(k, e);
      report.artifacts["A"][key_of(2 * k, j)] = detail::rat_str(a);
      for (auto m : int_list(params, "m", {-2, -1, 0, 1, 2})) {
        if (m < -2) continue;
        const std::int64_t big = k + m;
        const std::int64_t residue = j + m;
        if (big < 1 || residue < 0 || residue >= big) continue;
        if (!explicit_grid && big > 5) continue;
        int sign = j % 2 == 0 ? sign_power(binomial(m, 2)) : sign_power(binomial(m + 1, 2));
        Rat expected = Rat(sign) * a * int_pow(big, e);
        PolyFitSpec fit{catalan(static_cast<int>(2 * big)), -m, big, residue,
                        binomial(big, 2).get_si(), 0};
        Json point = {{"k", k}, {"j", j}, {"m", m}};
        auto poly = detail::fit_for_claim(report, table, point, fit, base_degree, budget);
        if (!poly) continue;
        report.artifacts["polynomials"][key_of(k, j) + "," + std::to_string(m)] = poly_json(*poly);
        compare_lead(report, point, *poly, std::nullopt, expected, "shifted lead formula");
      }
    }
  }
}

// --- conj14 --------------------------------------------------------------

void run_conj14(ConjectureReport& report, DetTable& table, const Json& params,
                const Budget& budget) {
  report.claim =
      "lead (-1)^{k-1} p_{2k+1,0,2} = lead p_{2k+1,0,2k} = 2^{2k-2}(2^{2k-2}-1)B_{2k-2}/(2k-2)! "
      "(2k+1)^{2k-3}; lead p_{2k+1,0,k-1} = (-1)^{binom(k-2,2)} 2^{2k-4}B_{2k-4}/(2k-4)! "
      "(2k+1)^{3k-6}";
  bool tangent_all = true;
  for (auto k64 : int_list(params, "k", {2, 3, 4})) {
    if (k64 < 2) throw std::invalid_argument("conj14 needs k >= 2");
    int k = static_cast<int>(k64);
    const std::int64_t q = 2 * k + 1;
    Rat literal = int_pow(2, 2 * k - 2) * (int_pow(2, 2 * k - 2) - 1) * bernoulli(2 * k - 2) /
                  Rat(factorial(2 * k - 2)) * int_pow(q, 2 * k - 3);
    Rat tangent = tangent_coefficient(k - 1) * int_pow(q, 2 * k - 3);
    for (int residue : {2, 2 * k}) {
      Json point = {{"k", k}, {"j", residue}};
      auto poly = detail::fit_for_claim(report, table, point, detail::odd_fit(k, 0, residue),
                                        detail::odd_degree_formula(k, residue), budget);
      if (!poly) continue;
      RatPoly p = residue == 2 ? *poly * Rat(sign_power(k - 1)) : *poly;
      Rat lead = p.is_zero() ? Rat(0) : p.lead();
      report.artifacts["tangent_form"][key_of(k, residue)] = {
          {"lead", detail::rat_str(lead)},
          {"literal", detail::rat_str(literal)},
          {"tangent", detail::rat_str(tangent)}};
      if (lead != tangent) tangent_all = false;
      compare_lead(report, point, p, std::nullopt, literal, "signed Bernoulli lead formula");
    }

    const int j = k - 1;
    Rat second = Rat(sign_power(binomial(k - 2, 2))) * int_pow(2, 2 * k - 4) *
                 bernoulli(2 * k - 4) / Rat(factorial(2 * k - 4)) * int_pow(q, 3 * k - 6);
    Json point = {{"k", k}, {"j", j}};
    int degree = (j - 1) * (2 * k + 1 - 2 * j);
    auto poly = detail::fit_for_claim(report, table, point, detail::odd_fit(k, 0, j), degree, budget);
    if (!poly) continue;
    report.artifacts["polynomials"][key_of(k, j)] = poly_json(*poly);
    compare_lead(report, point, *poly, std::nullopt, second, "cot-type lead formula");
  }
  report.artifacts["tangent_form_holds"] = tangent_all;
  report.notes.push_back(
      "the first formula read with |B_{2k-2}|, i.e. tangent_coefficient(k-1) (2k+1)^{2k-3}, " +
      std::string(tangent_all ? "matches every fitted lead" : "does not match every fitted lead"));
}

// --- conj18 --------------------------------------------------------------

void run_conj18(ConjectureReport& report, DetTable& table, const Json& params,
                const Budget& budget) {
  report.claim =
      "q_{2k+2m,-m} = (-1)^{(k+m)n} d_{2k+2m,-m}((2k+2m)n+m+2) has degree 2k-3 and lead "
      "(-1)^{binom(m,2)+1}(k+m)^{2k-3}4^{2k-2}(2^{2k-2}-1)B_{2k-2}/(2k-2)!; "
      "d_{2k+2m+1,-m}((2k+2m+1)n+2+m) has degree 3k-3 and lead "
      "(-1)^{binom(m,2)+1}2^{3k-2}(2k+m+1)^{2k-2}B_{2k-2}/(2k-2)!";
  const bool explicit_grid = params.contains("k") || params.contains("m");
  bool amended_all = true;
  for (auto k64 : int_list(params, "k", {2, 3})) {
    if (k64 < 2) throw std::invalid_argument("conj18 needs k >= 2");
    int k = static_cast<int>(k64);
    Rat bern = bernoulli(2 * k - 2) / Rat(factorial(2 * k - 2));
    for (auto m : int_list(params, "m", {0, 1, 2})) {
      if (m < 0) continue;
      int sign = sign_power(Int(binomial(m, 2) + 1));

      const std::int64_t even = 2 * k + 2 * m;
      if (explicit_grid || even <= 10) {
        Rat expected = Rat(sign) * int_pow(k + m, 2 * k - 3) * int_pow(4, 2 * k - 2) *
                       (int_pow(2, 2 * k - 2) - 1) * bern;
        PolyFitSpec fit{central_binomial(static_cast<int>(even)), -m, even, m + 2, k + m, 0};
        Json point = {{"family", "even"}, {"k", k}, {"m", m}};
        if (auto poly = detail::fit_for_claim(report, table, point, fit, 2 * k - 3, budget)) {
          report.artifacts["polynomials"]["even," + key_of(k, m)] = poly_json(*poly);
          compare_lead(report, point, *poly, 2 * k - 3, expected, "even-family degree and lead");
        }
      }

      const std::int64_t odd = 2 * k + 2 * m + 1;
      if (explicit_grid || odd <= 10) {
        Rat literal = Rat(sign) * int_pow(2, 3 * k - 2) * int_pow(2 * k + m + 1, 2 * k - 2) * bern;
        Rat amended = Rat(sign) * int_pow(2, 3 * k - 2) * int_pow(odd, 2 * k - 2) * bern;
        PolyFitSpec fit{central_binomial(static_cast<int>(odd)), -m, odd, m + 2, 0, 0};
        Json point = {{"family", "odd"}, {"k", k}, {"m", m}};
        if (auto poly = detail::fit_for_claim(report, table, point, fit, 3 * k - 3, budget)) {
          Rat lead = poly->is_zero() ? Rat(0) : poly->lead();
          report.artifacts["polynomials"]["odd," + key_of(k, m)] = poly_json(*poly);
          report.artifacts["odd_amended"][key_of(k, m)] = {
              {"lead", detail::rat_str(lead)},
              {"literal", detail::rat_str(literal)},
              {"with_2k+2m+1", detail::rat_str(amended)}};
          if (lead != amended) amended_all = false;
          compare_lead(report, point, *poly, 3 * k - 3, literal, "odd-family degree and lead");
        }
      }
    }
  }
  report.artifacts["odd_amended_holds"] = amended_all;
  report.notes.push_back("odd-family lead with (2k+2m+1)^{2k-2} in place of (2k+m+1)^{2k-2} " +
                         std::string(amended_all ? "matches every fitted lead"
                                                 : "does not match every fitted lead"));
}

}  // namespace

namespace detail {

std::optional<RatPoly> fit_for_claim(ConjectureReport& report, DetTable& table, const Json& point,
                                     const PolyFitSpec& fit, int expected_degree,
                                     const Budget& budget) {
  const std::int64_t wanted = fit_samples_for_degree(expected_degree) + 2;
  bool clipped = false;
  auto result = budgeted_fit(table, fit, wanted, budget, clipped);
  if (result.poly) return result.poly;
  if (clipped) {
    report.undecided(point, "order budget allows fewer than " + std::to_string(wanted) +
                                " samples of " + to_string(fit.spec) + " shift " +
                                std::to_string(fit.m));
  } else {
    report.refute(point, -1, "polynomial of degree " + std::to_string(expected_degree),
                  "no polynomial fits " + std::to_string(wanted) + " samples",
                  "polynomial subsequence");
  }
  return std::nullopt;
}

ConjectureReport check_product_formula(DetTable& table, const Json& params,
                                       const Budget& budget) {
  auto report = new_report(
      "eq15", "D_{1,m}(n) = p_m(n) = prod_{1<=i<=j<=m-1} (2n+i+j)/(i+j); lead p_m = 1/Phi_m",
      params, budget);
  const std::int64_t n_max = int_value(params, "n_max", 12);
  for (auto m : int_list(params, "m", {0, 1, 2, 3, 4, 5, 6})) {
    if (m < 0) throw std::invalid_argument("eq15 needs m >= 0");
    Json point = {{"m", m}};
    std::int64_t top = std::min(n_max, budget.max_order);
    if (top < n_max) report.undecided(point, "n_max exceeds the order budget");
    auto dets = table.sequence(catalan(1), m, top + 1, budget.jobs);
    const auto before = report.counterexamples.size();
    for (std::int64_t n = 0; n <= top; ++n) {
      Rat p = product_formula_pm(m, n);
      if (p.get_den() != 1) {
        report.refute(point, n, "integer", detail::rat_str(p), "integrality of p_m(n)");
      }
      if (Rat(dets[static_cast<std::size_t>(n)]) != p) {
        report.refute(point, n, detail::rat_str(p), to_string(dets[static_cast<std::size_t>(n)]),
                      "D_{1,m}(n) = p_m(n)");
      }
    }
    if (report.counterexamples.size() == before) {
      report.verify(point, "n = 0.." + std::to_string(top));
    }
    if (m < 1) continue;
    Json lead_point = {{"m", m}, {"claim", "lead"}};
    int degree = static_cast<int>(binomial(m, 2).get_si());
    PolyFitSpec fit{catalan(1), m, 1, 0, 0, 0};
    if (auto poly = fit_for_claim(report, table, lead_point, fit, degree, budget)) {
      report.artifacts["polynomials"][std::to_string(m)] = poly_json(*poly);
      compare_lead(report, lead_point, *poly, degree, Rat(1) / Rat(phi(m)), "lead = 1/Phi_m");
    }
  }
  return report;
}

ConjectureReport check_polynomiality(DetTable& table, const Json& params, const Budget& budget) {
  auto report = new_report(
      "conj4",
      "(-1)^{n binom(k,2)} D_{2k,m}(kn+j) and (-1)^{nk} D_{2k+1,m}((2k+1)n+j) are polynomials in n",
      params, budget);
  const std::int64_t samples = int_value(params, "samples", 16);
  if (samples < kFitGuard + 1) throw std::invalid_argument("conj4 needs more samples");
  auto ms = int_list(params, "m", {-1, 0, 1});
  auto run = [&](const std::string& family, const PolyFitSpec& base, int k) {
    for (auto m : ms) {
      PolyFitSpec fit = base;
      fit.m = m;
      Json point = {{"family", family}, {"k", k}, {"m", m}, {"j", fit.residue}};
      bool clipped = false;
      auto result = budgeted_fit(table, fit, samples, budget, clipped);
      if (!result.poly) {
        report.undecided(point, clipped ? "order budget too small"
                                        : "no polynomial of degree <= " +
                                              std::to_string(samples - 1 - kFitGuard) + " fits");
        continue;
      }
      report.artifacts["degrees"][family + "," + std::to_string(k) + "," + std::to_string(m) +
                                  "," + std::to_string(fit.residue)] = result.degree();
      report.verify(point, "degree " + std::to_string(result.degree()) + " on " +
                               std::to_string(result.samples.size()) + " samples");
    }
  };
  for (auto k : int_list(params, "k_even", {1, 2, 3})) {
    if (k < 1) throw std::invalid_argument("conj4 needs k >= 1");
    for (int j = 0; j < k; ++j) run("even", even_fit(static_cast<int>(k), 0, j), static_cast<int>(k));
  }
  for (auto k : int_list(params, "k_odd", {1, 2})) {
    if (k < 1) throw std::invalid_argument("conj4 needs k >= 1");
    for (int j = 0; j <= 2 * k; ++j) run("odd", odd_fit(static_cast<int>(k), 0, j), static_cast<int>(k));
  }
  return report;
}

void check_shifted_even_family(ConjectureReport& report, DetTable& table, const Json& params,
                               const Budget& budget) {
  RatPoly shape = RatPoly{1, 1} * RatPoly{2, 1} * RatPoly{3, 2} * Rat(1, 6);
  for (auto m : int_list(params, "family_m", {-2, -1, 0, 1, 2})) {
    if (m < -2) continue;
    const std::int64_t big = 3 + m;
    Json point = {{"family", "p_{2(3+m),-m,2+m}"}, {"m", m}};
    PolyFitSpec fit{catalan(static_cast<int>(2 * big)), -m, big, 2 + m, binomial(big, 2).get_si(), 0};
    RatPoly expected = shape * Rat(sign_power(binomial(m + 2, 2)) * big * big);
    auto poly = fit_for_claim(report, table, point, fit, 3, budget);
    if (!poly) continue;
    report.artifacts["shifted_family"][std::to_string(m)] = poly_json(*poly);
    if (*poly != expected) {
      report.refute(point, -1, expected.to_string("n"), poly->to_string("n"),
                    "(-1)^{binom(m+2,2)} (3+m)^2 (n+1)(n+2)(2n+3)/6");
    } else {
      report.verify(point, "polynomial identity on " +
                               std::to_string(fit_samples_for_degree(3) + 2) + " samples");
    }
  }
  for (const auto& listing : reference::shifted_even_listings()) {
    compare_listing(report, table, listing, budget);
  }
}

}  // namespace detail

ConjectureReport check_degrees(DetTable& table, Parity parity, const Json& params,
                               const Budget& budget) {
  const bool even = parity == Parity::Even;
  auto report = new_report(even ? "conj6" : "conj12",
                           even ? "deg p_{2k,0,j} = (2j-1)(k-j) for k >= 2j-1, mirrored j -> k+1-j"
                                : "deg p_{2k+1,0,j} = (j-1)(2k+1-2j), mirrored j -> 2k+2-j, "
                                  "zero polynomial at j = k+1",
                           params, budget);
  const auto& ref = even ? reference::even_degree_table() : reference::odd_degree_table();
  report.artifacts["table"] = Json::object();
  for (auto row : int_list(params, "rows", even ? std::vector<std::int64_t>{6, 8, 10}
                                                : std::vector<std::int64_t>{3, 5, 7, 9})) {
    const int k = even ? even_row_k(row) : odd_row_k(row);
    const int j_last = even ? k - 1 : 2 * k;
    Json cells = Json::array();
    for (int j = 2; j <= j_last; ++j) {
      const int expected = even ? detail::even_degree_formula(k, j) : detail::odd_degree_formula(k, j);
      Json point = {{"row", row}, {"j", j}};
      auto fit = even ? detail::even_fit(k, 0, j) : detail::odd_fit(k, 0, j);
      auto poly = detail::fit_for_claim(report, table, point, fit, expected, budget);
      if (!poly) {
        cells.push_back(nullptr);
        continue;
      }
      const int degree = poly->degree();
      cells.push_back(degree);
      report.artifacts["polynomials"][key_of(row, j)] = poly_json(*poly);
      compare_reference(report, ref, row, j, Rat(degree));
      if (degree != expected) {
        report.refute(point, -1, std::to_string(expected), std::to_string(degree), "degree formula");
      } else {
        report.verify(point, "degree " + std::to_string(degree));
      }
    }
    report.artifacts["table"][std::to_string(row)] = cells;
  }
  if (!even) {
    report.notes.push_back(
        "the stated range is 2 <= j <= k-1; residues up to j = 2k are covered through the mirror "
        "statement");
  }
  return report;
}

ConjectureReport extract_leading_tables(DetTable& table, Parity parity, const Json& params,
                                        const Budget& budget) {
  const bool even = parity == Parity::Even;
  auto report = new_report(
      even ? "conj7" : "conj13",
      even ? "lead p_{2k,0,j} = A_{2k,j} k^{2(j-1)(k-j)} with A_{2k,j} Phi_k integral"
           : "lead p_{2k+1,0,j} = B_{2k+1,j} (2k+1)^{(j-1)(1+2(k-j))}, B_{2k+1,2k+2-j} = "
             "(-1)^{j-k-1} B_{2k+1,j}",
      params, budget);
  const auto& ref = even ? reference::even_lead_table() : reference::odd_lead_table();
  const std::string name = even ? "A" : "B";
  report.artifacts[name] = Json::object();
  if (even) report.artifacts["A_phi"] = Json::object();

  for (auto row : int_list(params, "rows", even ? std::vector<std::int64_t>{6, 8, 10}
                                                : std::vector<std::int64_t>{3, 5, 7, 9})) {
    const int k = even ? even_row_k(row) : odd_row_k(row);
    const int j_last = even ? k - 1 : 2 * k;
    const Int phi_k = phi(k);
    Json cells = Json::array();
    Json phi_cells = Json::array();
    std::vector<std::optional<Rat>> values(static_cast<std::size_t>(j_last + 1));
    for (int j = 2; j <= j_last; ++j) {
      Json point = {{"row", row}, {"j", j}};
      auto fit = even ? detail::even_fit(k, 0, j) : detail::odd_fit(k, 0, j);
      const int degree = even ? detail::even_degree_formula(k, j) : detail::odd_degree_formula(k, j);
      auto poly = detail::fit_for_claim(report, table, point, fit, degree, budget);
      if (!poly) {
        cells.push_back(nullptr);
        phi_cells.push_back(nullptr);
        continue;
      }
      const std::int64_t e = even ? detail::even_lead_exponent(k, j) : detail::odd_lead_exponent(k, j);
      Rat value = poly->is_zero() ? Rat(0) : poly->lead() / int_pow(even ? k : 2 * k + 1, e);
      values[static_cast<std::size_t>(j)] = value;
      cells.push_back(detail::rat_str(value));
      compare_reference(report, ref, row, j, value);
      const auto before = report.counterexamples.size();
      if (even) {
        Rat scaled = value * Rat(phi_k);
        phi_cells.push_back(detail::rat_str(scaled));
        if (scaled.get_den() != 1) {
          report.refute(point, -1, "integer multiple of 1/Phi_" + std::to_string(k),
                        detail::rat_str(scaled) + "/Phi_" + std::to_string(k), "A_{2k,j} Phi_k integral");
        }
        const Rat* printed = reference_cell(reference::even_lead_phi_table(), row, j);
        if (printed && *printed != scaled) {
          bool known = false;
          for (const auto& [cell, text] : reference::even_lead_phi_misprints()) {
            if (cell.first == row && cell.second == j) {
              report.notes.push_back(text + " (computed " + detail::rat_str(scaled) + "/Phi_" +
                                     std::to_string(k) + ")");
              known = true;
            }
          }
          if (!known) {
            report.refute(point, -1, detail::rat_str(*printed), detail::rat_str(scaled),
                          "reference table conj7-phi");
          }
        }
      }
      if (report.counterexamples.size() == before) {
        report.verify(point, name + " = " + detail::rat_str(value));
      }
    }
    if (!even) {
      for (int j = k + 1; j <= 2 * k; ++j) {
        const auto& hi = values[static_cast<std::size_t>(j)];
        const auto& lo = values[static_cast<std::size_t>(2 * k + 2 - j)];
        if (!hi || !lo) continue;
        Rat expected = Rat(sign_power(j - k - 1)) * *lo;
        if (*hi != expected) {
          report.refute({{"row", row}, {"j", j}}, -1, detail::rat_str(expected), detail::rat_str(*hi),
                        "mirror relation B_{2k+1,2k+2-j} = (-1)^{j-k-1} B_{2k+1,j}");
        }
      }
    }
    report.artifacts[name][std::to_string(row)] = cells;
    if (even) report.artifacts["A_phi"][std::to_string(row)] = phi_cells;
  }
  if (!even) {
    report.notes.push_back(
        "the mirror rule's three-index symbol B_{2k+1,0,j} is read as B_{2k+1,j}; the normalizer "
        "for j > k uses the mirrored index 2k+2-j");
  }
  return report;
}

ConjectureReport check_bernoulli_leading(DetTable& table, const std::string& which,
                                         const Json& params, const Budget& budget) {
  auto report = new_report(which, "", params, budget);
  if (which == "conj8") {
    run_conj8(report, table, params, budget);
  } else if (which == "conj9") {
    run_conj9(report, table, params, budget);
  } else if (which == "conj14") {
    run_conj14(report, table, params, budget);
  } else if (which == "conj18") {
    run_conj18(report, table, params, budget);
  } else {
    throw std::invalid_argument("unknown Bernoulli-lead checker: " + which);
  }
  return report;
}

}  // namespace hankelcat
