#include <stdexcept>

#include "common.hpp"

namespace hankelcat {

namespace {

using Listings = const std::vector<reference::Listing>& (*)();

CheckerInfo pattern_checker(const std::string& id, const std::string& summary,
                            std::function<bool(const reference::Listing&)> pick = {},
                            Listings listings = nullptr) {
  return {id, summary, [id, pick, listings](DetTable& t, const Json& p, const Budget& b) {
            auto report = check_pattern(t, find_pattern(id), p, b);
            if (listings) {
              for (const auto& l : listings()) {
                if (!pick || pick(l)) detail::compare_listing(report, t, l, b);
              }
            }
            return report;
          }};
}

bool thm3_display(const reference::Listing& l, bool first) {
  const std::int64_t k = (l.spec.k - 1) / 2;
  return l.m == (first ? -k : 1 - k);
}

}  // namespace

const std::vector<CheckerInfo>& checker_registry() {
  static const std::vector<CheckerInfo> data = {
      {"eq5", "translation D_{1,-m} = +-T_{m+1} D_{1,m+1}",
       [](DetTable& t, const Json& p, const Budget& b) {
         return check_translation_family(t, "eq5", p, b);
       }},
      {"eq15", "D_{1,m}(n) equals the product formula p_m(n); lead 1/Phi_m",
       detail::check_product_formula},
      pattern_checker("thm2", "D_{2k,1-k} periodic pattern"),
      pattern_checker("thm3a", "D_{2k+1,-k} periodic pattern",
                      [](const reference::Listing& l) { return thm3_display(l, true); },
                      reference::periodic_displays),
      pattern_checker("thm3b", "D_{2k+1,1-k} periodic pattern",
                      [](const reference::Listing& l) { return thm3_display(l, false); },
                      reference::periodic_displays),
      {"conj1-even", "translation relations for D_{2k,m}",
       [](DetTable& t, const Json& p, const Budget& b) {
         return check_translation_family(t, "conj1-even", p, b);
       }},
      {"conj1-odd", "translation relations for D_{2k-1,m}",
       [](DetTable& t, const Json& p, const Budget& b) {
         return check_translation_family(t, "conj1-odd", p, b);
       }},
      {"conj4", "residue-class subsequences are polynomials in n", detail::check_polynomiality},
      {"conj5", "D_{2k+2m,-m} closed forms and the (3+m)^2 polynomial family",
       [](DetTable& t, const Json& p, const Budget& b) {
         auto report = check_pattern(t, find_pattern("conj5"), p, b);
         detail::check_shifted_even_family(report, t, p, b);
         return report;
       }},
      {"conj6", "degrees of p_{2k,0,j}",
       [](DetTable& t, const Json& p, const Budget& b) { return check_degrees(t, Parity::Even, p, b); }},
      {"conj7", "leading coefficients A_{2k,j} and their Phi_k normalization",
       [](DetTable& t, const Json& p, const Budget& b) {
         return extract_leading_tables(t, Parity::Even, p, b);
       }},
      {"conj8", "Bernoulli leads of p_{2k,0,2} and p_{2k,0,k-1}",
       [](DetTable& t, const Json& p, const Budget& b) {
         return check_bernoulli_leading(t, "conj8", p, b);
       }},
      {"conj9", "leading coefficients of shifted p_{2(k+m),-m,j+m}",
       [](DetTable& t, const Json& p, const Budget& b) {
         return check_bernoulli_leading(t, "conj9", p, b);
       }},
      pattern_checker("conj10", "D_{2k+1,0} at residues 0, 1 and k+1", {},
                      reference::odd_zero_shift_listings),
      pattern_checker("conj11", "D_{2k+1,m-k+1}((2k+1)n+k) closed form", {},
                      reference::progression_listings),
      {"conj12", "degrees of p_{2k+1,0,j}",
       [](DetTable& t, const Json& p, const Budget& b) { return check_degrees(t, Parity::Odd, p, b); }},
      {"conj13", "leading coefficients B_{2k+1,j} and the mirror rule",
       [](DetTable& t, const Json& p, const Budget& b) {
         return extract_leading_tables(t, Parity::Odd, p, b);
       }},
      {"conj14", "tangent and cotangent type leads of p_{2k+1,0,j}",
       [](DetTable& t, const Json& p, const Budget& b) {
         return check_bernoulli_leading(t, "conj14", p, b);
       }},
      {"conj15", "generating-function numerators P_{2k,m}",
       [](DetTable& t, const Json& p, const Budget& b) { return check_gf(t, Parity::Even, p, b); }},
      {"conj16", "generating-function numerators Q_{2k-1,m}",
       [](DetTable& t, const Json& p, const Budget& b) { return check_gf(t, Parity::Odd, p, b); }},
      pattern_checker("conj17", "binomial-family closed forms on progressions"),
      {"conj18", "binomial-family Bernoulli leads",
       [](DetTable& t, const Json& p, const Budget& b) {
         return check_bernoulli_leading(t, "conj18", p, b);
       }},
      {"q1-relation", "Q_{1,m+1} = (x-1)^{m+1} P_{2,m}", detail::check_q1_relation},
  };
  return data;
}

bool has_checker(const std::string& id) {
  for (const auto& c : checker_registry())
    if (c.id == id) return true;
  return false;
}

ConjectureReport run_checker(const std::string& id, DetTable& table, const Json& params,
                             const Budget& budget) {
  for (const auto& c : checker_registry())
    if (c.id == id) return c.run(table, params, budget);
  throw std::invalid_argument("unknown checker: " + id);
}

}  // namespace hankelcat
