#include <stdexcept>

#include "common.hpp"

namespace hankelcat {

namespace {

struct NamedClaim {
  Json point;
  TranslationClaim claim;
};

std::vector<NamedClaim> eq5_claims(const Json& params) {
  std::vector<NamedClaim> out;
  for (auto m : int_list(params, "m", {0, 1, 2, 3, 4})) {
    if (m < 0) continue;
    out.push_back({{{"m", m}},
                   {catalan(1), -m, catalan(1), m + 1, m + 1, sign_power(binomial(m + 1, 2))}});
  }
  return out;
}

std::vector<NamedClaim> even_claims(const Json& params) {
  std::vector<NamedClaim> out;
  for (auto k : int_list(params, "k", {1, 2, 3, 4})) {
    if (k < 1) throw std::invalid_argument("translation family needs k >= 1");
    for (auto m : int_list(params, "m", {0, 1, 2, 3})) {
      if (m < 0) continue;
      auto spec = catalan(static_cast<int>(2 * k));
      out.push_back({{{"k", k}, {"m", m}},
                     {spec, 1 - k - m, spec, 1 - k + m, m + k, sign_power(binomial(m + k, 2))}});
    }
  }
  return out;
}

std::vector<NamedClaim> odd_claims(const Json& params, ConjectureReport& report) {
  std::vector<NamedClaim> out;
  for (auto k : int_list(params, "k", {2, 3, 4, 5})) {
    if (k < 1) throw std::invalid_argument("translation family needs k >= 1");
    auto spec = catalan(static_cast<int>(2 * k - 1));
    for (auto m : int_list(params, "m", {0, 1, 2, 3})) {
      if (m < 0) continue;
      std::int64_t r = m + k - 1;
      if (r < 1) {
        report.notes.push_back("k=" + std::to_string(k) + ", m=" + std::to_string(m) +
                               " gives shift 0; no translation to check");
        continue;
      }
      out.push_back({{{"k", k}, {"m", m}},
                     {spec, 2 - k - m, spec, 1 - k + m, r, sign_power(binomial(r, 2))}});
      if (m == 0) {
        // Companion relation of the m = 0 pair: D_{2k-1,1-k} = (-1)^{binom(k,2)} T_k D_{2k-1,2-k}.
        out.push_back({{{"k", k}, {"m", 0}, {"relation", "companion"}},
                       {spec, 1 - k, spec, 2 - k, k, sign_power(binomial(k, 2))}});
      }
    }
  }
  return out;
}

}  // namespace

ConjectureReport check_translation_family(DetTable& table, const std::string& id,
                                          const Json& params, const Budget& budget) {
  ConjectureReport report;
  report.id = id;
  report.params = params.is_object() ? params : Json::object();
  report.params["max_order"] = budget.max_order;

  std::vector<NamedClaim> claims;
  if (id == "eq5") {
    report.claim = "D_{1,-m} = (-1)^{binom(m+1,2)} T_{m+1} D_{1,m+1}";
    claims = eq5_claims(params);
  } else if (id == "conj1-even") {
    report.claim = "D_{2k,1-k-m} = (-1)^{binom(m+k,2)} T_{m+k} D_{2k,1-k+m}";
    claims = even_claims(params);
  } else if (id == "conj1-odd") {
    report.claim = "D_{2k-1,2-k-m} = (-1)^{binom(m+k-1,2)} T_{m+k-1} D_{2k-1,1-k+m}";
    claims = odd_claims(params, report);
  } else {
    throw std::invalid_argument("unknown translation family: " + id);
  }
  report.notes.push_back(
      "T_r prefixes r entries (1, 0, ..., 0); the sign applies to the translated tail only");

  std::int64_t N = int_value(params, "N", 24);
  for (auto& nc : claims) {
    std::int64_t n_eff = std::min<std::int64_t>(N, budget.max_order + 1);
    if (n_eff < nc.claim.r) {
      report.undecided(nc.point, "order budget below the translation shift");
      continue;
    }
    auto result = check_translation(table, nc.claim, n_eff, budget.jobs);
    if (result.first_failure) {
      const auto& f = *result.first_failure;
      report.refute(nc.point, f.index, to_string(f.rhs), to_string(f.lhs), report.claim);
      continue;
    }
    if (n_eff < N) report.undecided(nc.point, "N exceeds the order budget");
    Json point = nc.point;
    point["r"] = nc.claim.r;
    point["sign"] = nc.claim.sign;
    report.verify(point, "indices 0.." + std::to_string(result.holds_through - 1));
  }

  if (id == "conj1-even" || id == "conj1-odd") {
    for (const auto& listing : reference::translation_listings()) {
      bool odd = listing.spec.k % 2 == 1;
      if (odd == (id == "conj1-odd")) detail::compare_listing(report, table, listing, budget);
    }
  }
  return report;
}

}  // namespace hankelcat
