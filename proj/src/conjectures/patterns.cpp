#include <algorithm>
#include <map>
#include <stdexcept>

#include "common.hpp"

namespace hankelcat {

namespace detail {

std::string rat_str(const Rat& r) { return r.get_str(); }

void compare_listing(ConjectureReport& report, DetTable& table,
                     const reference::Listing& listing, const Budget& budget) {
  Json point = {{"listing", listing.label}};
  std::vector<HankelKey> keys;
  for (std::size_t n = 0; n < listing.values.size(); ++n) {
    std::int64_t order = listing.modulus * static_cast<std::int64_t>(n) + listing.offset;
    if (order > budget.max_order) break;
    keys.push_back({listing.spec, listing.m, order});
  }
  auto vals = table.values(keys, budget.jobs);
  const auto before = report.counterexamples.size();
  for (std::size_t n = 0; n < vals.size(); ++n) {
    Int printed(listing.values[n]);
    if (vals[n] == printed) continue;
    bool misprint = std::find(listing.misprints.begin(), listing.misprints.end(), n) !=
                    listing.misprints.end();
    if (misprint) {
      report.notes.push_back("reference listing " + listing.label + " shows " + to_string(printed) +
                             " at index " + std::to_string(n) + "; computed value is " +
                             to_string(vals[n]) + " (presumed misprint, computed value pinned)");
    } else {
      report.refute(point, static_cast<std::int64_t>(n), to_string(printed), to_string(vals[n]),
                    "reference listing " + listing.label);
    }
  }
  if (vals.size() < listing.values.size()) {
    report.undecided(point, "listing extends beyond the order budget");
  }
  if (report.counterexamples.size() == before) {
    report.verify(point, "indices 0.." + std::to_string(static_cast<long>(vals.size()) - 1));
  }
}

FitResult budgeted_fit(DetTable& table, PolyFitSpec fit, std::int64_t wanted,
                       const Budget& budget, bool& clipped) {
  std::int64_t affordable = (budget.max_order - fit.residue) / fit.modulus + 1;
  clipped = affordable < wanted;
  fit.max_n = std::max<std::int64_t>(0, std::min(wanted, affordable) - 1);
  return fit_subsequence_poly(table, fit, budget.jobs);
}

int even_degree_formula(int k, int j) {
  if (k < 2 * j - 1) j = k + 1 - j;
  return (2 * j - 1) * (k - j);
}

int odd_degree_formula(int k, int j) {
  if (j == k + 1) return -1;
  if (j > k + 1) j = 2 * k + 2 - j;
  return (j - 1) * (2 * k + 1 - 2 * j);
}

std::int64_t even_lead_exponent(int k, int j) { return 2LL * (j - 1) * (k - j); }

std::int64_t odd_lead_exponent(int k, int j) {
  if (j > k) j = 2 * k + 2 - j;
  return static_cast<std::int64_t>(j - 1) * (1 + 2 * (k - j));
}

PolyFitSpec even_fit(int k, std::int64_t m, int j) {
  return {catalan(2 * k), m, k, j, binomial(k, 2).get_si(), 0};
}

PolyFitSpec odd_fit(int k, std::int64_t m, int j) {
  return {catalan(2 * k + 1), m, 2 * k + 1, j, k, 0};
}

}  // namespace detail

namespace {

Int signed_value(int sign, const Int& magnitude) { return sign > 0 ? magnitude : Int(-magnitude); }

Int ipow(std::int64_t base, std::int64_t e) { return power(Int(static_cast<long>(base)), e); }

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

std::vector<PatternInstance> thm2_instances(const Json& params) {
  std::vector<PatternInstance> out;
  auto order_max = int_value(params, "order_max", 40);
  for (auto k : int_list(params, "k", {1, 2, 3, 4, 5})) {
    if (k < 1) throw std::invalid_argument("thm2 needs k >= 1");
    Int b = binomial(k, 2);
    out.push_back({{{"k", k}},
                   catalan(static_cast<int>(2 * k)),
                   1 - k,
                   k,
                   ceil_div(order_max + 1, k) - 1,
                   {{"D(kn) = (-1)^{n binom(k,2)}", 0,
                     [b](std::int64_t n) { return Int(sign_power(Int(b * n))); }}},
                   true});
  }
  return out;
}

std::vector<PatternInstance> thm3_instances(const Json& params, bool first) {
  std::vector<PatternInstance> out;
  auto order_max = int_value(params, "order_max", 36);
  for (auto k : int_list(params, "k", {1, 2, 3, 4})) {
    if (k < 1) throw std::invalid_argument("thm3 needs k >= 1");
    const std::int64_t mod = 2 * k + 1;
    std::int64_t second_offset = first ? k + 1 : k;
    Int second_sign = first ? binomial(k + 1, 2) : binomial(k, 2);
    out.push_back(
        {{{"k", k}},
         catalan(static_cast<int>(mod)),
         first ? -k : 1 - k,
         mod,
         ceil_div(order_max + 1, mod) - 1,
         {{"D((2k+1)n) = (-1)^{kn}", 0,
           [k](std::int64_t n) { return Int(sign_power(k * n)); }},
          {first ? "D((2k+1)n+k+1) = (-1)^{kn+binom(k+1,2)}" : "D((2k+1)n+k) = (-1)^{kn+binom(k,2)}",
           second_offset,
           [k, second_sign](std::int64_t n) { return Int(sign_power(Int(second_sign + k * n))); }}},
         true});
  }
  return out;
}

std::vector<PatternInstance> conj5_instances(const Json& params) {
  std::vector<PatternInstance> out;
  const bool explicit_grid = params.contains("k") || params.contains("m");
  auto n_max = int_value(params, "n_max", 6);
  for (auto k : int_list(params, "k", {1, 2, 3, 4})) {
    for (auto m : int_list(params, "m", {-1, 0, 1, 2, 3})) {
      if (k < 1 || m < -1) continue;
      const std::int64_t big = k + m;
      if (big < 1) continue;
      if (!explicit_grid && 2 * big > 10) continue;
      Int b = binomial(big, 2);
      int tail_sign = sign_power(binomial(m + 1, 2));
      out.push_back(
          {{{"k", k}, {"m", m}},
           catalan(static_cast<int>(2 * big)),
           -m,
           big,
           n_max,
           {{"(-1)^{n binom(k+m,2)} D((k+m)n) = (n+1)^{k-1}", 0,
             [b, k](std::int64_t n) {
               return signed_value(sign_power(Int(b * n)), ipow(n + 1, k - 1));
             }},
            {"(-1)^{n binom(k+m,2)} D((k+m)n+1+m) = (-1)^{binom(m+1,2)} (n+1)^{k-1}", 1 + m,
             [b, k, tail_sign](std::int64_t n) {
               return signed_value(sign_power(Int(b * n)) * tail_sign, ipow(n + 1, k - 1));
             }}},
           false});
    }
  }
  return out;
}

std::vector<PatternInstance> conj10_instances(const Json& params) {
  std::vector<PatternInstance> out;
  auto n_max = int_value(params, "n_max", 8);
  for (auto k : int_list(params, "k", {1, 2, 3, 4})) {
    if (k < 1) throw std::invalid_argument("conj10 needs k >= 1");
    auto alt = [k](std::int64_t n) { return Int(sign_power(k * n)); };
    out.push_back({{{"k", k}},
                   catalan(static_cast<int>(2 * k + 1)),
                   0,
                   2 * k + 1,
                   n_max,
                   {{"D((2k+1)n) = (-1)^{kn}", 0, alt},
                    {"D((2k+1)n+1) = (-1)^{kn}", 1, alt},
                    {"D((2k+1)n+k+1) = 0", k + 1, [](std::int64_t) { return Int(0); }}},
                   false});
  }
  return out;
}

std::vector<PatternInstance> conj11_instances(const Json& params) {
  std::vector<PatternInstance> out;
  auto n_max = int_value(params, "n_max", 6);
  for (auto k : int_list(params, "k", {1, 2, 3, 4})) {
    if (k < 1) throw std::invalid_argument("conj11 needs k >= 1");
    std::vector<std::int64_t> ms_default;
    for (std::int64_t m = 0; m <= k + 1; ++m) ms_default.push_back(m);
    for (auto m : int_list(params, "m", ms_default)) {
      if (m < 0 || m > k + 1) continue;
      Int b = binomial(k, 2);
      out.push_back(
          {{{"k", k}, {"m", m}},
           catalan(static_cast<int>(2 * k + 1)),
           m - k + 1,
           2 * k + 1,
           n_max,
           {{"D((2k+1)n+k) = (-1)^{kn+binom(k,2)} (2k+1)^m (n+1)^m", k,
             [k, m, b](std::int64_t n) {
               return signed_value(sign_power(Int(b + k * n)), ipow(2 * k + 1, m) * ipow(n + 1, m));
             }}},
           false});
    }
  }
  return out;
}

std::vector<PatternInstance> conj17_instances(const Json& params) {
  std::vector<PatternInstance> out;
  const bool explicit_grid = params.contains("k") || params.contains("m");
  auto n_max = int_value(params, "n_max", 5);
  for (auto k : int_list(params, "k", {1, 2, 3})) {
    for (auto m : int_list(params, "m", {-1, 0, 1, 2, 3})) {
      if (k < 1 || m < -1) continue;
      const std::int64_t odd = 2 * k + 2 * m + 1;
      if (odd >= 1 && (explicit_grid || odd <= 9)) {
        int s2 = sign_power(binomial(m + 1, 2));
        int s3 = sign_power(binomial(m + k + 1, 2));
        out.push_back(
            {{{"family", "odd"}, {"k", k}, {"m", m}},
             central_binomial(static_cast<int>(odd)),
             -m,
             odd,
             n_max,
             {{"d((2k+2m+1)n) = (2n+1)^k", 0, [k](std::int64_t n) { return ipow(2 * n + 1, k); }},
              {"d((2k+2m+1)n+1+m) = (-1)^{binom(m+1,2)} (2n+1)^k", 1 + m,
               [k, s2](std::int64_t n) { return signed_value(s2, ipow(2 * n + 1, k)); }},
              {"d((2k+2m+1)n+k+m+1) = (-1)^{binom(m+k+1,2)} 4^k (n+1)^k", k + m + 1,
               [k, s3](std::int64_t n) { return signed_value(s3, ipow(4, k) * ipow(n + 1, k)); }}},
             false});
      }
      const std::int64_t even = 2 * k + 2 * m;
      if (even >= 1 && (explicit_grid || even <= 10)) {
        Int s5 = binomial(m + 1, 2);
        out.push_back(
            {{{"family", "even"}, {"k", k}, {"m", m}},
             central_binomial(static_cast<int>(even)),
             -m,
             even,
             n_max,
             {{"d((2k+2m)n) = (-1)^{(k+m)n}", 0,
               [k, m](std::int64_t n) { return Int(sign_power((k + m) * n)); }},
              {"d((2k+2m)n+m+1) = (-1)^{binom(m+1,2)+(k+m)n}", m + 1,
               [k, m, s5](std::int64_t n) { return Int(sign_power(Int(s5 + (k + m) * n))); }}},
             false});
      }
    }
  }
  return out;
}

}  // namespace

const std::vector<PatternSpec>& pattern_registry() {
  static const std::vector<PatternSpec> data = {
      {"thm2", "D_{2k,1-k}(kn) = (-1)^{n binom(k,2)}, D_{2k,1-k}(n) = 0 otherwise", thm2_instances},
      {"thm3a",
       "D_{2k+1,-k}((2k+1)n) = (-1)^{kn}, D_{2k+1,-k}((2k+1)n+k+1) = (-1)^{kn+binom(k+1,2)}, zero "
       "otherwise",
       [](const Json& p) { return thm3_instances(p, true); }},
      {"thm3b",
       "D_{2k+1,1-k}((2k+1)n) = (-1)^{kn}, D_{2k+1,1-k}((2k+1)n+k) = (-1)^{kn+binom(k,2)}, zero "
       "otherwise",
       [](const Json& p) { return thm3_instances(p, false); }},
      {"conj5",
       "(-1)^{n binom(k+m,2)} D_{2k+2m,-m}((k+m)n) = (n+1)^{k-1} and at (k+m)n+1+m the same times "
       "(-1)^{binom(m+1,2)}",
       conj5_instances},
      {"conj10", "D_{2k+1,0}((2k+1)n) = D_{2k+1,0}((2k+1)n+1) = (-1)^{kn}, D_{2k+1,0}((2k+1)n+k+1) = 0",
       conj10_instances},
      {"conj11", "D_{2k+1,m-k+1}((2k+1)n+k) = (-1)^{kn+binom(k,2)} (2k+1)^m (n+1)^m, 0 <= m <= k+1",
       conj11_instances},
      {"conj17", "closed forms of d_{2k+2m+1,-m} and d_{2k+2m,-m} on progressions, m >= -1",
       conj17_instances},
  };
  return data;
}

const PatternSpec& find_pattern(const std::string& id) {
  for (const auto& p : pattern_registry())
    if (p.id == id) return p;
  throw std::invalid_argument("unknown pattern: " + id);
}

ConjectureReport check_pattern(DetTable& table, const PatternSpec& pattern, const Json& params,
                               const Budget& budget) {
  ConjectureReport report;
  report.id = pattern.id;
  report.claim = pattern.claim;
  report.params = params.is_object() ? params : Json::object();
  report.params["max_order"] = budget.max_order;

  for (const auto& inst : pattern.instantiate(params)) {
    struct Expectation {
      Int value;
      std::string label;
    };
    std::map<std::int64_t, Expectation> expected;
    std::vector<std::int64_t> conflicts;
    for (const auto& c : inst.cases) {
      for (std::int64_t n = 0; n <= inst.n_max; ++n) {
        std::int64_t order = inst.modulus * n + c.offset;
        Int v = c.value(n);
        auto [it, fresh] = expected.try_emplace(order, Expectation{v, c.label});
        if (!fresh && it->second.value != v) conflicts.push_back(order);
      }
    }
    if (!conflicts.empty()) {
      std::string orders;
      for (auto o : conflicts) orders += (orders.empty() ? "" : ", ") + std::to_string(o);
      report.notes.push_back("at " + inst.point.dump() +
                             " overlapping cases predict different values at orders " + orders +
                             "; the first listed case is checked there");
    }
    if (inst.zero_elsewhere) {
      for (std::int64_t order = 0; order < inst.modulus * (inst.n_max + 1); ++order) {
        expected.try_emplace(order, Expectation{Int(0), "zero elsewhere"});
      }
    }

    std::vector<HankelKey> keys;
    std::vector<const Expectation*> wanted;
    std::int64_t highest = -1;
    bool clipped = false;
    for (const auto& [order, exp] : expected) {
      if (order > budget.max_order) {
        clipped = true;
        continue;
      }
      keys.push_back({inst.spec, inst.m, order});
      wanted.push_back(&exp);
      highest = std::max(highest, order);
    }
    auto vals = table.values(keys, budget.jobs);
    const auto before = report.counterexamples.size();
    for (std::size_t i = 0; i < keys.size(); ++i) {
      if (vals[i] != wanted[i]->value) {
        report.refute(inst.point, keys[i].n, to_string(wanted[i]->value), to_string(vals[i]),
                      wanted[i]->label);
      }
    }
    if (clipped) {
      report.undecided(inst.point, "requested orders exceed max_order " +
                                       std::to_string(budget.max_order));
    }
    if (report.counterexamples.size() != before) continue;
    report.verify(inst.point, to_string(inst.spec) + " shift " + std::to_string(inst.m) +
                                  ", orders checked up to " + std::to_string(highest));
  }
  return report;
}

}  // namespace hankelcat
