#include <sstream>
#include <stdexcept>

#include "hankelcat/conjectures.hpp"
#include "hankelcat/rat_poly.hpp"

namespace hankelcat {

std::string to_string(Status s) {
  switch (s) {
    case Status::Consistent: return "consistent";
    case Status::Refuted: return "refuted";
    case Status::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

Status ConjectureReport::status() const {
  if (!counterexamples.empty()) return Status::Refuted;
  if (!inconclusive.empty()) return Status::Inconclusive;
  return Status::Consistent;
}

void ConjectureReport::verify(Json point, std::string range) {
  verified.push_back({std::move(point), std::move(range)});
}

void ConjectureReport::refute(Json point, std::int64_t index, const std::string& expected,
                              const std::string& actual, std::string what) {
  counterexamples.push_back({std::move(point), index, expected, actual, std::move(what)});
}

void ConjectureReport::undecided(Json point, std::string reason) {
  inconclusive.push_back({std::move(point), std::move(reason)});
}

Budget parse_budget(const std::string& text) {
  Budget b;
  std::stringstream ss(text);
  std::string item;
  bool any = false;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    any = true;
    auto eq = item.find('=');
    if (eq == std::string::npos) {
      if (item == "default") {
        b.max_order = Budget{}.max_order;
      } else if (item == "quick") {
        b.max_order = 48;
      } else if (item == "large") {
        b.max_order = 160;
      } else {
        throw std::invalid_argument("unknown budget preset: " + item);
      }
      continue;
    }
    std::string key = item.substr(0, eq);
    std::int64_t value = 0;
    try {
      std::size_t used = 0;
      value = std::stoll(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw std::invalid_argument("bad budget value: " + item);
    }
    if (value <= 0) throw std::invalid_argument("budget values must be positive: " + item);
    if (key == "max_order") {
      b.max_order = value;
    } else if (key == "truncation") {
      b.truncation = value;
    } else if (key == "jobs") {
      b.jobs = static_cast<unsigned>(value);
    } else {
      throw std::invalid_argument("unknown budget key: " + key);
    }
  }
  if (!any) throw std::invalid_argument("empty budget");
  return b;
}

std::vector<std::int64_t> int_list(const Json& params, const std::string& key,
                                   std::vector<std::int64_t> fallback) {
  if (!params.is_object() || !params.contains(key)) return fallback;
  const Json& v = params.at(key);
  if (v.is_number_integer()) return {v.get<std::int64_t>()};
  if (!v.is_array()) throw std::invalid_argument("parameter '" + key + "' must be an integer list");
  std::vector<std::int64_t> out;
  for (const auto& x : v) {
    if (!x.is_number_integer()) {
      throw std::invalid_argument("parameter '" + key + "' must be an integer list");
    }
    out.push_back(x.get<std::int64_t>());
  }
  return out;
}

std::int64_t int_value(const Json& params, const std::string& key, std::int64_t fallback) {
  if (!params.is_object() || !params.contains(key)) return fallback;
  const Json& v = params.at(key);
  if (!v.is_number_integer()) throw std::invalid_argument("parameter '" + key + "' must be an integer");
  return v.get<std::int64_t>();
}

Json poly_json(const RatPoly& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(to_fraction_string(c));
  return arr;
}

}  // namespace hankelcat
