#pragma once

// Registry of checkers, one per theorem or conjecture about the determinant
// tables. Each checker evaluates a parameter grid against exact expected
// values and produces a ConjectureReport.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hankelcat/analysis.hpp"
#include "hankelcat/exact.hpp"
#include "hankelcat/hankel.hpp"

namespace hankelcat {

using Json = nlohmann::ordered_json;

enum class Status { Consistent, Refuted, Inconclusive };

std::string to_string(Status s);

struct VerifiedRange {
  Json point;
  std::string range;
};

struct Counterexample {
  Json point;
  std::int64_t index;
  std::string expected;
  std::string actual;
  std::string claim;
};

struct InconclusiveMark {
  Json point;
  std::string reason;
};

/// Status is derived: refuted iff there is a counterexample, otherwise
/// inconclusive iff some point could not be verified within budget.
struct ConjectureReport {
  std::string id;
  std::string claim;
  Json params = Json::object();
  std::vector<VerifiedRange> verified;
  std::vector<Counterexample> counterexamples;
  std::vector<InconclusiveMark> inconclusive;
  Json artifacts = Json::object();
  std::vector<std::string> notes;

  Status status() const;

  void verify(Json point, std::string range);
  void refute(Json point, std::int64_t index, const std::string& expected,
              const std::string& actual, std::string claim);
  void undecided(Json point, std::string reason);
};

/// Resource limits. max_order bounds every Hankel matrix order requested.
struct Budget {
  std::int64_t max_order = 96;
  std::optional<std::int64_t> truncation;  // GF truncation override
  unsigned jobs = 0;                       // 0 = hardware concurrency
};

/// "default", "quick", "large", or comma-separated key=value overrides
/// (max_order, truncation, jobs) applied on top of a preset, e.g.
/// "quick,max_order=60". Throws std::invalid_argument.
Budget parse_budget(const std::string& text);

// ---------------------------------------------------------------------------
// Closed-form periodic patterns

/// Det(modulus * n + offset) = value(n) for n = 0..n_max.
struct PatternCase {
  std::string label;
  std::int64_t offset;
  std::function<Int(std::int64_t n)> value;
};

struct PatternInstance {
  Json point;
  SeqSpec spec;
  std::int64_t m;
  std::int64_t modulus;
  std::int64_t n_max;
  std::vector<PatternCase> cases;
  /// Orders not covered by any case must vanish.
  bool zero_elsewhere;
};

struct PatternSpec {
  std::string id;
  std::string claim;
  /// Expands grid parameters (with defaults) into concrete instances.
  std::function<std::vector<PatternInstance>(const Json& params)> instantiate;
};

const std::vector<PatternSpec>& pattern_registry();
const PatternSpec& find_pattern(const std::string& id);

/// Compares every case of every instance; orders beyond budget.max_order make
/// that instance inconclusive.
ConjectureReport check_pattern(DetTable& table, const PatternSpec& pattern, const Json& params,
                               const Budget& budget);

// ---------------------------------------------------------------------------
// Checker families

/// Translation relations: eq5 (k = 1), conj1-even, conj1-odd.
ConjectureReport check_translation_family(DetTable& table, const std::string& id,
                                          const Json& params, const Budget& budget);

/// Degree claims for p_{2k,0,j} (even) or p_{2k+1,0,j} (odd).
ConjectureReport check_degrees(DetTable& table, Parity parity, const Json& params,
                               const Budget& budget);

/// A_{2k,j} (even) or B_{2k+1,j} (odd) leading coefficient tables.
ConjectureReport extract_leading_tables(DetTable& table, Parity parity, const Json& params,
                                        const Budget& budget);

/// Leading coefficients given by Bernoulli numbers; case is one of conj8,
/// conj9, conj14, conj18.
ConjectureReport check_bernoulli_leading(DetTable& table, const std::string& which,
                                         const Json& params, const Budget& budget);

/// Generating-function numerators (conj15 even, conj16 odd).
ConjectureReport check_gf(DetTable& table, Parity parity, const Json& params,
                          const Budget& budget);

// ---------------------------------------------------------------------------
// Registry

struct CheckerInfo {
  std::string id;
  std::string summary;
  std::function<ConjectureReport(DetTable&, const Json&, const Budget&)> run;
};

const std::vector<CheckerInfo>& checker_registry();
bool has_checker(const std::string& id);

/// Throws std::invalid_argument for an unknown id.
ConjectureReport run_checker(const std::string& id, DetTable& table, const Json& params,
                             const Budget& budget);

/// Parameter helpers shared by checkers: params[key] may be an integer or a
/// list of integers; missing keys fall back to the default list.
std::vector<std::int64_t> int_list(const Json& params, const std::string& key,
                                   std::vector<std::int64_t> fallback);
std::int64_t int_value(const Json& params, const std::string& key, std::int64_t fallback);

/// Polynomial as an array of "num/den" strings, low to high.
Json poly_json(const RatPoly& p);

}  // namespace hankelcat
