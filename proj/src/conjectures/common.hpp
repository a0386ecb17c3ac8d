#pragma once

// Helpers shared by the checker implementations.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hankelcat/analysis.hpp"
#include "hankelcat/conjectures.hpp"
#include "hankelcat/reference_data.hpp"

namespace hankelcat::detail {

/// Compares a reference listing against computed determinants. Mismatches at
/// the listing's known misprint indices become notes, others counterexamples.
void compare_listing(ConjectureReport& report, DetTable& table,
                     const reference::Listing& listing, const Budget& budget);

/// Fit of a residue class with `wanted` samples, clipped to the order budget.
/// `clipped` is set when fewer samples than wanted were affordable.
FitResult budgeted_fit(DetTable& table, PolyFitSpec fit, std::int64_t wanted,
                       const Budget& budget, bool& clipped);

/// Expected degree of p_{2k,0,j} for 2 <= j <= k-1 (mirror j -> k+1-j when
/// k < 2j-1).
int even_degree_formula(int k, int j);

/// Expected degree of p_{2k+1,0,j} for 2 <= j <= 2k: (j-1)(2k+1-2j) for
/// j <= k, -1 at j = k+1, mirrored j -> 2k+2-j above.
int odd_degree_formula(int k, int j);

/// Exponent e in lead = A_{2k,j} k^e.
std::int64_t even_lead_exponent(int k, int j);

/// Exponent e in lead = B_{2k+1,j} (2k+1)^e, mirrored for j > k.
std::int64_t odd_lead_exponent(int k, int j);

PolyFitSpec even_fit(int k, std::int64_t m, int j);  // p_{2k,m,j}, max_n unset
PolyFitSpec odd_fit(int k, std::int64_t m, int j);   // p_{2k+1,m,j}, max_n unset

std::string rat_str(const Rat& r);

/// Fits with enough samples for `expected_degree` plus two spare ones. A
/// budget shortfall marks the point inconclusive; a failed fit with the full
/// sample count refutes the claimed degree. Returns the polynomial if found.
std::optional<RatPoly> fit_for_claim(ConjectureReport& report, DetTable& table, const Json& point,
                                     const PolyFitSpec& fit, int expected_degree,
                                     const Budget& budget);

ConjectureReport check_product_formula(DetTable& table, const Json& params, const Budget& budget);
ConjectureReport check_polynomiality(DetTable& table, const Json& params, const Budget& budget);

/// Fits of p_{2(3+m),-m,2+m} and the shifted even listings, appended to a
/// conj5 report.
void check_shifted_even_family(ConjectureReport& report, DetTable& table, const Json& params,
                               const Budget& budget);

ConjectureReport check_q1_relation(DetTable& table, const Json& params, const Budget& budget);

}  // namespace hankelcat::detail
