#pragma once

// Published reference values that the checkers and table regeneration are
// compared against: example determinant listings, degree and leading
// coefficient tables, generating-function numerators and series coefficients.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hankelcat/exact.hpp"
#include "hankelcat/rat_poly.hpp"
#include "hankelcat/sequences.hpp"

namespace hankelcat::reference {

/// Values Det(modulus * n + offset) for n = 0, 1, ... of the given sequence.
struct Listing {
  std::string label;
  SeqSpec spec;
  std::int64_t m;
  std::int64_t modulus;
  std::int64_t offset;
  std::vector<long> values;
  /// Indices whose listed value is a known misprint (value kept as printed).
  std::vector<std::size_t> misprints;
};

const std::vector<Listing>& translation_listings();  // D_{3,1}, D_{3,-2}, D_{4,1}, D_{4,-3}
const std::vector<Listing>& periodic_displays();     // D_{3,-1}, D_{3,0}, D_{5,-2}, D_{5,-1}
const std::vector<Listing>& shifted_even_listings();  // D_{4,1}, D_{6,0}, D_{8,-1}, D_{10,-2}
const std::vector<Listing>& odd_zero_shift_listings();  // D_{3,0}, D_{5,0}, D_{7,0}
const std::vector<Listing>& progression_listings();  // D_{3,m}(3n+1), m = 0, 1, 2

/// Row label -> entries for j = first_j, first_j + 1, ...
struct RatTable {
  std::string name;
  int first_j;
  std::map<int, std::vector<Rat>> rows;
};

const RatTable& even_degree_table();     // deg p_{2k,0,j}, rows 2k = 6..18
const RatTable& odd_degree_table();      // deg p_{2k+1,0,j}, rows 2k+1 = 3..11
const RatTable& even_lead_table();       // A_{2k,j}, rows 6..14
const RatTable& even_lead_phi_table();   // A_{2k,j} * Phi_k, rows 6..14
const RatTable& odd_lead_table();        // B_{2k+1,j}, rows 3..13

/// (row, j) cells of the tables above that are known misprints, with a
/// description.
const std::vector<std::pair<std::pair<int, int>, std::string>>& even_lead_phi_misprints();

/// Numerators keyed by (k, m) with the sequence index 2k (even) or 2k-1 (odd).
const std::map<std::pair<int, int>, RatPoly>& even_gf_numerators();
const std::map<std::pair<int, int>, RatPoly>& odd_gf_numerators();

/// P_{2k,3-k} for k = 3, 4, 5.
const std::map<int, RatPoly>& even_gf_third_closed_listing();

/// deg Q_{3,m} for m = -1, 0, 1, 2, 3.
const std::vector<long>& odd_k2_degrees();

std::vector<Rat> bernoulli_listing();  // B_0, B_2, ..., B_14
std::vector<Rat> tangent_listing();    // tan x coefficients of x, x^3, ..., x^11
std::vector<Rat> cot_listing();        // x cot x coefficients of 1, x^2, ..., x^12

}  // namespace hankelcat::reference
