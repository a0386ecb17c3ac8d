#include "hankelcat/reference_data.hpp"

namespace hankelcat::reference {

namespace {

std::vector<Rat> rats(std::initializer_list<const char*> items) {
  std::vector<Rat> out;
  for (const char* s : items) out.push_back(parse_rat(s));
  return out;
}

std::vector<Rat> ints(std::initializer_list<long> items) {
  std::vector<Rat> out;
  for (long v : items) out.emplace_back(v);
  return out;
}

}  // namespace

const std::vector<Listing>& translation_listings() {
  static const std::vector<Listing> data = {
      {"D_{3,1}", catalan(3), 1, 1, 0, {1, 3, 3, -1, -6, -6, 1, 9, 9, -1, -12, -12}, {}},
      {"D_{3,-2}", catalan(3), -2, 1, 0, {1, 0, 0, -1, -3, -3, 1, 6, 6, -1, -9, -9}, {}},
      {"D_{4,1}", catalan(4), 1, 1, 0, {1, 4, -4, -20, 9, 56, -16, -120, 25, 220, -36, -364}, {}},
      {"D_{4,-3}", catalan(4), -3, 1, 0, {1, 0, 0, 0, 1, 4, -4, -20, 9, 56, -16, -120, 25}, {}},
  };
  return data;
}

const std::vector<Listing>& periodic_displays() {
  static const std::vector<Listing> data = {
      {"D_{3,-1}", catalan(3), -1, 1, 0, {1, 0, -1, -1, 0, 1, 1, 0, -1}, {}},
      {"D_{3,0}", catalan(3), 0, 1, 0, {1, 1, 0, -1, -1, 0, 1, 1, 0}, {}},
      {"D_{5,-2}", catalan(5), -2, 1, 0, {1, 0, 0, -1, 0, 1, 0, 0, -1, 0}, {}},
      {"D_{5,-1}", catalan(5), -1, 1, 0, {1, 0, -1, 0, 0, 1, 0, -1, 0, 0}, {}},
  };
  return data;
}

const std::vector<Listing>& shifted_even_listings() {
  static const std::vector<Listing> data = {
      // The second entry is the 1x1 determinant C_{4,1} = 4; the listing shows -4.
      {"D_{4,1}", catalan(4), 1, 1, 0, {1, -4, -4, -20, 9, 56, -16, -120, 25, 220, -36, -364, 49}, {1}},
      {"D_{6,0}", catalan(6), 0, 1, 0, {1, 1, -9, -4, -4, 45, 9, 9, -126, -16, -16, 270, 25}, {}},
      {"D_{8,-1}", catalan(8), -1, 1, 0, {1, 0, -1, -16, 4, 0, -4, -80, 9, 0, -9, -224, 16, 0, -16}, {}},
      {"D_{10,-2}", catalan(10), -2, 1, 0,
       {1, 0, 0, -1, 25, 4, 0, 0, -4, 125, 9, 0, 0, -9, 350, 16, 0, 0, -16}, {}},
  };
  return data;
}

const std::vector<Listing>& odd_zero_shift_listings() {
  static const std::vector<Listing> data = {
      {"D_{3,0}", catalan(3), 0, 1, 0,
       {1, 1, 0, -1, -1, 0, 1, 1, 0, -1, -1, 0, 1, 1, 0, -1, -1, 0, 1, 1, 0, -1, -1}, {}},
      {"D_{5,0}", catalan(5), 0, 1, 0,
       {1, 1, -5, 0, 5, 1, 1, -10, 0, 10, 1, 1, -15, 0, 15, 1, 1, -20, 0, 20, 1, 1}, {}},
      {"D_{7,0}", catalan(7), 0, 1, 0,
       {1, 1, -14, -49, 0, 49, 329, -1, -1, -315, 196, 0, -196, -1687, 1, 1}, {}},
  };
  return data;
}

const std::vector<Listing>& progression_listings() {
  static const std::vector<Listing> data = {
      {"D_{3,0}(3n+1)", catalan(3), 0, 3, 1, {1, -1, 1, -1, 1, -1, 1, -1, 1}, {}},
      {"D_{3,1}(3n+1)", catalan(3), 1, 3, 1, {3, -6, 9, -12, 15, -18, 21, -24, 27}, {}},
      {"D_{3,2}(3n+1)", catalan(3), 2, 3, 1, {9, -36, 81, -144, 225, -324, 441, -576, 729}, {}},
  };
  return data;
}

const RatTable& even_degree_table() {
  static const RatTable t{"conj6-degrees",
                          2,
                          {{6, ints({3})},
                           {8, ints({6, 6})},
                           {10, ints({9, 10, 9})},
                           {12, ints({12, 15, 15, 12})},
                           {14, ints({15, 20, 21, 20, 15})},
                           {16, ints({18, 25, 28, 28, 25, 18})},
                           {18, ints({21, 30, 35, 36, 35, 30, 21})}}};
  return t;
}

const RatTable& odd_degree_table() {
  static const RatTable t{"conj12-degrees",
                          2,
                          {{3, ints({-1})},
                           {5, ints({1, -1, 1})},
                           {7, ints({3, 2, -1, 2, 3})},
                           {9, ints({5, 6, 3, -1, 3, 6, 5})},
                           {11, ints({7, 10, 9, 4, -1, 4, 9, 10, 7})}}};
  return t;
}

const RatTable& even_lead_table() {
  static const RatTable t{
      "conj7-A",
      2,
      {{6, rats({"-1/3"})},
       {8, rats({"1/45", "-1/45"})},
       {10, rats({"-2/945", "1/4725", "2/945"})},
       {12, rats({"1/4725", "1/4465125", "-1/4465125", "1/4725"})},
       {14, rats({"-2/93555", "1/2210236875", "-1/46414974375", "-1/2210236875", "-2/93555"})}}};
  return t;
}

const RatTable& even_lead_phi_table() {
  static const RatTable t{"conj7-phi",
                          2,
                          {{6, ints({-1})},
                           {8, ints({1, -1})},
                           {10, ints({-10, 1, 10})},
                           {12, ints({-945, 1, -1, 945})},
                           {14, ints({-992250, 21, -1, -21, -992250})}}};
  return t;
}

const std::vector<std::pair<std::pair<int, int>, std::string>>& even_lead_phi_misprints() {
  static const std::vector<std::pair<std::pair<int, int>, std::string>> data = {
      {{12, 2},
       "reference Phi-normalized entry -945/Phi_6 disagrees in sign with the reference "
       "A_{12,2} = 1/4725 = 945/Phi_6"},
  };
  return data;
}

const RatTable& odd_lead_table() {
  static const RatTable t{
      "conj13-B",
      2,
      {{3, ints({0})},
       {5, ints({-1, 0, 1})},
       {7, rats({"1/3", "-1", "0", "1", "1/3"})},
       {9, rats({"-2/15", "1/45", "1", "0", "-1", "1/45", "2/15"})},
       {11, rats({"17/315", "1/4725", "-2/945", "1", "0", "-1", "-2/945", "-1/4725", "17/315"})},
       {13, rats({"-62/2835", "1/297675", "-1/4465125", "-1/4725", "-1", "0", "1", "-1/4725",
                  "1/4465125", "1/297675", "62/2835"})}}};
  return t;
}

const std::map<std::pair<int, int>, RatPoly>& even_gf_numerators() {
  static const std::map<std::pair<int, int>, RatPoly> data = {
      {{1, 0}, RatPoly{1}},
      {{1, 1}, RatPoly{1}},
      {{1, 2}, RatPoly{1, 1}},
      {{1, 3}, RatPoly{1, 7, 7, 1}},
      {{1, 4}, RatPoly{1, 31, 187, 330, 187, 31, 1}},
      {{2, -1}, RatPoly{1}},
      {{2, 0}, RatPoly{1, 1}},
      {{2, 1}, RatPoly{1, 4, 0, -4, -1}},
      {{2, 2}, RatPoly{1, 14, 13, -111, -119, 119, 111, -13, -14, -1}},
      {{2, 3}, RatPoly{1, 48, 242, -1760, -7960, 10112, 47918, -9680, -84370, -9680, 47918, 10112,
                       -7960, -1760, 242, 48, 1}},
      {{3, -2}, RatPoly{1}},
      {{3, -1}, RatPoly{1, 0, -1}},
      {{3, 0}, RatPoly{1, 1, -9, 0, 0, 9, -1, -1}},
      {{3, 1}, RatPoly{1, 6, -69, -1, 63, 561, -8, -609, -609, -8, 561, 63, -1, -69, 6, 1}},
  };
  return data;
}

const std::map<std::pair<int, int>, RatPoly>& odd_gf_numerators() {
  static const std::map<std::pair<int, int>, RatPoly> data = [] {
    const RatPoly one_plus{1, 1};
    const RatPoly one_minus{1, -1};
    const RatPoly cyclo6{1, -1, 1};
    const RatPoly extra{1, 5, 1};
    std::map<std::pair<int, int>, RatPoly> m;
    m[{2, -1}] = RatPoly{1, 0, -1};
    m[{2, 0}] = one_plus.pow(2) * cyclo6;
    m[{2, 1}] = one_plus.pow(5) * cyclo6.pow(2);
    m[{2, 2}] = one_minus * one_plus.pow(8) * cyclo6.pow(3) * extra;
    return m;
  }();
  return data;
}

const std::map<int, RatPoly>& even_gf_third_closed_listing() {
  static const std::map<int, RatPoly> data = {
      {3, RatPoly{1, 1, -9, 0, 0, 9, -1, -1}},
      {4, RatPoly{1, 0, -1, -16, 0, 0, 0, -16, -1, 0, 1}},
      {5, RatPoly{1, 0, 0, -1, 25, 0, 0, 0, 0, 25, -1, 0, 0, 1}},
  };
  return data;
}

const std::vector<long>& odd_k2_degrees() {
  static const std::vector<long> data = {2, 4, 9, 17, 28};
  return data;
}

std::vector<Rat> bernoulli_listing() {
  return rats({"1", "1/6", "-1/30", "1/42", "-1/30", "5/66", "-691/2730", "7/6"});
}

std::vector<Rat> tangent_listing() {
  return rats({"1", "1/3", "2/15", "17/315", "62/2835", "1382/155925"});
}

std::vector<Rat> cot_listing() {
  return rats({"1", "-1/3", "-1/45", "-2/945", "-1/4725", "-2/93555", "-1382/638512875"});
}

}  // namespace hankelcat::reference
