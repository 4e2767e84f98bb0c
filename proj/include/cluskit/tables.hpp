#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cluskit/formulas.hpp"

namespace cluskit {

/* One reference table: the s = 0 distribution polynomials for n = 0..9 over
   the avoiders of a single pattern, stored as canonical polynomial text.
   Each table names the closed-form route that reproduces it, so the rows can
   be diffed against both the brute-force and the closed computation. */
struct GoldenTable {
  int id = 0;
  std::string title;
  Family family = Family::ides;
  std::string pattern;            // one-line notation
  std::string formula;            // closed-form id reproducing the rows
  int m = 0, a = 0;               // its parameters
  std::vector<std::string> rows;  // canonical text, n = 0..9
};

const std::vector<GoldenTable>& golden_tables();
// Throws std::invalid_argument listing the valid ids when id is unknown.
const GoldenTable& golden_table(int id);

std::vector<Poly> golden_rows(const GoldenTable&);
// method is "brute" (avoider enumeration) or "closed" (the named formula).
std::vector<Poly> computed_table(const GoldenTable&, std::string_view method);

}  // namespace cluskit
