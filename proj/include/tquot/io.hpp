#pragma once

#include "tquot/lattice.hpp"
#include "tquot/setup.hpp"
#include "tquot/tableau.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace tquot {

/// {"grid": [[row 1], ..., [row r]]}
nlohmann::json to_json(const Tableau& t);
/// Inverse of to_json; throws InputError naming the offending cell.
Tableau tableau_from_json(const nlohmann::json& j);

/// {"blocks": [[z_j for j in C_{1,2}], ..., [z_j for j in C_{r-1,2}]]}
nlohmann::json to_json(const LatticePoint& z, const QuotientSetup& s);

/// Whitespace-separated integer grid, one row per line. Blank lines are
/// skipped. Throws InputError with "line L, column C" of the bad cell.
Tableau parse_tableau(std::istream& in, const std::string& source = "<input>");
Tableau read_tableau_file(const std::string& path);

/// "2,5" -> {2, 5}; empty string -> {}. Throws InputError on junk.
std::vector<int> parse_int_list(const std::string& text);

}  // namespace tquot
