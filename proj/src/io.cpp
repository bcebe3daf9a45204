#include "tquot/io.hpp"

#include "tquot/error.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace tquot {

namespace {

bool parse_int(std::string_view token, int& out) {
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, out);
  return ec == std::errc() && ptr == end && !token.empty();
}

}  // namespace

nlohmann::json to_json(const Tableau& t) { return {{"grid", t.row_lists()}}; }

Tableau tableau_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("grid") || !j.at("grid").is_array())
    throw InputError("tableau JSON needs an array field \"grid\"");
  std::vector<std::vector<int>> rows;
  const auto& grid = j.at("grid");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!grid[i].is_array()) throw InputError("grid row " + std::to_string(i + 1) + " is not an array");
    std::vector<int> row;
    for (std::size_t k = 0; k < grid[i].size(); ++k) {
      if (!grid[i][k].is_number_integer())
        throw InputError("grid cell (" + std::to_string(i + 1) + "," + std::to_string(k + 1) +
                         ") is not an integer");
      row.push_back(grid[i][k].get<int>());
    }
    rows.push_back(std::move(row));
  }
  return Tableau::from_rows(rows);
}

nlohmann::json to_json(const LatticePoint& z, const QuotientSetup& s) {
  nlohmann::json blocks = nlohmann::json::array();
  for (int i = 1; i <= s.r() - 1; ++i) blocks.push_back(z.block(s, i));
  return {{"blocks", blocks}};
}

Tableau parse_tableau(std::istream& in, const std::string& source) {
  std::vector<std::vector<int>> rows;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::vector<int> row;
    std::string token;
    while (tokens >> token) {
      int v = 0;
      if (!parse_int(token, v))
        throw InputError(source + ": line " + std::to_string(line_no) + ", column " +
                         std::to_string(row.size() + 1) + ": '" + token + "' is not an integer");
      row.push_back(v);
    }
    if (row.empty()) continue;
    if (!rows.empty() && row.size() != rows.front().size())
      throw InputError(source + ": line " + std::to_string(line_no) + ", column " +
                       std::to_string(std::min(row.size(), rows.front().size()) + 1) + ": row has " +
                       std::to_string(row.size()) + " entries, expected " + std::to_string(rows.front().size()));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw InputError(source + ": empty tableau");
  return Tableau::from_rows(rows);
}

Tableau read_tableau_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open tableau file '" + path + "'");
  return parse_tableau(in, path);
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string token = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    int v = 0;
    if (!parse_int(token, v)) throw InputError("'" + token + "' in list '" + text + "' is not an integer");
    out.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace tquot
