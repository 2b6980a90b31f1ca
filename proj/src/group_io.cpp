#include <fstream>
#include <sstream>
#include <vector>

#include "dwcount/errors.hpp"
#include "dwcount/group_io.hpp"

namespace dwcount {
namespace {

bool next_content_line(std::istream& in, std::string& line, std::size_t& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

std::vector<std::uint32_t> parse_indices(const std::string& line, std::size_t line_no) {
  std::istringstream ss(line);
  std::vector<std::uint32_t> out;
  std::string tok;
  while (ss >> tok) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || tok[0] == '-')
      throw ValidationError("line " + std::to_string(line_no) + ": '" + tok +
                            "' is not a non-negative integer");
    out.push_back(static_cast<std::uint32_t>(v));
  }
  return out;
}

}  // namespace

FiniteGroup read_group(std::istream& in, std::size_t max_order) {
  std::string line;
  std::size_t line_no = 0;
  if (!next_content_line(in, line, line_no)) throw ValidationError("group file is empty");
  std::istringstream header(line);
  std::string kind;
  long long size = -1;
  header >> kind >> size;
  if ((kind != "perm" && kind != "cayley") || size <= 0)
    throw ValidationError("line " + std::to_string(line_no) +
                          ": expected 'perm <degree>' or 'cayley <n>'");
  std::vector<std::vector<std::uint32_t>> rows;
  while (next_content_line(in, line, line_no)) {
    auto row = parse_indices(line, line_no);
    if (row.size() != static_cast<std::size_t>(size))
      throw ValidationError("line " + std::to_string(line_no) + ": expected " +
                            std::to_string(size) + " entries, got " + std::to_string(row.size()));
    rows.push_back(std::move(row));
  }
  if (kind == "perm")
    return FiniteGroup::from_permutation_generators(static_cast<std::size_t>(size), rows,
                                                    max_order);
  if (rows.size() != static_cast<std::size_t>(size))
    throw ValidationError("Cayley table has " + std::to_string(rows.size()) + " rows, expected " +
                          std::to_string(size));
  return FiniteGroup::from_cayley_table(rows, max_order);
}

FiniteGroup read_group_file(const std::string& path, std::size_t max_order) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open group file '" + path + "'");
  return read_group(in, max_order);
}

}  // namespace dwcount
