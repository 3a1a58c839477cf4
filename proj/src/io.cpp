#include "wynnpade/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace wynnpade {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

double parse_cell(const std::string& cell, int line_no) {
  std::size_t begin = cell.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return std::numeric_limits<double>::quiet_NaN();
  std::size_t end = cell.find_last_not_of(" \t\r");
  const std::string trimmed = cell.substr(begin, end - begin + 1);
  char* stop = nullptr;
  const double v = std::strtod(trimmed.c_str(), &stop);
  if (stop != trimmed.c_str() + trimmed.size()) {
    throw std::runtime_error("line " + std::to_string(line_no) + ": not a number: '" +
                             trimmed + "'");
  }
  return v;
}

}  // namespace

ParsedCsv read_csv(std::istream& in) {
  ParsedCsv out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      cells.push_back(line.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (line_no == 1) {
      out.header = std::move(cells);
      continue;
    }
    std::vector<double> row;
    row.reserve(cells.size());
    for (const std::string& c : cells) row.push_back(parse_cell(c, line_no));
    out.rows.push_back(std::move(row));
  }
  if (out.header.empty()) throw std::runtime_error("empty CSV input");
  return out;
}

int column_index(const ParsedCsv& csv, const std::string& name) {
  for (std::size_t i = 0; i < csv.header.size(); ++i) {
    // Trim stray whitespace from header cells.
    std::string h = csv.header[i];
    while (!h.empty() && (h.back() == ' ' || h.back() == '\r' || h.back() == '\t')) h.pop_back();
    std::size_t b = h.find_first_not_of(" \t");
    if (b != std::string::npos && b > 0) h = h.substr(b);
    if (h == name) return static_cast<int>(i);
  }
  return -1;
}

std::vector<Node> read_node_file(std::istream& in, std::vector<int>* lines) {
  std::vector<Node> nodes;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<double> vals;
    std::string tok;
    while (fields >> tok) {
      char* stop = nullptr;
      const double v = std::strtod(tok.c_str(), &stop);
      if (stop != tok.c_str() + tok.size()) {
        throw std::runtime_error("node file line " + std::to_string(line_no) +
                                 ": not a number: '" + tok + "'");
      }
      if (!std::isfinite(v)) {
        throw std::runtime_error("node file line " + std::to_string(line_no) +
                                 ": non-finite value");
      }
      vals.push_back(v);
    }
    if (vals.empty()) continue;  // blank or comment-only line
    if (vals.size() < 2) {
      throw std::runtime_error("node file line " + std::to_string(line_no) +
                               ": expected `x y [derivatives...]`");
    }
    Node node;
    node.x = vals[0];
    node.y = vals[1];
    node.derivs.assign(vals.begin() + 2, vals.end());
    nodes.push_back(std::move(node));
    if (lines) lines->push_back(line_no);
  }
  return nodes;
}

}  // namespace wynnpade
