#pragma once

// CSV and node-file plumbing shared by the CLI and the tests.  All floating
// point output uses 17 significant digits so emitted CSVs round-trip
// bit-exactly.

#include <iosfwd>
#include <string>
#include <vector>

#include "wynnpade/aitken.hpp"

namespace wynnpade {

// %.17g rendering (round-trip precision for binary64).
std::string fmt17(double v);

struct ParsedCsv {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;  // empty cells parse as NaN
};

// Comma-separated, first line is the header.  Throws std::runtime_error with a
// line number on cells that are neither numeric nor empty.
ParsedCsv read_csv(std::istream& in);

// Column lookup by exact header name; -1 when absent.
int column_index(const ParsedCsv& csv, const std::string& name);

// Node file: one node per line, whitespace-separated `x y [y' y'' ...]`,
// `#` starts a comment.  Throws std::runtime_error with a line-numbered
// message on malformed lines.  `lines` (optional) receives the source line
// number of each node for downstream diagnostics.
std::vector<Node> read_node_file(std::istream& in, std::vector<int>* lines = nullptr);

}  // namespace wynnpade
