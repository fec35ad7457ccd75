#pragma once

#include <iosfwd>
#include <string>

#include "dynchrome/graph.hpp"

namespace dynchrome {

// DIMACS .col text: "c" comments, one "p edge <n> <m>" header, then "e <u> <v>" lines
// with 1-based endpoints. Duplicate edges collapse; a header/actual edge-count mismatch
// is a warning on `warnings`, not an error. Malformed input throws InputError with the
// line number.
Graph parse_dimacs(const std::string& text, std::ostream* warnings = nullptr);

std::string emit_dimacs(const Graph& g);

Graph read_graph_file(const std::string& path, std::ostream* warnings = nullptr);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace dynchrome
