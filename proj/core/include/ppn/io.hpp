#pragma once

#include <iosfwd>
#include <string>

#include "ppn/multigraph.hpp"

namespace ppn {

/// Parses the text graph format:
///
///   # comment
///   mgraph <n>
///   e <u> <v> [mult]
///
/// Vertices are 1-indexed, mult defaults to 1 and repeated lines for one
/// pair add up. Throws ParseError with a line number on malformed input.
Multigraph parse_graph(std::istream& in);
Multigraph parse_graph(const std::string& text);

/// Canonical text: header, then one line per pair with positive
/// multiplicity in lexicographic order, mult always written.
std::string write_graph(const Multigraph& g);

/// Reads a graph file; "-" means standard input.
Multigraph read_graph_file(const std::string& path);

}  // namespace ppn
