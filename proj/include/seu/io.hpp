#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "seu/digraph.hpp"

namespace seu {

// Edge-list text format, the interchange format of the whole toolkit:
//   - lines starting with '#' are comments, blank lines are ignored
//   - first significant line:  n <count>
//   - each following line:     a b     (the arc (a,b), 0-indexed)
//   - duplicate arc lines are an error
//   - ASCII; output uses LF, input accepts LF or CRLF
// Parse errors carry the 1-based line number.
Digraph parse_edge_list(std::istream& in);
Digraph parse_edge_list_string(const std::string& text);
Digraph parse_edge_list_file(const std::string& path);

// Canonical serialization: header plus arcs in lexicographic order, LF ends.
// Re-parsing yields an identical digraph.
std::string to_edge_list(const Digraph& d);

// Graphviz export. One node per vertex, one edge per arc (both directions of
// a pair emit two edges). Optional per-vertex labels.
std::string to_dot(const Digraph& d, const std::vector<std::string>* labels = nullptr);

void write_text_file(const std::string& path, const std::string& content);

} // namespace seu
