#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "metricdim/graph.hpp"

namespace metricdim {

// Text edge-list format:
//   c <comment>
//   p <n> <m>
//   e <u> <v>          (0-based ids, m edge lines)
// Written with u < v, edges sorted lexicographically.

Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

void write_edge_list(const Graph& g, std::ostream& out, std::span<const std::string> comments = {});
void write_edge_list_file(const Graph& g, const std::string& path, std::span<const std::string> comments = {});

} // namespace metricdim
