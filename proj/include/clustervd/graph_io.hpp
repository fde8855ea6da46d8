#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "clustervd/graph.hpp"

namespace clustervd {

// Plain-text graph format:
//
//   # comment lines start with '#'
//   n m
//   u v            (m lines, 0-based endpoints)
//   w w_0 ... w_{n-1}   (optional vertex weights)
//   X i j k ...         (optional X side of a bipartition; the rest is Y)
//
// Parse failures throw Error(Parse) with "line N: ..." in the message.

Graph parse_graph(std::string_view text);
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::filesystem::path& path);

/// Edges are written sorted lexicographically; `header` lines are emitted
/// as '#' comments before the data.
void write_graph(std::ostream& out, const Graph& g, const std::vector<std::string>& header = {});
std::string format_graph(const Graph& g, const std::vector<std::string>& header = {});

}  // namespace clustervd
