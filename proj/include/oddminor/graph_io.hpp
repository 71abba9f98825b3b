#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "oddminor/graph.hpp"

namespace oddminor {

/// Canonical text form: "n m\n" followed by m lines "u v\n" with u < v in
/// ascending lexicographic order.
std::string to_text(const Graph& g);

/// Parses the text form. Edge lines may come in any order and orientation;
/// `source` is used in error messages.
Graph parse_graph_text(std::string_view text, std::string_view source = "<input>");

/// Parses one graph6 line (optional ">>graph6<<" header, trailing newline).
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

/// Reads a graph file; a ".g6" extension selects graph6, anything else the
/// text form.
Graph read_graph_file(const std::filesystem::path& path);
void write_graph_file(const std::filesystem::path& path, const Graph& g);

/// Lowercase hex SHA-256 of to_text(g).
std::string graph_hash(const Graph& g);

}  // namespace oddminor
