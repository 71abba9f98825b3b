#pragma once

// Test-side reference implementations. They share no code with the library
// beyond the Graph and OddExpansionModel types.

#include <optional>
#include <vector>

#include "oddminor/expansion_model.hpp"
#include "oddminor/graph.hpp"

namespace ref {

using oddminor::Graph;
using oddminor::OddExpansionModel;

/// Direct check of the definition: disjoint trees whose edges are host edges
/// and form spanning trees, colors proper on tree edges, and a monochromatic
/// host edge between every pair (stored connectors are ignored).
bool is_odd_expansion(const Graph& g, const OddExpansionModel& m);

/// Largest r with an odd K_r expansion, by trying every labeling of the
/// vertices with {unused, 1..r} (labels in order of first use) and every
/// coloring. Meant for n <= 7.
int brute_odd_hadwiger(const Graph& g);
bool brute_has_odd_clique(const Graph& g, int r);

/// Edge list of the product built from the definitions with adjacency tests.
std::vector<oddminor::Edge> product_edges(oddminor::ProductKind kind, const Graph& g, const Graph& h);

}  // namespace ref
