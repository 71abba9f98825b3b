#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oddminor/graph.hpp"

namespace oddminor {

/// Witness colors are 1 and 2.
using Color = std::uint8_t;

inline Color flip(Color c) { return c == 1 ? Color{2} : Color{1}; }

/// Partial vertex coloring, ordered by vertex id.
using WitnessColoring = std::map<Vertex, Color>;

/// One branch set: a vertex set and the tree edges spanning it, both sorted.
struct BranchTree {
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;

    static BranchTree singleton(Vertex v) { return {{v}, {}}; }
    /// Path through `seq` in the given order; vertices and edges get sorted.
    static BranchTree path(std::initializer_list<Vertex> seq);
    static BranchTree path(const std::vector<Vertex>& seq);
    void normalize();

    bool operator==(const BranchTree&) const = default;
};

/// A host edge witnessing a pair of trees: `from` lies in the lower-indexed
/// tree, `to` in the higher one.
struct Connector {
    Vertex from = 0;
    Vertex to = 0;

    bool operator==(const Connector&) const = default;
};

using TreePair = std::pair<std::size_t, std::size_t>;

/// Certificate for an odd K_r minor: r vertex-disjoint branch trees, a
/// coloring proper on each tree, and (optionally) one monochromatic host edge
/// per pair of trees.
struct OddExpansionModel {
    std::vector<BranchTree> trees;
    WitnessColoring coloring;
    std::optional<std::map<TreePair, Connector>> connectors;
    /// Free-form provenance flags, e.g. "degenerate-factor".
    std::vector<std::string> flags;

    std::size_t clique_order() const noexcept { return trees.size(); }

    bool operator==(const OddExpansionModel&) const = default;
};

/// Swaps colors 1 and 2 everywhere.
OddExpansionModel color_swapped(const OddExpansionModel& m);

enum class Clause {
    disjointness,
    tree_shape,
    edge_membership,
    coloring_missing,
    properness,
    connector_missing,
    connector_invalid,
};

std::string_view to_string(Clause clause);

/// Result of verification. A failure always names the clause plus the trees,
/// vertices and/or edges that violate it.
struct Verdict {
    bool pass = true;
    Clause clause = Clause::disjointness;
    std::vector<std::size_t> trees;
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    std::string detail;

    explicit operator bool() const noexcept { return pass; }

    /// "PASS order=r" or "FAIL <clause> ..." as printed by the CLI.
    std::string summary(std::size_t order) const;
};

struct VerifyOptions {
    /// Require a stored connector for every pair instead of searching.
    bool require_connectors = false;
    /// Worker threads for the connector scan; 1 runs the serial reference.
    int jobs = 1;
};

/// Checks, in order: disjointness, tree shape, edge/vertex membership in the
/// host, coloring of every used vertex, properness on tree edges, connectors.
/// Reports the first failure in that order, lowest ids first.
Verdict verify_odd_expansion(const Graph& g, const OddExpansionModel& m, const VerifyOptions& opts = {});

/// Serial and OpenMP variants of the connector stage. Both return the same
/// verdict; exposed for tests and the benchmark.
Verdict verify_serial(const Graph& g, const OddExpansionModel& m, bool require_connectors);
Verdict verify_parallel(const Graph& g, const OddExpansionModel& m, bool require_connectors, int jobs);

}  // namespace oddminor
