#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace oddminor {

using Vertex = std::uint32_t;

/// Undirected edge stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    static Edge normalized(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

    auto operator<=>(const Edge&) const = default;
};

/// Immutable simple undirected graph on vertices 0..order()-1.
///
/// Edges are kept sorted; neighbor lists are sorted ascending. Construction
/// rejects self-loops, duplicate edges and out-of-range endpoints.
class Graph {
public:
    Graph() = default;
    Graph(std::size_t n, std::vector<Edge> edges);

    std::size_t order() const noexcept { return n_; }
    std::size_t size() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    std::span<const Vertex> neighbors(Vertex v) const {
        return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
    }
    std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
    bool adjacent(Vertex a, Vertex b) const;

    bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_{0};
    std::vector<Vertex> adjacency_;
};

enum class GraphFamily { complete, star, cycle, path, hamming };

/// Builds a named family. Numbering: star has center 0 and leaves 1..k;
/// hamming(n, d) numbers d-tuples in mixed radix n, first coordinate most
/// significant, so hamming(n, d) == product(cartesian, hamming(n, d-1), K_n).
Graph make_named_graph(GraphFamily family, std::span<const int> params);
GraphFamily parse_family(std::string_view name);

Graph complete_graph(std::size_t n);
Graph star_graph(std::size_t leaves);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph hamming_graph(std::size_t n, std::size_t d);

/// Vertex (a, b) of a two-factor product.
struct ProductVertex {
    Vertex a = 0;
    Vertex b = 0;

    auto operator<=>(const ProductVertex&) const = default;
};

inline Vertex flatten(ProductVertex p, std::size_t second_order) {
    return static_cast<Vertex>(p.a * second_order + p.b);
}
inline ProductVertex unflatten(Vertex x, std::size_t second_order) {
    return {static_cast<Vertex>(x / second_order), static_cast<Vertex>(x % second_order)};
}

enum class ProductKind { cartesian, direct, lexicographic, strong };

ProductKind parse_product_kind(std::string_view name);
std::string_view to_string(ProductKind kind);

/// Product of G and H on |V(G)|*|V(H)| vertices, numbered by flatten().
Graph product(ProductKind kind, const Graph& g, const Graph& h);

struct Bipartition {
    std::vector<Vertex> first;
    std::vector<Vertex> second;
};

/// Two-coloring by BFS from the lowest vertex of each component (root goes to
/// `first`), or nullopt when an odd cycle exists.
std::optional<Bipartition> is_bipartite(const Graph& g);

/// Vertex sequence of some odd cycle (closed implicitly), or nullopt if bipartite.
std::optional<std::vector<Vertex>> find_odd_cycle(const Graph& g);

/// BFS spanning tree of the subgraph induced on `vertices`, rooted at the
/// lowest id, neighbors visited ascending. Throws StructureError if the
/// induced subgraph is disconnected.
std::vector<Edge> spanning_tree(const Graph& g, std::span<const Vertex> vertices);

std::size_t connected_components(const Graph& g);

bool is_complete(const Graph& g);

}  // namespace oddminor
