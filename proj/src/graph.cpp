#include "oddminor/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "oddminor/errors.hpp"

namespace oddminor {

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n) {
    for (auto& e : edges) {
        if (e.u == e.v)
            throw ParameterError("self-loop at vertex " + std::to_string(e.u));
        if (e.u >= n || e.v >= n)
            throw ParameterError("edge endpoint out of range: " + std::to_string(e.u) + " " +
                                 std::to_string(e.v) + " with n=" + std::to_string(n));
        e = Edge::normalized(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end());
    if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
        throw ParameterError("duplicate edge " + std::to_string(dup->u) + " " + std::to_string(dup->v));
    edges_ = std::move(edges);

    std::vector<std::size_t> deg(n, 0);
    for (const auto& e : edges_) {
        ++deg[e.u];
        ++deg[e.v];
    }
    offsets_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
    adjacency_.resize(offsets_[n]);
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (const auto& e : edges_) {
        adjacency_[fill[e.u]++] = e.v;
        adjacency_[fill[e.v]++] = e.u;
    }
    for (std::size_t v = 0; v < n; ++v)
        std::sort(adjacency_.begin() + offsets_[v], adjacency_.begin() + offsets_[v + 1]);
}

bool Graph::adjacent(Vertex a, Vertex b) const {
    if (a >= n_ || b >= n_) return false;
    auto nb = neighbors(a);
    return std::binary_search(nb.begin(), nb.end(), b);
}

Graph complete_graph(std::size_t n) {
    if (n < 1) throw ParameterError("complete graph needs n >= 1");
    std::vector<Edge> edges;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b) edges.push_back({a, b});
    return Graph(n, std::move(edges));
}

Graph star_graph(std::size_t leaves) {
    std::vector<Edge> edges;
    for (Vertex k = 1; k <= leaves; ++k) edges.push_back({0, k});
    return Graph(leaves + 1, std::move(edges));
}

Graph cycle_graph(std::size_t n) {
    if (n < 3) throw ParameterError("cycle needs n >= 3");
    std::vector<Edge> edges;
    for (Vertex k = 0; k < n; ++k) edges.push_back(Edge::normalized(k, static_cast<Vertex>((k + 1) % n)));
    return Graph(n, std::move(edges));
}

Graph path_graph(std::size_t n) {
    if (n < 1) throw ParameterError("path needs n >= 1");
    std::vector<Edge> edges;
    for (Vertex k = 0; k + 1 < n; ++k) edges.push_back({k, k + 1});
    return Graph(n, std::move(edges));
}

Graph hamming_graph(std::size_t n, std::size_t d) {
    if (n < 1 || d < 1) throw ParameterError("hamming graph needs n >= 1 and d >= 1");
    Graph kn = complete_graph(n);
    Graph g = kn;
    for (std::size_t k = 1; k < d; ++k) g = product(ProductKind::cartesian, g, kn);
    return g;
}

Graph make_named_graph(GraphFamily family, std::span<const int> params) {
    auto need = [&](std::size_t count, const char* name) {
        if (params.size() != count)
            throw ParameterError(std::string(name) + " expects " + std::to_string(count) + " parameter(s)");
    };
    switch (family) {
    case GraphFamily::complete:
        need(1, "complete");
        if (params[0] < 1) throw ParameterError("complete graph needs n >= 1");
        return complete_graph(static_cast<std::size_t>(params[0]));
    case GraphFamily::star:
        need(1, "star");
        if (params[0] < 0) throw ParameterError("star needs k >= 0");
        return star_graph(static_cast<std::size_t>(params[0]));
    case GraphFamily::cycle:
        need(1, "cycle");
        if (params[0] < 3) throw ParameterError("cycle needs n >= 3");
        return cycle_graph(static_cast<std::size_t>(params[0]));
    case GraphFamily::path:
        need(1, "path");
        if (params[0] < 1) throw ParameterError("path needs n >= 1");
        return path_graph(static_cast<std::size_t>(params[0]));
    case GraphFamily::hamming:
        need(2, "hamming");
        if (params[0] < 1 || params[1] < 1) throw ParameterError("hamming needs n >= 1 and d >= 1");
        return hamming_graph(static_cast<std::size_t>(params[0]), static_cast<std::size_t>(params[1]));
    }
    throw ParameterError("unknown graph family");
}

GraphFamily parse_family(std::string_view name) {
    if (name == "complete") return GraphFamily::complete;
    if (name == "star") return GraphFamily::star;
    if (name == "cycle") return GraphFamily::cycle;
    if (name == "path") return GraphFamily::path;
    if (name == "hamming") return GraphFamily::hamming;
    throw ParameterError("unknown graph family '" + std::string(name) + "'");
}

namespace {

// BFS levels per component; parent[root] == root.
struct BfsForest {
    std::vector<int> level;
    std::vector<Vertex> parent;
};

BfsForest bfs_forest(const Graph& g) {
    const std::size_t n = g.order();
    BfsForest f{std::vector<int>(n, -1), std::vector<Vertex>(n, 0)};
    std::deque<Vertex> queue;
    for (Vertex root = 0; root < n; ++root) {
        if (f.level[root] >= 0) continue;
        f.level[root] = 0;
        f.parent[root] = root;
        queue.push_back(root);
        while (!queue.empty()) {
            Vertex x = queue.front();
            queue.pop_front();
            for (Vertex y : g.neighbors(x)) {
                if (f.level[y] >= 0) continue;
                f.level[y] = f.level[x] + 1;
                f.parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    return f;
}

}  // namespace

std::optional<Bipartition> is_bipartite(const Graph& g) {
    auto f = bfs_forest(g);
    for (const auto& e : g.edges())
        if ((f.level[e.u] & 1) == (f.level[e.v] & 1)) return std::nullopt;
    Bipartition parts;
    for (Vertex v = 0; v < g.order(); ++v) ((f.level[v] & 1) ? parts.second : parts.first).push_back(v);
    return parts;
}

std::optional<std::vector<Vertex>> find_odd_cycle(const Graph& g) {
    auto f = bfs_forest(g);
    for (const auto& e : g.edges()) {
        if (f.level[e.u] != f.level[e.v]) continue;
        // Same BFS level: walk both ends up to their common ancestor.
        std::vector<Vertex> left{e.u}, right{e.v};
        Vertex a = e.u, b = e.v;
        while (a != b) {
            a = f.parent[a];
            b = f.parent[b];
            left.push_back(a);
            right.push_back(b);
        }
        right.pop_back();  // common ancestor already in `left`
        std::vector<Vertex> cycle(left.rbegin(), left.rend());
        cycle.insert(cycle.end(), right.begin(), right.end());
        return cycle;
    }
    return std::nullopt;
}

std::vector<Edge> spanning_tree(const Graph& g, std::span<const Vertex> vertices) {
    std::vector<Vertex> vs(vertices.begin(), vertices.end());
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    std::vector<Edge> tree;
    if (vs.empty()) return tree;
    for (Vertex v : vs)
        if (v >= g.order()) throw ParameterError("vertex " + std::to_string(v) + " out of range");

    std::vector<char> inside(g.order(), 0), seen(g.order(), 0);
    for (Vertex v : vs) inside[v] = 1;
    std::deque<Vertex> queue{vs.front()};
    seen[vs.front()] = 1;
    while (!queue.empty()) {
        Vertex x = queue.front();
        queue.pop_front();
        for (Vertex y : g.neighbors(x)) {
            if (!inside[y] || seen[y]) continue;
            seen[y] = 1;
            tree.push_back(Edge::normalized(x, y));
            queue.push_back(y);
        }
    }
    for (Vertex v : vs)
        if (!seen[v])
            throw StructureError("induced subgraph is disconnected: vertex " + std::to_string(v) +
                                     " is separated from " + std::to_string(vs.front()),
                                 v);
    std::sort(tree.begin(), tree.end());
    return tree;
}

std::size_t connected_components(const Graph& g) {
    auto f = bfs_forest(g);
    std::size_t count = 0;
    for (Vertex v = 0; v < g.order(); ++v)
        if (f.parent[v] == v) ++count;
    return count;
}

bool is_complete(const Graph& g) {
    const std::size_t n = g.order();
    return g.size() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

}  // namespace oddminor
