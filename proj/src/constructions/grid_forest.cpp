#include "common.hpp"
#include "oddminor/errors.hpp"

namespace oddminor {

namespace {

// Tree edges of a branch tree as a standalone graph on its sorted vertices.
Graph tree_graph(const BranchTree& tree) {
    std::vector<Edge> local;
    auto index = [&](Vertex v) {
        return static_cast<Vertex>(std::lower_bound(tree.vertices.begin(), tree.vertices.end(), v) -
                                   tree.vertices.begin());
    };
    for (const auto& e : tree.edges) local.push_back({index(e.u), index(e.v)});
    return Graph(tree.vertices.size(), std::move(local));
}

std::map<TreePair, Connector> factor_connectors(const Graph& g, const OddExpansionModel& m) {
    std::map<TreePair, Connector> out;
    for (std::size_t i = 0; i < m.trees.size(); ++i)
        for (std::size_t j = i + 1; j < m.trees.size(); ++j) {
            auto c = pair_connector(g, m, i, j);
            if (!c) throw ConsistencyError("verified factor model lacks a connector");
            out[{i, j}] = *c;
        }
    return out;
}

}  // namespace

GridForest product_grid_forest(const Graph& g, const OddExpansionModel& mg, const Graph& h,
                               const OddExpansionModel& mh, GridMode /*mode*/) {
    // Cells only use S_i □ T_j edges, which exist in both the Cartesian and
    // the strong host, so the mode does not change the forest itself.
    detail::require_valid(g, mg, "first factor");
    detail::require_valid(h, mh, "second factor");

    GridForest f;
    f.s = mg.clique_order();
    f.t = mh.clique_order();
    f.second_order = h.order();
    const std::size_t nh = h.order();

    std::vector<Graph> s_graphs, t_graphs;
    for (const auto& tree : mg.trees) s_graphs.push_back(tree_graph(tree));
    for (const auto& tree : mh.trees) t_graphs.push_back(tree_graph(tree));

    std::vector<ProductVertex> domain;
    for (std::size_t i = 0; i < f.s; ++i)
        for (std::size_t j = 0; j < f.t; ++j) {
            const auto& sv = mg.trees[i].vertices;
            const auto& tv = mh.trees[j].vertices;
            const Graph local = product(ProductKind::cartesian, s_graphs[i], t_graphs[j]);
            std::vector<Vertex> all(local.order());
            for (Vertex x = 0; x < local.order(); ++x) all[x] = x;
            auto to_host = [&](Vertex x) {
                auto p = unflatten(x, tv.size());
                return flatten({sv[p.a], tv[p.b]}, nh);
            };
            BranchTree cell;
            for (Vertex x : all) {
                cell.vertices.push_back(to_host(x));
                domain.push_back(unflatten(to_host(x), nh));
            }
            for (const auto& e : spanning_tree(local, all)) cell.edges.push_back(Edge::normalized(to_host(e.u), to_host(e.v)));
            cell.normalize();
            f.cells.push_back(std::move(cell));
        }
    f.coloring = witness_product_coloring(mg.coloring, mh.coloring, domain, nh);

    const auto g_conn = factor_connectors(g, mg);
    const auto h_conn = factor_connectors(h, mh);
    for (std::size_t i = 0; i < f.s; ++i) {
        const Vertex u = mg.trees[i].vertices.front();
        for (const auto& [pair, c] : h_conn)
            f.cross_edges[{f.cell(i, pair.first), f.cell(i, pair.second)}] = {flatten({u, c.from}, nh),
                                                                            flatten({u, c.to}, nh)};
    }
    for (std::size_t j = 0; j < f.t; ++j) {
        const Vertex v = mh.trees[j].vertices.front();
        for (const auto& [pair, c] : g_conn)
            f.cross_edges[{f.cell(pair.first, j), f.cell(pair.second, j)}] = {flatten({c.from, v}, nh),
                                                                            flatten({c.to, v}, nh)};
    }
    return f;
}

}  // namespace oddminor
