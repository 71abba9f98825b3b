#include <algorithm>

#include "common.hpp"
#include "oddminor/errors.hpp"

namespace oddminor {

namespace {

using Cell = std::pair<int, int>;  // 1-based (row in K_t, column in K_3)

struct TreeSpec {
    std::vector<Cell> path;
    std::size_t prescribed;  // index into path whose color is fixed
    Color color;
};

Vertex k3_vertex(Cell c) { return static_cast<Vertex>((c.first - 1) * 3 + (c.second - 1)); }

// Trees Z_1..Z_{t+2} of the K_t × K_3 construction, as paths.
std::vector<TreeSpec> k3_tree_specs(int t) {
    std::vector<TreeSpec> z = {
        {{{1, 1}, {2, 2}}, 0, 1},
        {{{2, 1}, {3, 2}}, 0, 2},
        {{{1, 3}, {3, 1}}, 0, 1},
        {{{3, 3}, {4, 1}}, 1, 1},
        {{{4, 2}, {5, 3}}, 1, 1},
        // (5,2) must be colored 1: it is the Z_6 endpoint of the Z_1, Z_3,
        // Z_4 and Z_8 connectors, whose other endpoints are colored 1.
        {{{5, 2}, {6, 3}}, 0, 1},
        {{{1, 2}, {2, 3}, {5, 1}}, 1, 1},
    };
    if (t == 6)
        z.push_back({{{6, 1}, {4, 3}, {6, 2}}, 1, 2});
    else
        z.push_back({{{7, 1}, {4, 3}, {6, 2}}, 1, 2});
    for (int i = 9; i <= t + 1; ++i) {
        if (i % 2 == 1)
            z.push_back({{{i - 1, 2}, {i - 3, 1}, {i - 2, 3}}, 1, 2});
        else
            z.push_back({{{i - 1, 1}, {i - 3, 2}, {i - 2, 3}}, 1, 2});
    }
    if (t >= 7) {
        if ((t + 2) % 2 == 1)
            z.push_back({{{t, 2}, {t - 1, 1}, {t, 3}}, 1, 2});
        else
            z.push_back({{{t, 1}, {t - 1, 2}, {t, 3}}, 1, 2});
    }
    return z;
}

}  // namespace

const std::vector<TableEdge>& direct_k3_published_connectors() {
    static const std::vector<TableEdge> table = {
        {1, 2, 1, 1, 3, 2}, {1, 3, 2, 2, 3, 1}, {1, 4, 2, 2, 3, 3}, {1, 5, 1, 1, 5, 3}, {1, 6, 1, 1, 5, 2},
        {1, 7, 1, 1, 2, 3}, {1, 8, 1, 1, 6, 2}, {2, 3, 3, 2, 1, 3}, {2, 4, 2, 2, 3, 3}, {2, 5, 2, 2, 4, 2},
        {2, 6, 2, 2, 6, 3}, {2, 7, 2, 2, 1, 2}, {2, 8, 2, 2, 4, 3}, {3, 4, 1, 3, 4, 1}, {3, 5, 3, 1, 4, 2},
        {3, 6, 1, 3, 5, 2}, {3, 7, 3, 1, 1, 2}, {3, 8, 1, 3, 6, 2}, {4, 5, 4, 1, 5, 3}, {4, 6, 4, 1, 5, 2},
        {4, 7, 4, 1, 2, 3}, {4, 8, 4, 1, 6, 2}, {5, 6, 4, 2, 6, 3}, {5, 7, 4, 2, 5, 1}, {5, 8, 5, 3, 6, 2},
        {6, 7, 6, 3, 5, 1}, {6, 8, 5, 2, 7, 1}, {7, 8, 5, 1, 4, 3},
    };
    return table;
}

std::vector<TableEdge> direct_k3_connector_table(std::size_t t) {
    std::vector<TableEdge> table = direct_k3_published_connectors();
    for (auto& e : table) {
        // The Z_2 row lists (2,2), a Z_1 vertex; the Z_2 vertex with the same
        // color and the same neighbors among the listed partners is (2,1).
        if (e.tree_a == 2 && e.row1 == 2 && e.col1 == 2) e.col1 = 1;
        // Without row 7 the Z_6–Z_8 witness moves to (6,1).
        if (t == 6 && e.tree_a == 6 && e.tree_b == 8) e.row2 = 6, e.col2 = 1;
    }
    return table;
}

OddExpansionModel direct_k3_model(std::size_t t) {
    if (t < 6) throw ParameterError("the K_t × K_3 construction requires t >= 6");
    const auto specs = k3_tree_specs(static_cast<int>(t));
    const Graph host = product(ProductKind::direct, complete_graph(t), complete_graph(3));

    OddExpansionModel m;
    std::vector<std::vector<Vertex>> seqs;
    for (const auto& spec : specs) {
        std::vector<Vertex> seq;
        for (std::size_t k = 0; k < spec.path.size(); ++k) {
            const Vertex v = k3_vertex(spec.path[k]);
            seq.push_back(v);
            const bool same = (k % 2) == (spec.prescribed % 2);
            m.coloring[v] = same ? spec.color : flip(spec.color);
        }
        m.trees.push_back(BranchTree::path(seq));
        seqs.push_back(std::move(seq));
    }

    m.connectors.emplace();
    auto& conns = *m.connectors;
    std::vector<int> owner(host.order(), -1);
    for (std::size_t k = 0; k < m.trees.size(); ++k)
        for (Vertex v : m.trees[k].vertices) owner[v] = static_cast<int>(k);

    for (const auto& e : direct_k3_connector_table(t)) {
        Vertex a = k3_vertex({e.row1, e.col1}), b = k3_vertex({e.row2, e.col2});
        if (owner[a] != e.tree_a - 1) std::swap(a, b);
        conns[{static_cast<std::size_t>(e.tree_a - 1), static_cast<std::size_t>(e.tree_b - 1)}] = {a, b};
    }

    // Trees Z_9.. : equal parity meet at end vertices (color 1), distinct
    // parity at their middle vertices (color 2).
    const std::size_t r = m.trees.size();
    for (std::size_t a = 8; a < r; ++a)
        for (std::size_t b = a + 1; b < r; ++b) {
            const auto& pa = seqs[a];
            const auto& pb = seqs[b];
            std::optional<Connector> best;
            if ((a % 2) == (b % 2)) {
                for (Vertex x : {pa.front(), pa.back()})
                    for (Vertex y : {pb.front(), pb.back()})
                        if (host.adjacent(x, y) && m.coloring[x] == m.coloring[y] &&
                            (!best || Edge::normalized(x, y) < Edge::normalized(best->from, best->to)))
                            best = Connector{x, y};
            } else if (host.adjacent(pa[1], pb[1]) && m.coloring[pa[1]] == m.coloring[pb[1]]) {
                best = Connector{pa[1], pb[1]};
            }
            if (!best)
                throw ConsistencyError("no parity connector between Z_" + std::to_string(a + 1) + " and Z_" +
                                       std::to_string(b + 1));
            conns[{a, b}] = *best;
        }
    // Fixed trees against the rest: least monochromatic edge.
    for (std::size_t a = 0; a < 8; ++a)
        for (std::size_t b = 8; b < r; ++b) {
            auto c = pair_connector(host, m, a, b);
            if (!c)
                throw ConsistencyError("no connector between Z_" + std::to_string(a + 1) + " and Z_" +
                                       std::to_string(b + 1));
            conns[{a, b}] = *c;
        }
    return m;
}

std::size_t direct_k3_upper_bound(std::size_t t) {
    if (t < 6) throw ParameterError("the K_t × K_3 bound requires t >= 6");
    std::size_t best = 0;
    for (std::size_t singles = 0; singles <= 3; ++singles)
        for (std::size_t doubles = 0; doubles <= 6 - 2 * singles; ++doubles) {
            const std::size_t rest = (3 * t - 2 * doubles - singles) / 3;
            best = std::max(best, rest + doubles + singles);
        }
    return best;
}

OddExpansionModel direct_general_model(std::size_t t, std::size_t s) {
    if (t < 4 || s < 3) throw ParameterError("the K_t × K_s construction requires t >= 4 and s >= 3");
    const std::size_t triangles = s / 3;
    // Row i (1-based in K_t), column j of triangle l (both 1-based).
    auto at = [&](std::size_t i, std::size_t j, std::size_t l) {
        return static_cast<Vertex>((i - 1) * s + (j - 1) + 3 * (l - 1));
    };

    OddExpansionModel m;
    std::vector<std::vector<Vertex>> seqs;
    auto add = [&](std::vector<Vertex> seq, bool first_edge_tree) {
        // Ends of a path are colored 1, inner vertices 2; the first-triangle
        // edge tree is fixed by hand below.
        for (std::size_t k = 0; k < seq.size(); ++k) {
            const bool end = (k == 0 || k + 1 == seq.size());
            m.coloring[seq[k]] = (end && !first_edge_tree) ? 1 : 2;
        }
        m.trees.push_back(BranchTree::path(seq));
        seqs.push_back(std::move(seq));
    };

    for (std::size_t i = 1; i <= t; ++i) {
        if (i == 1 || i == 3) {
            add({at(i, i, 1)}, false);
        } else if (i == 2) {
            add({at(3, 1, 1), at(2, 2, 1)}, true);
            m.coloring[at(2, 2, 1)] = 1;
            m.coloring[at(3, 1, 1)] = 2;
        } else if (i == 4) {
            add({at(2, 1, 1), at(1, 2, 1), at(4, 3, 1)}, false);
        } else {
            add({at(i - 1, 1, 1), at(i - 2, 2, 1), at(i, 3, 1)}, false);
        }
    }
    for (std::size_t l = 2; l <= triangles; ++l) {
        add({at(1, 3, l), at(t, 1, l - 1), at(t - 1, 2, l - 1)}, false);
        add({at(t, 2, l - 1), at(1, 1, l), at(2, 3, l)}, false);
        for (std::size_t i = 3; i <= t; ++i) add({at(i, 3, l), at(i - 2, 2, l), at(i - 1, 1, l)}, false);
    }

    const Graph host = product(ProductKind::direct, complete_graph(t), complete_graph(s));
    const std::size_t r = m.trees.size();
    const std::size_t z21 = 1;      // Z_{2,1}
    const std::size_t z22 = t + 1;  // Z_{2,2}
    m.connectors.emplace();
    auto& conns = *m.connectors;
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = a + 1; b < r; ++b) {
            std::optional<Connector> c;
            const auto& pa = seqs[a];
            const auto& pb = seqs[b];
            if (a == z21 && b == z22) {
                c = Connector{at(3, 1, 1), at(1, 1, 2)};
            } else if (pa.size() == 3 && pb.size() == 3) {
                if (host.adjacent(pa[1], pb[1])) {
                    c = Connector{pa[1], pb[1]};
                } else {
                    // Middles share a row or a column: join two end vertices.
                    for (Vertex x : {pa.front(), pa.back()})
                        for (Vertex y : {pb.front(), pb.back()})
                            if (host.adjacent(x, y) &&
                                (!c || Edge::normalized(x, y) < Edge::normalized(c->from, c->to)))
                                c = Connector{x, y};
                }
            } else {
                c = pair_connector(host, m, a, b);
            }
            if (!c || !host.adjacent(c->from, c->to) || m.coloring.at(c->from) != m.coloring.at(c->to))
                throw ConsistencyError("no connector between trees " + std::to_string(a) + " and " +
                                       std::to_string(b));
            conns[{a, b}] = *c;
        }
    return m;
}

}  // namespace oddminor
