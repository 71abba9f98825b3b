#include <algorithm>

#include "common.hpp"
#include "oddminor/errors.hpp"

namespace oddminor {

namespace {

// Vertex of maximum degree (lowest id on ties) and its sorted neighbors: a
// star S_d subgraph with center at index 0.
std::vector<Vertex> max_star(const Graph& g) {
    Vertex center = 0;
    for (Vertex v = 1; v < g.order(); ++v)
        if (g.degree(v) > g.degree(center)) center = v;
    std::vector<Vertex> out{center};
    for (Vertex w : g.neighbors(center)) out.push_back(w);
    return out;
}

OddExpansionModel relabel(const OddExpansionModel& m, const std::vector<Vertex>& ga, const std::vector<Vertex>& hb,
                          std::size_t nh) {
    auto map = [&](Vertex x) {
        auto p = unflatten(x, hb.size());
        return flatten({ga[p.a], hb[p.b]}, nh);
    };
    OddExpansionModel out;
    for (const auto& tree : m.trees) {
        BranchTree t;
        for (Vertex v : tree.vertices) t.vertices.push_back(map(v));
        for (const auto& e : tree.edges) t.edges.push_back(Edge::normalized(map(e.u), map(e.v)));
        t.normalize();
        out.trees.push_back(std::move(t));
    }
    for (const auto& [v, c] : m.coloring) out.coloring[map(v)] = c;
    out.connectors.emplace();
    for (const auto& [pair, c] : *m.connectors) (*out.connectors)[pair] = {map(c.from), map(c.to)};
    return out;
}

void consider(BestBound& best, OddExpansionModel m, std::string route) {
    if (best.model && m.clique_order() <= best.order) return;
    best.order = m.clique_order();
    best.model = std::move(m);
    best.route = std::move(route);
}

}  // namespace

BestBound best_lower_bound(const Graph& g, const OddExpansionModel& mg, const Graph& h, const OddExpansionModel& mh,
                           ProductKind kind) {
    detail::require_valid(g, mg, "first factor");
    detail::require_valid(h, mh, "second factor");
    const Graph host = product(kind, g, h);
    BestBound best;

    switch (kind) {
    case ProductKind::cartesian:
        consider(best, cartesian_lift(g, mg, h, mh, default_cartesian_base(mg.clique_order(), mh.clique_order())),
                 "cartesian-lift");
        break;
    case ProductKind::strong:
    case ProductKind::lexicographic: {
        consider(best, strong_model(g, mg, h, mh, kind), kind == ProductKind::strong ? "strong" : "lex");
        const auto sg = max_star(g), sh = max_star(h);
        if (sg.size() >= 2 && sh.size() >= 2) {
            const std::size_t r = sg.size() - 1, t = sh.size() - 1;
            consider(best, relabel(star_model(r, t), sg, sh, h.order()), "stars");
        }
        break;
    }
    case ProductKind::direct: {
        const std::size_t t = g.order(), s = h.order();
        if (is_complete(g) && is_complete(h)) {
            if (s == 3 && t >= 6) consider(best, direct_k3_model(t), "direct-k3");
            if (t == 3 && s >= 6) consider(best, swap_product_coordinates(direct_k3_model(s), s, t), "direct-k3");
            if (t >= 4 && s >= 3) consider(best, direct_general_model(t, s), "direct-general");
            if (s >= 4 && t >= 3)
                consider(best, swap_product_coordinates(direct_general_model(s, t), s, t), "direct-general");
        }
        if (!best.model) {
            if (auto m = odd_cycle_model(host)) {
                consider(best, std::move(*m), "odd-cycle");
            } else if (host.size() > 0) {
                const Edge e = host.edges().front();
                OddExpansionModel m;
                m.trees = {BranchTree::singleton(e.u), BranchTree::singleton(e.v)};
                m.coloring = {{e.u, 1}, {e.v, 1}};
                m.connectors = std::map<TreePair, Connector>{{{0, 1}, {e.u, e.v}}};
                consider(best, std::move(m), "edge");
            }
        }
        if (!best.model) best.route = "no construction applies";
        break;
    }
    }
    if (best.model) detail::require_passes(host, *best.model, best.route.c_str());
    return best;
}

}  // namespace oddminor
