#include "common.hpp"
#include "oddminor/errors.hpp"

namespace oddminor {

BaseModel cartesian_complete_model(std::size_t s, std::size_t t) {
    if (s < 2 || t < 2) throw ParameterError("the K_s □ K_t construction requires s >= 2 and t >= 2");
    auto at = [t](std::size_t row, std::size_t col) { return static_cast<Vertex>(row * t + col); };

    BaseModel base{s, t, {}};
    auto& m = base.model;
    // Singletons on row 0, columns 0..t-2; column t-1 of row 0 stays unused.
    for (std::size_t k = 0; k + 1 < t; ++k) {
        m.trees.push_back(BranchTree::singleton(at(0, k)));
        m.coloring[at(0, k)] = 1;
    }
    // Rows 1..s-1: star centered at the last column, leaves on columns 0..t-2.
    for (std::size_t row = 1; row < s; ++row) {
        BranchTree star;
        star.vertices.push_back(at(row, t - 1));
        m.coloring[at(row, t - 1)] = 2;
        for (std::size_t col = 0; col + 1 < t; ++col) {
            star.vertices.push_back(at(row, col));
            star.edges.push_back(Edge::normalized(at(row, col), at(row, t - 1)));
            m.coloring[at(row, col)] = 1;
        }
        star.normalize();
        m.trees.push_back(std::move(star));
    }

    m.connectors.emplace();
    auto& conns = *m.connectors;
    const std::size_t singles = t - 1;
    for (std::size_t a = 0; a < singles; ++a)
        for (std::size_t b = a + 1; b < singles; ++b) conns[{a, b}] = {at(0, a), at(0, b)};
    for (std::size_t a = 0; a < singles; ++a)
        for (std::size_t row = 1; row < s; ++row) conns[{a, singles + row - 1}] = {at(0, a), at(row, a)};
    for (std::size_t r1 = 1; r1 < s; ++r1)
        for (std::size_t r2 = r1 + 1; r2 < s; ++r2)
            conns[{singles + r1 - 1, singles + r2 - 1}] = {at(r1, t - 1), at(r2, t - 1)};
    return base;
}

BaseModel default_cartesian_base(std::size_t s, std::size_t t) {
    if (s >= 2 && t >= 2) return cartesian_complete_model(s, t);
    if (s == 0 || t == 0) throw ParameterError("factor models must have at least one tree");
    // K_1 □ K_t and K_s □ K_1 are complete graphs under the flattening.
    return {s, t, identity_model(s * t)};
}

OddExpansionModel cartesian_lift(const Graph& g, const OddExpansionModel& mg, const Graph& h,
                                 const OddExpansionModel& mh, const BaseModel& base) {
    const std::size_t s = mg.clique_order(), t = mh.clique_order();
    if (base.s != s || base.t != t)
        throw ParameterError("base model is for K_" + std::to_string(base.s) + " □ K_" + std::to_string(base.t) +
                             " but the factor models have orders " + std::to_string(s) + " and " + std::to_string(t));
    const Graph base_host = product(ProductKind::cartesian, complete_graph(s), complete_graph(t));
    detail::require_valid(base_host, base.model, "base");

    const GridForest grid = product_grid_forest(g, mg, h, mh, GridMode::cartesian);
    const auto& rm = base.model;

    // Base vertex (i, j) flattens to i*t + j, which is also the cell index.
    auto cross = [&](Vertex x, Vertex y) -> Connector {
        auto it = grid.cross_edges.find({std::min(x, y), std::max(x, y)});
        if (it == grid.cross_edges.end())
            throw ConsistencyError("base edge " + std::to_string(x) + "-" + std::to_string(y) +
                                   " changes both coordinates");
        return x < y ? it->second : Connector{it->second.to, it->second.from};
    };

    OddExpansionModel out;
    for (const auto& r_tree : rm.trees) {
        BranchTree z;
        for (Vertex x : r_tree.vertices) {
            const auto& cell = grid.cells[x];
            const bool keep = rm.coloring.at(x) == 1;
            z.vertices.insert(z.vertices.end(), cell.vertices.begin(), cell.vertices.end());
            z.edges.insert(z.edges.end(), cell.edges.begin(), cell.edges.end());
            for (Vertex y : cell.vertices) {
                const Color c = grid.coloring.at(y);
                out.coloring[y] = keep ? c : flip(c);
            }
        }
        for (const auto& e : r_tree.edges) {
            auto c = cross(e.u, e.v);
            z.edges.push_back(Edge::normalized(c.from, c.to));
        }
        z.normalize();
        out.trees.push_back(std::move(z));
    }

    out.connectors.emplace();
    for (std::size_t a = 0; a < rm.trees.size(); ++a)
        for (std::size_t b = a + 1; b < rm.trees.size(); ++b) {
            auto base_conn = pair_connector(base_host, rm, a, b);
            if (!base_conn) throw ConsistencyError("verified base model lacks a connector");
            (*out.connectors)[{a, b}] = cross(base_conn->from, base_conn->to);
        }
    return out;
}

OddExpansionModel hamming_model(std::size_t n, std::size_t d) {
    if (n < 2 || d < 1) throw ParameterError("the Hamming construction requires n >= 2 and d >= 1");
    const Graph kn = complete_graph(n);
    const OddExpansionModel kn_model = identity_model(n);
    Graph host = kn;
    OddExpansionModel model = kn_model;
    for (std::size_t step = 2; step <= d; ++step) {
        const auto base = cartesian_complete_model(model.clique_order(), n);
        model = cartesian_lift(host, model, kn, kn_model, base);
        host = product(ProductKind::cartesian, host, kn);
    }
    return model;
}

}  // namespace oddminor
