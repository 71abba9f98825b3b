#include "common.hpp"
#include "oddminor/errors.hpp"

namespace oddminor {

OddExpansionModel strong_model(const Graph& g, const OddExpansionModel& mg, const Graph& h,
                               const OddExpansionModel& mh, ProductKind kind) {
    if (kind != ProductKind::strong && kind != ProductKind::lexicographic)
        throw ParameterError("strong_model builds for strong or lexicographic products only");
    const GridForest grid = product_grid_forest(g, mg, h, mh, GridMode::strong);
    const std::size_t s = grid.s, t = grid.t, nh = grid.second_order;

    OddExpansionModel out;
    out.trees = grid.cells;
    out.coloring = grid.coloring;
    if (s < 2 || t < 2) out.flags.push_back(kOutsidePreconditions);

    std::map<TreePair, Connector> g_conn, h_conn;
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t k = i + 1; k < s; ++k) g_conn[{i, k}] = *pair_connector(g, mg, i, k);
    for (std::size_t j = 0; j < t; ++j)
        for (std::size_t k = j + 1; k < t; ++k) h_conn[{j, k}] = *pair_connector(h, mh, j, k);

    out.connectors.emplace();
    for (std::size_t a = 0; a < s * t; ++a)
        for (std::size_t b = a + 1; b < s * t; ++b) {
            const std::size_t i = a / t, j = a % t, i2 = b / t, j2 = b % t;
            if (i == i2 || j == j2) {
                (*out.connectors)[{a, b}] = grid.cross_edges.at({a, b});
                continue;
            }
            // Diagonal pair: combine the two monochromatic factor edges into
            // one direct-product edge (i < i2 because a < b).
            const Connector gc = g_conn.at({i, i2});
            const Connector hc = h_conn.at({std::min(j, j2), std::max(j, j2)});
            const Vertex p = j < j2 ? hc.from : hc.to;
            const Vertex q = j < j2 ? hc.to : hc.from;
            (*out.connectors)[{a, b}] = {flatten({gc.from, p}, nh), flatten({gc.to, q}, nh)};
        }
    return out;
}

std::size_t star_model_order(std::size_t r, std::size_t t) { return r == t ? r + 1 : std::min(r, t) + 2; }

OddExpansionModel star_model(std::size_t r, std::size_t t) {
    if (r < 1 || t < 1) throw ParameterError("the star construction requires r >= 1 and t >= 1");
    // Build with the smaller star as the u-coordinate; map back if the
    // caller's first factor is the larger star.
    const bool swapped = r > t;
    const std::size_t small = std::min(r, t), large = std::max(r, t);
    const std::size_t nh = t + 1;
    auto vert = [&](std::size_t a, std::size_t b) {
        return static_cast<Vertex>(swapped ? b * nh + a : a * nh + b);
    };

    OddExpansionModel m;
    for (std::size_t i = 1; i <= small; ++i) {
        m.trees.push_back(BranchTree::path({vert(i, 0), vert(i, i), vert(0, i)}));
        m.coloring[vert(i, 0)] = 2;
        m.coloring[vert(i, i)] = 1;
        m.coloring[vert(0, i)] = 2;
    }
    const std::size_t center = m.trees.size();
    m.trees.push_back(BranchTree::singleton(vert(0, 0)));
    m.coloring[vert(0, 0)] = 2;
    const bool extra = large > small;
    if (extra) {
        m.trees.push_back(BranchTree::singleton(vert(0, large)));
        m.coloring[vert(0, large)] = 2;
    }

    m.connectors.emplace();
    auto& conns = *m.connectors;
    for (std::size_t i = 1; i <= small; ++i) {
        for (std::size_t k = i + 1; k <= small; ++k) conns[{i - 1, k - 1}] = {vert(i, 0), vert(0, k)};
        conns[{i - 1, center}] = {vert(i, 0), vert(0, 0)};
        if (extra) conns[{i - 1, center + 1}] = {vert(i, 0), vert(0, large)};
    }
    if (extra) conns[{center, center + 1}] = {vert(0, 0), vert(0, large)};
    return m;
}

}  // namespace oddminor
