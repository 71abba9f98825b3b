#include "common.hpp"

#include <algorithm>

#include "oddminor/errors.hpp"

namespace oddminor {

OddExpansionModel identity_model(std::size_t n) {
    OddExpansionModel m;
    m.connectors.emplace();
    for (Vertex v = 0; v < n; ++v) {
        m.trees.push_back(BranchTree::singleton(v));
        m.coloring[v] = 1;
    }
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) (*m.connectors)[{i, j}] = {i, j};
    return m;
}

std::optional<OddExpansionModel> odd_cycle_model(const Graph& g) {
    auto cycle = find_odd_cycle(g);
    if (!cycle) return std::nullopt;
    const auto& c = *cycle;
    const std::size_t k = (c.size() - 1) / 2;

    OddExpansionModel m;
    m.trees.push_back(BranchTree::singleton(c[0]));
    m.trees.push_back(BranchTree::path(std::vector<Vertex>(c.begin() + 1, c.begin() + 1 + k)));
    m.trees.push_back(BranchTree::path(std::vector<Vertex>(c.begin() + 1 + k, c.end())));
    // Colors alternate along both halves; both ends next to c[0] and the two
    // middle vertices receive equal colors.
    m.coloring[c[0]] = 1;
    for (std::size_t i = 1; i <= k; ++i) m.coloring[c[i]] = (i % 2 == 1) ? 1 : 2;
    for (std::size_t i = k + 1; i <= 2 * k; ++i) m.coloring[c[i]] = (i % 2 == 0) ? 1 : 2;
    m.connectors.emplace();
    (*m.connectors)[{0, 1}] = {c[0], c[1]};
    (*m.connectors)[{0, 2}] = {c[0], c[2 * k]};
    (*m.connectors)[{1, 2}] = {c[k], c[k + 1]};
    return m;
}

namespace {

std::vector<int> owners(std::size_t n, const OddExpansionModel& m) {
    std::vector<int> owner(n, -1);
    for (std::size_t t = 0; t < m.trees.size(); ++t)
        for (Vertex v : m.trees[t].vertices)
            if (v < n) owner[v] = static_cast<int>(t);
    return owner;
}

}  // namespace

std::optional<Connector> pair_connector(const Graph& g, const OddExpansionModel& m, std::size_t i, std::size_t j) {
    if (m.connectors) {
        auto it = m.connectors->find({i, j});
        if (it != m.connectors->end()) return it->second;
    }
    const auto owner = owners(g.order(), m);
    for (const auto& e : g.edges()) {
        const int a = owner[e.u], b = owner[e.v];
        if (a < 0 || b < 0 || m.coloring.at(e.u) != m.coloring.at(e.v)) continue;
        if (a == static_cast<int>(i) && b == static_cast<int>(j)) return Connector{e.u, e.v};
        if (a == static_cast<int>(j) && b == static_cast<int>(i)) return Connector{e.v, e.u};
    }
    return std::nullopt;
}

void attach_connectors(const Graph& g, OddExpansionModel& m) {
    if (!m.connectors) m.connectors.emplace();
    auto& conns = *m.connectors;
    const auto owner = owners(g.order(), m);
    // Edges are sorted, so the first hit per pair is the least one.
    for (const auto& e : g.edges()) {
        int a = owner[e.u], b = owner[e.v];
        if (a < 0 || b < 0 || a == b) continue;
        auto ca = m.coloring.find(e.u), cb = m.coloring.find(e.v);
        if (ca == m.coloring.end() || cb == m.coloring.end() || ca->second != cb->second) continue;
        Connector c{e.u, e.v};
        if (a > b) {
            std::swap(a, b);
            std::swap(c.from, c.to);
        }
        conns.try_emplace({static_cast<std::size_t>(a), static_cast<std::size_t>(b)}, c);
    }
    const std::size_t r = m.trees.size();
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j)
            if (!conns.count({i, j}))
                throw ConsistencyError("no monochromatic edge between trees " + std::to_string(i) + " and " +
                                       std::to_string(j));
}

WitnessColoring witness_product_coloring(const WitnessColoring& cg, const WitnessColoring& ch,
                                         const std::vector<ProductVertex>& domain, std::size_t second_order) {
    WitnessColoring out;
    for (const auto& p : domain) {
        auto a = cg.find(p.a);
        if (a == cg.end())
            throw ColoringMissingError("first factor vertex " + std::to_string(p.a) + " is uncolored", p.a);
        auto b = ch.find(p.b);
        if (b == ch.end())
            throw ColoringMissingError("second factor vertex " + std::to_string(p.b) + " is uncolored", p.b);
        out[flatten(p, second_order)] = (a->second == b->second) ? 1 : 2;
    }
    return out;
}

OddExpansionModel swap_product_coordinates(const OddExpansionModel& m, std::size_t first_order,
                                           std::size_t second_order) {
    auto swap = [&](Vertex x) {
        auto p = unflatten(x, second_order);
        return flatten({p.b, p.a}, first_order);
    };
    OddExpansionModel out;
    out.flags = m.flags;
    for (const auto& tree : m.trees) {
        BranchTree t;
        for (Vertex v : tree.vertices) t.vertices.push_back(swap(v));
        for (const auto& e : tree.edges) t.edges.push_back(Edge::normalized(swap(e.u), swap(e.v)));
        t.normalize();
        out.trees.push_back(std::move(t));
    }
    for (const auto& [v, c] : m.coloring) out.coloring[swap(v)] = c;
    if (m.connectors) {
        out.connectors.emplace();
        for (const auto& [pair, c] : *m.connectors) (*out.connectors)[pair] = {swap(c.from), swap(c.to)};
    }
    return out;
}

namespace detail {

void require_valid(const Graph& g, const OddExpansionModel& m, const char* role) {
    if (auto verdict = verify_odd_expansion(g, m); !verdict)
        throw ModelInputError(std::string(role) + " model does not verify: " + verdict.summary(m.clique_order()),
                              verdict);
}

void require_passes(const Graph& host, const OddExpansionModel& m, const char* what) {
    if (auto verdict = verify_odd_expansion(host, m, {.require_connectors = true}); !verdict)
        throw ConsistencyError(std::string(what) + " produced an invalid model: " + verdict.summary(m.clique_order()));
}

}  // namespace detail

}  // namespace oddminor
