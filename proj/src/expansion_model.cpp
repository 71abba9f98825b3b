#include "oddminor/expansion_model.hpp"

#include <omp.h>

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

namespace oddminor {

BranchTree BranchTree::path(std::initializer_list<Vertex> seq) { return path(std::vector<Vertex>(seq)); }

BranchTree BranchTree::path(const std::vector<Vertex>& seq) {
    BranchTree t;
    t.vertices = seq;
    for (std::size_t k = 0; k + 1 < seq.size(); ++k) t.edges.push_back(Edge::normalized(seq[k], seq[k + 1]));
    t.normalize();
    return t;
}

void BranchTree::normalize() {
    std::sort(vertices.begin(), vertices.end());
    for (auto& e : edges) e = Edge::normalized(e.u, e.v);
    std::sort(edges.begin(), edges.end());
}

OddExpansionModel color_swapped(const OddExpansionModel& m) {
    OddExpansionModel out = m;
    for (auto& [v, c] : out.coloring) c = flip(c);
    return out;
}

std::string_view to_string(Clause clause) {
    switch (clause) {
    case Clause::disjointness: return "disjointness";
    case Clause::tree_shape: return "tree_shape";
    case Clause::edge_membership: return "edge_membership";
    case Clause::coloring_missing: return "coloring_missing";
    case Clause::properness: return "properness";
    case Clause::connector_missing: return "connector_missing";
    case Clause::connector_invalid: return "connector_invalid";
    }
    return "?";
}

std::string Verdict::summary(std::size_t order) const {
    std::ostringstream out;
    if (pass) {
        out << "PASS order=" << order;
        return out.str();
    }
    out << "FAIL " << to_string(clause);
    if (trees.size() == 2)
        out << " pair=(" << trees[0] << "," << trees[1] << ")";
    else if (trees.size() == 1)
        out << " tree=" << trees[0];
    for (Vertex v : vertices) out << " vertex=" << v;
    for (const auto& e : edges) out << " edge=" << e.u << "-" << e.v;
    if (!detail.empty()) out << " (" << detail << ")";
    return out.str();
}

namespace {

Verdict fail(Clause clause, std::vector<std::size_t> trees, std::vector<Vertex> vertices, std::vector<Edge> edges,
             std::string detail) {
    return Verdict{false, clause, std::move(trees), std::move(vertices), std::move(edges), std::move(detail)};
}

Verdict check_disjointness(const OddExpansionModel& m) {
    std::vector<std::pair<Vertex, std::size_t>> occurrences;
    for (std::size_t t = 0; t < m.trees.size(); ++t)
        for (Vertex v : m.trees[t].vertices) occurrences.emplace_back(v, t);
    std::sort(occurrences.begin(), occurrences.end());
    occurrences.erase(std::unique(occurrences.begin(), occurrences.end()), occurrences.end());

    std::optional<std::tuple<std::size_t, std::size_t, Vertex>> worst;
    for (std::size_t a = 0; a < occurrences.size();) {
        std::size_t b = a;
        while (b < occurrences.size() && occurrences[b].first == occurrences[a].first) ++b;
        if (b - a > 1) {
            // Trees are sorted within the run; the two lowest give the least pair.
            std::tuple<std::size_t, std::size_t, Vertex> cand{occurrences[a].second, occurrences[a + 1].second,
                                                             occurrences[a].first};
            if (!worst || cand < *worst) worst = cand;
        }
        a = b;
    }
    if (!worst) return {};
    auto [i, j, v] = *worst;
    return fail(Clause::disjointness, {i, j}, {v}, {}, "trees share a vertex");
}

Verdict check_tree_shape(const BranchTree& tree, std::size_t index) {
    const auto& vs = tree.vertices;
    if (vs.empty()) return fail(Clause::tree_shape, {index}, {}, {}, "empty tree");
    std::vector<Vertex> sorted = vs;
    std::sort(sorted.begin(), sorted.end());
    if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end())
        return fail(Clause::tree_shape, {index}, {*dup}, {}, "repeated vertex");

    auto local = [&](Vertex v) -> std::optional<std::size_t> {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
        if (it == sorted.end() || *it != v) return std::nullopt;
        return static_cast<std::size_t>(it - sorted.begin());
    };

    std::vector<Edge> edges;
    for (const auto& e : tree.edges) edges.push_back(Edge::normalized(e.u, e.v));
    std::sort(edges.begin(), edges.end());
    if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
        return fail(Clause::tree_shape, {index}, {}, {*dup}, "repeated edge");

    std::vector<std::size_t> parent(sorted.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : edges) {
        auto a = local(e.u), b = local(e.v);
        if (e.u == e.v || !a || !b)
            return fail(Clause::tree_shape, {index}, {}, {e}, "edge endpoint outside the tree's vertex set");
        auto ra = find(*a), rb = find(*b);
        if (ra == rb) return fail(Clause::tree_shape, {index}, {}, {e}, "edge closes a cycle");
        parent[ra] = rb;
    }
    if (edges.size() + 1 != sorted.size()) {
        for (std::size_t k = 1; k < sorted.size(); ++k)
            if (find(k) != find(0))
                return fail(Clause::tree_shape, {index}, {sorted[k]}, {}, "tree is disconnected");
    }
    return {};
}

Verdict check_membership(const Graph& g, const OddExpansionModel& m) {
    for (std::size_t t = 0; t < m.trees.size(); ++t) {
        for (Vertex v : m.trees[t].vertices)
            if (v >= g.order()) return fail(Clause::edge_membership, {t}, {v}, {}, "vertex not in host graph");
        for (const auto& e : m.trees[t].edges)
            if (!g.adjacent(e.u, e.v)) return fail(Clause::edge_membership, {t}, {}, {e}, "tree edge not in host graph");
    }
    for (const auto& [v, c] : m.coloring)
        if (v >= g.order()) return fail(Clause::edge_membership, {}, {v}, {}, "colored vertex not in host graph");
    return {};
}

Verdict check_coloring(const OddExpansionModel& m) {
    std::optional<std::pair<Vertex, std::size_t>> worst;
    for (std::size_t t = 0; t < m.trees.size(); ++t)
        for (Vertex v : m.trees[t].vertices) {
            auto it = m.coloring.find(v);
            if (it == m.coloring.end() || (it->second != 1 && it->second != 2))
                if (!worst || v < worst->first) worst = std::pair{v, t};
        }
    if (!worst) return {};
    return fail(Clause::coloring_missing, {worst->second}, {worst->first}, {}, "used vertex has no color in {1,2}");
}

Verdict check_properness(const OddExpansionModel& m) {
    for (std::size_t t = 0; t < m.trees.size(); ++t)
        for (const auto& e : m.trees[t].edges)
            if (m.coloring.at(e.u) == m.coloring.at(e.v))
                return fail(Clause::properness, {t}, {}, {Edge::normalized(e.u, e.v)}, "tree edge is monochromatic");
    return {};
}

// Stages one to five; connectors are handled by the serial/parallel kernels.
Verdict check_structure(const Graph& g, const OddExpansionModel& m) {
    if (auto v = check_disjointness(m); !v) return v;
    for (std::size_t t = 0; t < m.trees.size(); ++t)
        if (auto v = check_tree_shape(m.trees[t], t); !v) return v;
    if (auto v = check_membership(g, m); !v) return v;
    if (auto v = check_coloring(m); !v) return v;
    return check_properness(m);
}

struct ConnectorContext {
    std::vector<int> owner;   // tree index per host vertex, -1 if unused
    std::vector<Color> color;  // 0 if uncolored
    std::size_t r = 0;
};

ConnectorContext make_context(const Graph& g, const OddExpansionModel& m) {
    ConnectorContext ctx{std::vector<int>(g.order(), -1), std::vector<Color>(g.order(), 0), m.trees.size()};
    for (std::size_t t = 0; t < m.trees.size(); ++t)
        for (Vertex v : m.trees[t].vertices) ctx.owner[v] = static_cast<int>(t);
    for (const auto& [v, c] : m.coloring) ctx.color[v] = c;
    return ctx;
}

std::optional<Verdict> check_stored(const Graph& g, const ConnectorContext& ctx, TreePair pair, Connector c) {
    auto [i, j] = pair;
    Edge e = Edge::normalized(c.from, c.to);
    if (i >= j || j >= ctx.r)
        return fail(Clause::connector_invalid, {i, j}, {}, {e}, "connector names a non-existent tree pair");
    if (c.from >= g.order() || c.to >= g.order() || !g.adjacent(c.from, c.to))
        return fail(Clause::connector_invalid, {i, j}, {}, {e}, "connector is not a host edge");
    if (ctx.owner[c.from] != static_cast<int>(i) || ctx.owner[c.to] != static_cast<int>(j))
        return fail(Clause::connector_invalid, {i, j}, {}, {e}, "connector endpoints are not in the paired trees");
    if (ctx.color[c.from] != ctx.color[c.to])
        return fail(Clause::connector_invalid, {i, j}, {}, {e}, "connector is not monochromatic");
    return std::nullopt;
}

Verdict missing(std::size_t i, std::size_t j, bool stored_only) {
    return fail(Clause::connector_missing, {i, j}, {}, {},
                stored_only ? "no stored connector for this pair" : "no monochromatic edge between the trees");
}

}  // namespace

Verdict verify_serial(const Graph& g, const OddExpansionModel& m, bool require_connectors) {
    if (auto v = check_structure(g, m); !v) return v;
    const auto ctx = make_context(g, m);
    const std::size_t r = ctx.r;

    if (m.connectors)
        for (const auto& [pair, c] : *m.connectors)
            if (pair.first >= pair.second || pair.second >= r) return *check_stored(g, ctx, pair, c);

    std::vector<char> found(r * r, 0);
    if (!require_connectors)
        for (const auto& e : g.edges()) {
            int a = ctx.owner[e.u], b = ctx.owner[e.v];
            if (a < 0 || b < 0 || a == b || ctx.color[e.u] != ctx.color[e.v]) continue;
            found[std::min(a, b) * r + std::max(a, b)] = 1;
        }

    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j) {
            if (m.connectors) {
                auto it = m.connectors->find({i, j});
                if (it != m.connectors->end()) {
                    if (auto bad = check_stored(g, ctx, {i, j}, it->second)) return *bad;
                    continue;
                }
            }
            if (!found[i * r + j]) return missing(i, j, require_connectors);
        }
    return {};
}

Verdict verify_parallel(const Graph& g, const OddExpansionModel& m, bool require_connectors, int jobs) {
    if (auto v = check_structure(g, m); !v) return v;
    const auto ctx = make_context(g, m);
    const std::size_t r = ctx.r;

    if (m.connectors)
        for (const auto& [pair, c] : *m.connectors)
            if (pair.first >= pair.second || pair.second >= r) return *check_stored(g, ctx, pair, c);

    const auto& edges = g.edges();
    const std::ptrdiff_t edge_count = static_cast<std::ptrdiff_t>(edges.size());
    std::vector<char> found(r * r, 0);
    if (!require_connectors) {
#pragma omp parallel num_threads(jobs)
        {
            std::vector<char> local(r * r, 0);
#pragma omp for schedule(static) nowait
            for (std::ptrdiff_t k = 0; k < edge_count; ++k) {
                const auto& e = edges[k];
                int a = ctx.owner[e.u], b = ctx.owner[e.v];
                if (a < 0 || b < 0 || a == b || ctx.color[e.u] != ctx.color[e.v]) continue;
                local[std::min(a, b) * r + std::max(a, b)] = 1;
            }
#pragma omp critical
            for (std::size_t k = 0; k < local.size(); ++k) found[k] |= local[k];
        }
    }

    // Stored connectors: evaluate in parallel, then report the least failing pair.
    const std::ptrdiff_t pair_count = static_cast<std::ptrdiff_t>(r * r);
    std::ptrdiff_t first_bad = pair_count;
#pragma omp parallel for num_threads(jobs) schedule(dynamic, 64) reduction(min : first_bad)
    for (std::ptrdiff_t k = 0; k < pair_count; ++k) {
        std::size_t i = static_cast<std::size_t>(k) / r, j = static_cast<std::size_t>(k) % r;
        if (i >= j) continue;
        bool ok = found[k] != 0;
        if (m.connectors) {
            auto it = m.connectors->find({i, j});
            if (it != m.connectors->end()) ok = !check_stored(g, ctx, {i, j}, it->second).has_value();
        }
        if (!ok && k < first_bad) first_bad = k;
    }
    if (first_bad == pair_count) return {};
    std::size_t i = static_cast<std::size_t>(first_bad) / r, j = static_cast<std::size_t>(first_bad) % r;
    if (m.connectors) {
        auto it = m.connectors->find({i, j});
        if (it != m.connectors->end()) return *check_stored(g, ctx, {i, j}, it->second);
    }
    return missing(i, j, require_connectors);
}

Verdict verify_odd_expansion(const Graph& g, const OddExpansionModel& m, const VerifyOptions& opts) {
    if (opts.jobs > 1) return verify_parallel(g, m, opts.require_connectors, opts.jobs);
    return verify_serial(g, m, opts.require_connectors);
}

}  // namespace oddminor
