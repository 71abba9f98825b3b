#include <string>

#include "oddminor/errors.hpp"
#include "oddminor/graph.hpp"

namespace oddminor {

ProductKind parse_product_kind(std::string_view name) {
    if (name == "cartesian") return ProductKind::cartesian;
    if (name == "direct" || name == "tensor") return ProductKind::direct;
    if (name == "lexicographic" || name == "lex") return ProductKind::lexicographic;
    if (name == "strong") return ProductKind::strong;
    throw ParameterError("unknown product kind '" + std::string(name) + "'");
}

std::string_view to_string(ProductKind kind) {
    switch (kind) {
    case ProductKind::cartesian: return "cartesian";
    case ProductKind::direct: return "direct";
    case ProductKind::lexicographic: return "lexicographic";
    case ProductKind::strong: return "strong";
    }
    return "?";
}

namespace {

void add_cartesian(const Graph& g, const Graph& h, std::vector<Edge>& out) {
    const std::size_t nh = h.order();
    for (Vertex a = 0; a < g.order(); ++a)
        for (const auto& e : h.edges()) out.push_back({flatten({a, e.u}, nh), flatten({a, e.v}, nh)});
    for (const auto& e : g.edges())
        for (Vertex b = 0; b < nh; ++b) out.push_back({flatten({e.u, b}, nh), flatten({e.v, b}, nh)});
}

void add_direct(const Graph& g, const Graph& h, std::vector<Edge>& out) {
    const std::size_t nh = h.order();
    for (const auto& eg : g.edges())
        for (const auto& eh : h.edges()) {
            out.push_back({flatten({eg.u, eh.u}, nh), flatten({eg.v, eh.v}, nh)});
            out.push_back({flatten({eg.u, eh.v}, nh), flatten({eg.v, eh.u}, nh)});
        }
}

}  // namespace

Graph product(ProductKind kind, const Graph& g, const Graph& h) {
    const std::size_t nh = h.order();
    std::vector<Edge> edges;
    switch (kind) {
    case ProductKind::cartesian:
        add_cartesian(g, h, edges);
        break;
    case ProductKind::direct:
        add_direct(g, h, edges);
        break;
    case ProductKind::strong:
        add_cartesian(g, h, edges);
        add_direct(g, h, edges);
        break;
    case ProductKind::lexicographic:
        for (Vertex a = 0; a < g.order(); ++a)
            for (const auto& e : h.edges()) edges.push_back({flatten({a, e.u}, nh), flatten({a, e.v}, nh)});
        for (const auto& e : g.edges())
            for (Vertex b1 = 0; b1 < nh; ++b1)
                for (Vertex b2 = 0; b2 < nh; ++b2) edges.push_back({flatten({e.u, b1}, nh), flatten({e.v, b2}, nh)});
        break;
    }
    return Graph(g.order() * nh, std::move(edges));
}

}  // namespace oddminor
