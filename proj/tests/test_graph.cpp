#include <doctest.h>

#include <random>

#include "oddminor/errors.hpp"
#include "oddminor/graph.hpp"
#include "oddminor/graph_io.hpp"
#include "support/reference.hpp"

using namespace oddminor;

TEST_CASE("graph construction normalizes and rejects bad edges") {
    Graph g(4, {{2, 1}, {0, 3}, {1, 0}});
    CHECK(g.size() == 3);
    CHECK(g.edges().front() == Edge{0, 1});
    CHECK(g.adjacent(1, 2));
    CHECK(g.adjacent(2, 1));
    CHECK_FALSE(g.adjacent(2, 3));
    CHECK(g.degree(0) == 2);
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), ParameterError);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), ParameterError);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), ParameterError);
}

TEST_CASE("named families") {
    CHECK(complete_graph(5).size() == 10);
    CHECK(star_graph(4).degree(0) == 4);
    CHECK(cycle_graph(6).size() == 6);
    CHECK(path_graph(4).size() == 3);
    const Graph q3 = hamming_graph(2, 3);
    CHECK(q3.order() == 8);
    CHECK(q3.size() == 12);
    CHECK(hamming_graph(3, 3) == product(ProductKind::cartesian, hamming_graph(3, 2), complete_graph(3)));
    const int p[] = {3, 2};
    CHECK(make_named_graph(parse_family("hamming"), p) == hamming_graph(3, 2));
    CHECK_THROWS_AS(parse_family("wheel"), ParameterError);
}

TEST_CASE("product sizes") {
    const Graph k2 = complete_graph(2), k3 = complete_graph(3);
    CHECK(product(ProductKind::strong, k3, k3).size() == 36);
    CHECK(product(ProductKind::strong, k3, k3).order() == 9);
    CHECK(product(ProductKind::cartesian, k2, k2).size() == 4);
    CHECK(product(ProductKind::direct, k2, k2).size() == 2);
    CHECK(product(ProductKind::lexicographic, k3, k3) == complete_graph(9));
}

TEST_CASE("products agree with the adjacency definitions") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        auto random_graph = [&](std::size_t n) {
            std::vector<Edge> e;
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = u + 1; v < n; ++v)
                    if (rng() % 2) e.push_back({u, v});
            return Graph(n, e);
        };
        const Graph g = random_graph(2 + rng() % 4), h = random_graph(2 + rng() % 4);
        for (auto kind : {ProductKind::cartesian, ProductKind::direct, ProductKind::strong, ProductKind::lexicographic})
            CHECK(product(kind, g, h).edges() == ref::product_edges(kind, g, h));
    }
}

TEST_CASE("product kind names") {
    CHECK(parse_product_kind("tensor") == ProductKind::direct);
    CHECK(parse_product_kind("lex") == ProductKind::lexicographic);
    CHECK(to_string(ProductKind::strong) == "strong");
    CHECK_THROWS_AS(parse_product_kind("box"), ParameterError);
    CHECK(unflatten(flatten({3, 2}, 5), 5) == ProductVertex{3, 2});
}

TEST_CASE("spanning tree of C4") {
    const Graph c4 = cycle_graph(4);
    const Vertex all[] = {0, 1, 2, 3};
    CHECK(spanning_tree(c4, all) == std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}});
    const Vertex split[] = {0, 2};
    CHECK_THROWS_AS(spanning_tree(c4, split), StructureError);
}

TEST_CASE("bipartiteness and odd cycles") {
    CHECK(is_bipartite(cycle_graph(6)));
    CHECK_FALSE(is_bipartite(cycle_graph(7)));
    CHECK_FALSE(find_odd_cycle(hamming_graph(2, 4)));
    const Graph petersen = parse_graph6("IheA@GUAo");
    auto cyc = find_odd_cycle(petersen);
    REQUIRE(cyc);
    CHECK(cyc->size() % 2 == 1);
    for (std::size_t i = 0; i < cyc->size(); ++i)
        CHECK(petersen.adjacent((*cyc)[i], (*cyc)[(i + 1) % cyc->size()]));
    CHECK(connected_components(Graph(5, {{0, 1}, {2, 3}})) == 3);
    CHECK(is_complete(complete_graph(4)));
    CHECK_FALSE(is_complete(cycle_graph(4)));
}

TEST_CASE("graph6 vectors") {
    CHECK(to_graph6(complete_graph(4)) == "C~");
    CHECK(to_graph6(cycle_graph(5)) == "Dhc");
    CHECK(to_graph6(path_graph(3)) == "Bg");
    CHECK(to_graph6(Graph(1, {})) == "@");
    CHECK(to_graph6(Graph(3, {})) == "B?");
    const Graph petersen = parse_graph6(">>graph6<<IheA@GUAo\n");
    CHECK(petersen.size() == 15);
    CHECK(petersen.adjacent(5, 7));
    CHECK(petersen.adjacent(6, 9));
    CHECK(to_graph6(petersen) == "IheA@GUAo");
    CHECK_THROWS_AS(parse_graph6("C"), ParseError);
}

TEST_CASE("text format round trip and errors") {
    const Graph c5 = cycle_graph(5);
    CHECK(to_text(c5) == "5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n");
    CHECK(parse_graph_text("5 5\n4 3\n\n1 0\n0 4\n2 1\n3 2\n") == c5);
    try {
        parse_graph_text("3 2\n0 1\n1 7\n", "g.txt");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(e.offset() == 8);
        CHECK(std::string(e.what()).find("g.txt:3") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_graph_text("3 2\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph_text("3 1\n1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph_text("3 x\n"), ParseError);
}

TEST_CASE("graph hash is SHA-256 of the canonical text") {
    CHECK(graph_hash(path_graph(3)) == "de1c2550646acf29b7b36b74d22c72a954ef3aaf0fbd5d5b611f6c9dbc3e70df");
    CHECK(graph_hash(cycle_graph(5)) == "4a66125c2bb3dbfab3c668b7aee22324e038a384bd5d7dec2ba209e998a2b73d");
}
