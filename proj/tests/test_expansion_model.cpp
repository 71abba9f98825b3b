#include <doctest.h>

#include "oddminor/certificate_io.hpp"
#include "oddminor/constructions.hpp"
#include "oddminor/errors.hpp"
#include "oddminor/graph_io.hpp"
#include "support/reference.hpp"

using namespace oddminor;

namespace {

OddExpansionModel c5_model() {
    OddExpansionModel m;
    m.trees = {BranchTree::singleton(0), BranchTree::path({1, 2}), BranchTree::path({3, 4})};
    m.coloring = {{0, 1}, {1, 1}, {2, 2}, {3, 2}, {4, 1}};
    return m;
}

}  // namespace

TEST_CASE("C5 example") {
    const Graph c5 = cycle_graph(5);
    auto m = c5_model();
    CHECK(verify_odd_expansion(c5, m).pass);
    CHECK(ref::is_odd_expansion(c5, m));
    CHECK(verify_odd_expansion(c5, m).summary(3) == "PASS order=3");

    SUBCASE("flipping vertex 4 breaks the tree edge 3-4 first") {
        m.coloring[4] = 2;
        const Verdict v = verify_odd_expansion(c5, m);
        CHECK_FALSE(v.pass);
        CHECK(v.clause == Clause::properness);
        CHECK(v.edges == std::vector<Edge>{{3, 4}});
        CHECK_FALSE(ref::is_odd_expansion(c5, m));
    }
    SUBCASE("swapping tree 2's colors loses the pair (0,2)") {
        m.coloring[3] = 1;
        m.coloring[4] = 2;
        const Verdict v = verify_odd_expansion(c5, m);
        CHECK(v.clause == Clause::connector_missing);
        CHECK(v.trees == std::vector<std::size_t>{0, 2});
        CHECK(v.summary(3).rfind("FAIL connector_missing pair=(0,2)", 0) == 0);
    }
}

TEST_CASE("K2 with two singletons colored 1") {
    OddExpansionModel m;
    m.trees = {BranchTree::singleton(0), BranchTree::singleton(1)};
    m.coloring = {{0, 1}, {1, 1}};
    CHECK(verify_odd_expansion(complete_graph(2), m).pass);
}

TEST_CASE("clause order") {
    const Graph k4 = complete_graph(4);
    OddExpansionModel m;
    m.trees = {BranchTree::path({0, 1}), BranchTree::path({1, 2})};
    m.coloring = {{0, 1}, {1, 2}, {2, 1}};
    CHECK(verify_odd_expansion(k4, m).clause == Clause::disjointness);

    m.trees = {BranchTree{{0, 1, 2}, {{0, 1}}}, BranchTree::singleton(3)};
    CHECK(verify_odd_expansion(k4, m).clause == Clause::tree_shape);

    const Graph p4 = path_graph(4);
    m.trees = {BranchTree::path({0, 2}), BranchTree::singleton(3)};
    m.coloring = {{0, 1}, {2, 2}, {3, 1}};
    CHECK(verify_odd_expansion(p4, m).clause == Clause::edge_membership);

    m.trees = {BranchTree::singleton(0), BranchTree::singleton(9)};
    CHECK(verify_odd_expansion(p4, m).clause == Clause::edge_membership);

    m.trees = {BranchTree::path({0, 1}), BranchTree::singleton(2)};
    m.coloring = {{0, 1}, {1, 2}};
    const Verdict missing = verify_odd_expansion(p4, m);
    CHECK(missing.clause == Clause::coloring_missing);
    CHECK(missing.vertices == std::vector<Vertex>{2});

    m.coloring = {{0, 1}, {1, 1}, {2, 1}};
    CHECK(verify_odd_expansion(p4, m).clause == Clause::properness);
}

TEST_CASE("stored connectors") {
    const Graph c5 = cycle_graph(5);
    auto m = c5_model();
    attach_connectors(c5, m);
    REQUIRE(m.connectors);
    CHECK(m.connectors->at({0, 1}) == Connector{0, 1});
    CHECK(m.connectors->at({0, 2}) == Connector{0, 4});
    CHECK(m.connectors->at({1, 2}) == Connector{2, 3});
    CHECK(verify_odd_expansion(c5, m, {.require_connectors = true}).pass);

    auto reversed = m;
    (*reversed.connectors)[{1, 2}] = {3, 2};
    CHECK(verify_odd_expansion(c5, reversed).clause == Clause::connector_invalid);

    auto partial = m;
    partial.connectors->erase({0, 2});
    CHECK(verify_odd_expansion(c5, partial).pass);
    const Verdict strict = verify_odd_expansion(c5, partial, {.require_connectors = true});
    CHECK(strict.clause == Clause::connector_missing);
    CHECK(strict.trees == std::vector<std::size_t>{0, 2});

    auto bogus = m;
    (*bogus.connectors)[{2, 5}] = {3, 4};
    CHECK(verify_odd_expansion(c5, bogus).clause == Clause::connector_invalid);
}

TEST_CASE("serial and parallel verification agree") {
    const Graph host = product(ProductKind::direct, complete_graph(8), complete_graph(3));
    auto good = direct_k3_model(8);
    for (bool strict : {false, true}) {
        CHECK(verify_serial(host, good, strict).pass);
        CHECK(verify_parallel(host, good, strict, 4).pass);
    }
    // Break every singleton-free tree's coloring one at a time and compare verdicts.
    for (std::size_t t = 0; t < good.trees.size(); ++t)
        for (Vertex v : good.trees[t].vertices) {
            auto bad = good;
            bad.coloring[v] = flip(bad.coloring[v]);
            bad.connectors.reset();
            const Verdict a = verify_serial(host, bad, false), b = verify_parallel(host, bad, false, 3);
            CHECK(a.pass == b.pass);
            CHECK(a.summary(bad.clique_order()) == b.summary(bad.clique_order()));
        }
}

TEST_CASE("color swap invariance and monotone embedding") {
    const Graph c5 = cycle_graph(5);
    auto m = c5_model();
    CHECK(verify_odd_expansion(c5, color_swapped(m)).pass);
    Graph bigger(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 2}, {4, 5}, {5, 6}});
    CHECK(verify_odd_expansion(bigger, m).pass);
}

TEST_CASE("certificate round trip") {
    const Graph c5 = cycle_graph(5);
    auto m = c5_model();
    attach_connectors(c5, m);
    m.flags = {"note"};
    const std::string text = serialize_model(m, graph_hash(c5));
    CHECK(text ==
          "version: 1\n"
          "graph_hash: 4a66125c2bb3dbfab3c668b7aee22324e038a384bd5d7dec2ba209e998a2b73d\n"
          "clique_order: 3\n"
          "flags: [note]\n"
          "trees:\n"
          "  - vertices: [0]\n"
          "    edges: []\n"
          "  - vertices: [1, 2]\n"
          "    edges: [[1, 2]]\n"
          "  - vertices: [3, 4]\n"
          "    edges: [[3, 4]]\n"
          "coloring: [[0, 1], [1, 1], [2, 2], [3, 2], [4, 1]]\n"
          "connectors: [[0, 1, 0, 1], [0, 2, 0, 4], [1, 2, 2, 3]]\n");
    const Certificate back = parse_certificate(text);
    CHECK(back.model == m);
    CHECK(back.graph_hash == graph_hash(c5));
    CHECK(serialize_model(back.model, back.graph_hash) == text);

    auto plain = c5_model();
    CHECK(parse_certificate(serialize_model(plain, "ab")).model == plain);
}

TEST_CASE("certificate parse errors") {
    const std::string good = serialize_model(c5_model(), "ab");
    CHECK_THROWS_AS(parse_certificate(good.substr(0, good.size() / 2)), ParseError);
    CHECK_THROWS_AS(parse_certificate("version: 1\ngraph_hash: ab\nclique_order: 1\ntrees: [\n"), ParseError);

    const std::string bad_edge =
        "version: 1\ngraph_hash: ab\nclique_order: 1\ntrees:\n  - vertices: [0, 1]\n    edges: [[0, x]]\n"
        "coloring: [[0, 1], [1, 2]]\n";
    try {
        parse_certificate(bad_edge);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.path() == "trees[0].edges[0][1]");
        CHECK(e.offset() == bad_edge.find("x]"));
    }
    try {
        parse_certificate("version: 1\ngraph_hash: ab\nclique_order: 1\ntrees: []\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("clique_order") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_certificate("version: 1\ngraph_hash: ab\nclique_order: 0\ntrees: []\ncoloring: []\nextra: 1\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_certificate("version: 1\ngraph_hash: ab\nclique_order: 1\ntrees:\n  - vertices: [0]\n"
                                      "    edges: []\ncoloring: [[0, 3]]\n"),
                    ParseError);
}

TEST_CASE("overlapping trees parse and then fail verification") {
    const std::string text =
        "version: 1\ngraph_hash: ab\nclique_order: 2\ntrees:\n  - vertices: [0, 1]\n    edges: [[0, 1]]\n"
        "  - vertices: [1]\n    edges: []\ncoloring: [[0, 1], [1, 2]]\n";
    const Certificate cert = parse_certificate(text);
    CHECK(verify_odd_expansion(complete_graph(3), cert.model).clause == Clause::disjointness);
}
