#include <doctest.h>

#include "oddminor/certificate_io.hpp"
#include "oddminor/constructions.hpp"
#include "oddminor/errors.hpp"
#include "oddminor/graph_io.hpp"
#include "support/reference.hpp"

using namespace oddminor;

namespace {

Graph kk(ProductKind kind, std::size_t a, std::size_t b) { return product(kind, complete_graph(a), complete_graph(b)); }

// Library verdict in strict mode and the reference check must both accept.
void check_model(const Graph& host, const OddExpansionModel& m, std::size_t order) {
    CHECK(m.clique_order() == order);
    const Verdict v = verify_odd_expansion(host, m, {.require_connectors = true});
    INFO(v.summary(m.clique_order()));
    CHECK(v.pass);
    CHECK(ref::is_odd_expansion(host, m));
}

Vertex cell(int row, int col, std::size_t width) { return static_cast<Vertex>((row - 1) * width + (col - 1)); }

}  // namespace

TEST_CASE("identity and odd cycle models") {
    check_model(complete_graph(5), identity_model(5), 5);
    for (std::size_t n : {3, 5, 7, 9, 11}) check_model(cycle_graph(n), *odd_cycle_model(cycle_graph(n)), 3);
    CHECK_FALSE(odd_cycle_model(cycle_graph(8)));
    const auto c5 = *odd_cycle_model(cycle_graph(5));
    CHECK(c5.trees[0] == BranchTree::singleton(0));
    CHECK(c5.trees[1] == BranchTree::path({1, 2}));
    CHECK(c5.trees[2] == BranchTree::path({3, 4}));
}

TEST_CASE("product coloring") {
    WitnessColoring cg{{0, 1}, {1, 2}}, ch{{0, 2}, {3, 2}};
    auto c = witness_product_coloring(cg, ch, {{0, 0}, {1, 3}, {0, 3}}, 4);
    CHECK(c.at(0) == 2);
    CHECK(c.at(7) == 1);
    CHECK(c.at(3) == 2);
    CHECK_THROWS_AS(witness_product_coloring(cg, ch, {{0, 1}}, 4), ColoringMissingError);
}

TEST_CASE("grid forest properties") {
    const Graph c5 = cycle_graph(5), c7 = cycle_graph(7);
    const auto m5 = *odd_cycle_model(c5), m7 = *odd_cycle_model(c7);
    for (auto mode : {GridMode::cartesian, GridMode::strong}) {
        const GridForest f = product_grid_forest(c5, m5, c7, m7, mode);
        const Graph host = product(ProductKind::cartesian, c5, c7);
        REQUIRE(f.cells.size() == 9);
        std::vector<int> owner(host.order(), -1);
        for (std::size_t k = 0; k < f.cells.size(); ++k) {
            const auto& cell = f.cells[k];
            const std::size_t i = k / 3, j = k % 3;
            CHECK(cell.vertices.size() == m5.trees[i].vertices.size() * m7.trees[j].vertices.size());
            CHECK(cell.edges.size() + 1 == cell.vertices.size());
            for (const auto& e : cell.edges) {
                CHECK(host.adjacent(e.u, e.v));
                CHECK(f.coloring.at(e.u) != f.coloring.at(e.v));
            }
            for (Vertex v : cell.vertices) {
                CHECK(owner[v] == -1);
                owner[v] = static_cast<int>(k);
            }
        }
        for (const auto& [pair, e] : f.cross_edges) {
            const std::size_t i1 = pair.first / 3, j1 = pair.first % 3, i2 = pair.second / 3, j2 = pair.second % 3;
            CHECK((i1 == i2 || j1 == j2));
            CHECK(host.adjacent(e.from, e.to));
            CHECK(owner[e.from] == static_cast<int>(pair.first));
            CHECK(owner[e.to] == static_cast<int>(pair.second));
            CHECK(f.coloring.at(e.from) == f.coloring.at(e.to));
        }
        CHECK(f.cross_edges.size() == 18);
    }
}

TEST_CASE("cartesian complete family") {
    for (std::size_t s = 2; s <= 6; ++s)
        for (std::size_t t = 2; t <= 6; ++t)
            check_model(kk(ProductKind::cartesian, s, t), cartesian_complete_model(s, t).model, s + t - 2);
    // Row 0, last column stays unused; every other row holds a star.
    const auto base = cartesian_complete_model(3, 6);
    CHECK(base.model.trees[0] == BranchTree::singleton(0));
    CHECK(base.model.trees[4] == BranchTree::singleton(4));
    CHECK(base.model.trees[5].vertices.size() == 6);
    CHECK_FALSE(base.model.coloring.count(5));
    CHECK_THROWS_AS(cartesian_complete_model(1, 4), ParameterError);
}

TEST_CASE("cartesian lift") {
    const Graph c5 = cycle_graph(5), c7 = cycle_graph(7);
    const auto m5 = *odd_cycle_model(c5), m7 = *odd_cycle_model(c7);
    check_model(product(ProductKind::cartesian, c5, c7), cartesian_lift(c5, m5, c7, m7, cartesian_complete_model(3, 3)),
                4);
    // Lifting with identity factor models reproduces the base on K_s □ K_t.
    const auto base = cartesian_complete_model(3, 4);
    const auto lifted = cartesian_lift(complete_graph(3), identity_model(3), complete_graph(4), identity_model(4), base);
    check_model(kk(ProductKind::cartesian, 3, 4), lifted, 5);
    CHECK(lifted.trees == base.model.trees);
    CHECK_THROWS_AS(cartesian_lift(c5, m5, c7, m7, cartesian_complete_model(3, 4)), ParameterError);

    auto broken = m5;
    broken.coloring[1] = flip(broken.coloring[1]);
    CHECK_THROWS_AS(cartesian_lift(c5, broken, c7, m7, cartesian_complete_model(3, 3)), ModelInputError);
}

TEST_CASE("hamming") {
    for (auto [n, d] : std::vector<std::pair<std::size_t, std::size_t>>{{3, 2}, {3, 3}, {4, 2}, {2, 4}, {5, 2}})
        check_model(hamming_graph(n, d), hamming_model(n, d), d * (n - 2) + 2);
    CHECK(hamming_model(2, 1).clique_order() == 2);
}

TEST_CASE("strong and lexicographic") {
    const Graph c5 = cycle_graph(5), c7 = cycle_graph(7);
    const auto m5 = *odd_cycle_model(c5), m7 = *odd_cycle_model(c7);
    check_model(product(ProductKind::strong, c5, c7), strong_model(c5, m5, c7, m7, ProductKind::strong), 9);
    check_model(product(ProductKind::lexicographic, c5, c7), strong_model(c5, m5, c7, m7, ProductKind::lexicographic),
                9);
    check_model(product(ProductKind::strong, c5, complete_graph(4)),
                strong_model(c5, m5, complete_graph(4), identity_model(4), ProductKind::strong), 12);
    CHECK_THROWS_AS(strong_model(c5, m5, c7, m7, ProductKind::direct), ParameterError);

    const auto degenerate = strong_model(complete_graph(1), identity_model(1), c5, m5, ProductKind::strong);
    check_model(product(ProductKind::strong, complete_graph(1), c5), degenerate, 3);
    CHECK(degenerate.flags == std::vector<std::string>{kOutsidePreconditions});
}

TEST_CASE("stars") {
    for (std::size_t r = 1; r <= 6; ++r)
        for (std::size_t t = 1; t <= 6; ++t) {
            const std::size_t want = r == t ? r + 1 : std::min(r, t) + 2;
            CHECK(star_model_order(r, t) == want);
            check_model(product(ProductKind::strong, star_graph(r), star_graph(t)), star_model(r, t), want);
        }
    CHECK_THROWS_AS(star_model(0, 3), ParameterError);
}

TEST_CASE("direct K_t x K_3") {
    for (std::size_t t = 6; t <= 14; ++t) {
        const auto m = direct_k3_model(t);
        check_model(kk(ProductKind::direct, t, 3), m, t + 2);
        CHECK(direct_k3_upper_bound(t) == t + 2);
        std::size_t two = 0, three = 0;
        for (const auto& tree : m.trees) {
            two += tree.vertices.size() == 2;
            three += tree.vertices.size() == 3;
        }
        CHECK(two == 6);
        CHECK(three == m.trees.size() - 6);
    }
    // t = 6 drops row 7: Z_8 starts at (6,1) and Z_6–Z_8 meet on (5,2)(6,1).
    const auto m6 = direct_k3_model(6);
    CHECK(m6.connectors->at({5, 7}) == Connector{cell(5, 2, 3), cell(6, 1, 3)});
    CHECK_THROWS_AS(direct_k3_model(5), ParameterError);
    CHECK_THROWS_AS(direct_k3_upper_bound(5), ParameterError);
}

TEST_CASE("K_t x K_3 connector tables") {
    const std::size_t t = 7;
    const Graph host = kk(ProductKind::direct, t, 3);
    const auto m = direct_k3_model(t);
    CHECK(direct_k3_published_connectors().size() == 28);

    std::vector<std::pair<int, int>> non_edges;
    for (const auto& e : direct_k3_published_connectors()) {
        const Vertex a = cell(e.row1, e.col1, 3), b = cell(e.row2, e.col2, 3);
        if (!host.adjacent(a, b)) non_edges.emplace_back(e.tree_a, e.tree_b);
    }
    // The two Z_2 entries naming (2,2) against column-2 partners.
    CHECK(non_edges == std::vector<std::pair<int, int>>{{2, 5}, {2, 7}});

    for (const auto& e : direct_k3_connector_table(t)) {
        const Vertex a = cell(e.row1, e.col1, 3), b = cell(e.row2, e.col2, 3);
        CHECK(host.adjacent(a, b));
        CHECK(m.coloring.at(a) == m.coloring.at(b));
        const auto& ta = m.trees[e.tree_a - 1].vertices;
        const auto& tb = m.trees[e.tree_b - 1].vertices;
        CHECK(std::count(ta.begin(), ta.end(), a) == 1);
        CHECK(std::count(tb.begin(), tb.end(), b) == 1);
    }
}

TEST_CASE("direct K_t x K_s") {
    for (std::size_t t = 4; t <= 8; ++t)
        for (std::size_t s : {3, 4, 5, 6, 7, 9})
            check_model(kk(ProductKind::direct, t, s), direct_general_model(t, s), t * (s / 3));
    const auto m = direct_general_model(6, 6);
    std::vector<Vertex> singletons;
    for (const auto& tree : m.trees)
        if (tree.vertices.size() == 1) singletons.push_back(tree.vertices[0]);
    CHECK(singletons == std::vector<Vertex>{cell(1, 1, 6), cell(3, 3, 6)});
    // (5,7) uses only the first six columns.
    for (const auto& [v, c] : direct_general_model(5, 7).coloring) CHECK(v % 7 != 6);
    CHECK_THROWS_AS(direct_general_model(3, 6), ParameterError);
    CHECK_THROWS_AS(direct_general_model(5, 2), ParameterError);
}

TEST_CASE("coordinate swap") {
    const auto m = direct_general_model(4, 6);
    check_model(kk(ProductKind::direct, 6, 4), swap_product_coordinates(m, 4, 6), 8);
    CHECK(swap_product_coordinates(swap_product_coordinates(m, 4, 6), 6, 4) == m);
}

TEST_CASE("best lower bound dispatcher") {
    const Graph c5 = cycle_graph(5);
    const auto m5 = *odd_cycle_model(c5);
    auto strong = best_lower_bound(c5, m5, c5, m5, ProductKind::strong);
    CHECK(strong.order == 9);
    auto cart = best_lower_bound(c5, m5, c5, m5, ProductKind::cartesian);
    CHECK(cart.order == 4);
    CHECK(cart.route == "cartesian-lift");

    auto direct = best_lower_bound(complete_graph(7), identity_model(7), complete_graph(3), identity_model(3),
                                   ProductKind::direct);
    CHECK(direct.order == 9);
    CHECK(direct.route == "direct-k3");
    auto swapped = best_lower_bound(complete_graph(3), identity_model(3), complete_graph(7), identity_model(7),
                                    ProductKind::direct);
    CHECK(swapped.order == 9);
    check_model(kk(ProductKind::direct, 3, 7), *swapped.model, 9);
    auto general = best_lower_bound(complete_graph(5), identity_model(5), complete_graph(6), identity_model(6),
                                    ProductKind::direct);
    CHECK(general.order == 10);

    // Stars: the star embedding beats s*t = 4 once the degrees grow.
    const Graph s5 = star_graph(5);
    const auto ms5 = *std::optional<OddExpansionModel>(
        OddExpansionModel{{BranchTree::singleton(0), BranchTree::singleton(1)}, {{0, 1}, {1, 1}}, std::nullopt, {}});
    auto stars = best_lower_bound(s5, ms5, s5, ms5, ProductKind::strong);
    CHECK(stars.order == 6);
    CHECK(stars.route == "stars");

    auto odd = best_lower_bound(c5, m5, c5, m5, ProductKind::direct);
    CHECK(odd.order == 3);
    CHECK(odd.route == "odd-cycle");
    const Graph p3 = path_graph(3);
    const OddExpansionModel mp{{BranchTree::singleton(0), BranchTree::singleton(1)}, {{0, 1}, {1, 1}}, std::nullopt, {}};
    auto edge = best_lower_bound(p3, mp, c5, m5, ProductKind::direct);
    CHECK(edge.order == 2);
    auto none = best_lower_bound(complete_graph(1), identity_model(1), c5, m5, ProductKind::direct);
    CHECK_FALSE(none.model);
    CHECK(none.route == "no construction applies");
}

TEST_CASE("constructions are deterministic") {
    const auto a = serialize_model(direct_k3_model(9), "h");
    const auto b = serialize_model(direct_k3_model(9), "h");
    CHECK(a == b);
    CHECK(serialize_model(hamming_model(3, 3), "h") == serialize_model(hamming_model(3, 3), "h"));
}

TEST_CASE("color-swapped constructions still pass") {
    check_model(kk(ProductKind::direct, 7, 3), color_swapped(direct_k3_model(7)), 9);
    check_model(kk(ProductKind::cartesian, 4, 5), color_swapped(cartesian_complete_model(4, 5).model), 7);
}
