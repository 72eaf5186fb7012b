#include <doctest.h>

#include <stdexcept>

#include <algorithm>

#include "edfforge/families.hpp"
#include "edfforge/oracle.hpp"
#include "fixtures.hpp"

using namespace edfforge;

TEST_CASE("beta existence on cycles follows the residue rule") {
    CHECK_FALSE(search_valuation(test::cycle_graph(5), ValuationKind::beta).has_value());
    CHECK_FALSE(search_valuation(test::cycle_graph(6), ValuationKind::beta).has_value());
    auto c7 = search_valuation(test::cycle_graph(7), ValuationKind::beta);
    REQUIRE(c7.has_value());
    CHECK(check_beta(test::cycle_graph(7), *c7));
    auto c8 = search_valuation(test::cycle_graph(8), ValuationKind::beta);
    REQUIRE(c8.has_value());
    CHECK(check_beta(test::cycle_graph(8), *c8));
}

TEST_CASE("S_{3,2} separates alpha from near alpha") {
    Graph rosa = test::rosa_star();
    CHECK_FALSE(search_valuation(rosa, ValuationKind::alpha).has_value());
    auto near = search_valuation(rosa, ValuationKind::near_alpha);
    REQUIRE(near.has_value());
    CHECK(check_near_alpha(rosa, *near).has_value());
}

TEST_CASE("P_1 u P_1 has no beta-valuation") {
    Graph p1p1(4, {{0, 1}, {2, 3}});
    CHECK_FALSE(search_valuation(p1p1, ValuationKind::beta).has_value());
}

TEST_CASE("oriented search") {
    auto single = search_oriented_beta(Digraph(2, {{0, 1}}));
    REQUIRE(single.has_value());
    CHECK(check_oriented_beta(Digraph(2, {{0, 1}}), *single));

    // unidirectional C_3: label sum obstruction, confirmed against the full
    // enumeration of all 4*3*2 injective labellings
    Digraph c3(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK_FALSE(search_oriented_beta(c3).has_value());
    int valid = 0;
    std::vector<Label> perm{0, 1, 2, 3};
    std::sort(perm.begin(), perm.end());
    do {
        Labelling b({perm[0], perm[1], perm[2]});
        if (check_oriented_beta(c3, b)) ++valid;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(valid == 0);

    auto orbeta = test::seven_arc_example();
    auto found = search_oriented_beta(orbeta.digraph);
    REQUIRE(found.has_value());
    CHECK(check_oriented_beta(orbeta.digraph, *found));
}

TEST_CASE("size bound refusal") {
    auto p13 = path_alpha(13);
    CHECK_THROWS_AS(search_valuation(p13.graph, ValuationKind::beta), std::invalid_argument);
    SearchOptions raised{13};
    CHECK(search_valuation(p13.graph, ValuationKind::beta, raised).has_value());
    CHECK_THROWS_AS(search_oriented_beta(unidirectional_path(14)), std::invalid_argument);
}

TEST_CASE("search results always satisfy the corresponding checker") {
    for (int m : {3, 4, 7, 8}) {
        auto g = test::cycle_graph(m);
        if (auto b = search_valuation(g, ValuationKind::beta)) CHECK(check_beta(g, *b));
    }
    for (const auto& lg : {path_alpha(5), complete_bipartite_alpha(2, 3), sun_alpha(1)}) {
        auto a = search_valuation(lg.graph, ValuationKind::alpha);
        REQUIRE(a.has_value());
        CHECK(check_alpha(lg.graph, *a).has_value());
        auto na = search_valuation(lg.graph, ValuationKind::near_alpha);
        REQUIRE(na.has_value());
        CHECK(check_near_alpha(lg.graph, *na).has_value());
    }
}

TEST_CASE("constructors agree with the oracle inside its bound") {
    // families whose instances fit in 12 vertices must be confirmed by search
    CHECK(search_valuation(two_cycles_alpha(1).graph, ValuationKind::alpha).has_value());
    CHECK(search_valuation(cyclotomic_near_alpha_tree(11).graph, ValuationKind::near_alpha)
              .has_value());
    CHECK(search_oriented_beta(cycle_oriented_near_alpha(6).digraph).has_value());
    CHECK(search_oriented_beta(star_path_oriented_beta(7).digraph).has_value());
}

TEST_CASE("the p=11 cyclotomic tree has no alpha-valuation") {
    // exhaustive over all injective labellings of the 11-vertex tree
    Graph tree = cyclotomic_near_alpha_tree(11).graph;
    CHECK_FALSE(search_valuation(tree, ValuationKind::alpha).has_value());
}

TEST_CASE("tree enumeration counts match the catalogue") {
    const std::vector<int> expected{1, 1, 2, 3, 6, 11, 23, 47, 106};  // n = 2..10
    for (int n = 2; n <= 10; ++n)
        CHECK(static_cast<int>(all_trees(n).size()) == expected[n - 2]);
    CHECK_THROWS_AS(all_trees(1), std::invalid_argument);
}

TEST_CASE("every small tree admits a near alpha-valuation") {
    for (int n = 2; n <= 8; ++n) {
        TreeSweepReport report = exhaustive_trees_near_alpha(n);
        CHECK(report.failures.empty());
    }
    CHECK_THROWS_AS(exhaustive_trees_near_alpha(11), std::invalid_argument);
}
