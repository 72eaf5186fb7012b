#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <queue>
#include <set>

#include "edfforge/families.hpp"
#include "edfforge/valuation.hpp"
#include "fixtures.hpp"

using namespace edfforge;

namespace {

int diameter(const Graph& g) {
    int best = 0;
    for (int s = 0; s < g.vertex_count(); ++s) {
        std::vector<int> dist(g.vertex_count(), -1);
        std::queue<int> q;
        q.push(s);
        dist[s] = 0;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int u : g.neighbours(v))
                if (dist[u] < 0) {
                    dist[u] = dist[v] + 1;
                    q.push(u);
                }
        }
        best = std::max(best, *std::max_element(dist.begin(), dist.end()));
    }
    return best;
}

}  // namespace

TEST_CASE("path_alpha") {
    CHECK(path_alpha(2).labelling.labels() == std::vector<Label>{0, 1});
    CHECK(path_alpha(4).labelling.labels() == std::vector<Label>{0, 3, 1, 2});
    CHECK(path_alpha(7).labelling.labels() == std::vector<Label>{0, 6, 1, 5, 2, 4, 3});
    for (int m : {2, 3, 4, 7, 12, 25})
        CHECK(check_alpha(path_alpha(m).graph, path_alpha(m).labelling).has_value());
    CHECK_THROWS_AS(path_alpha(1), std::invalid_argument);
}

TEST_CASE("complete_bipartite_alpha") {
    CHECK(complete_bipartite_alpha(1, 1).labelling.labels() == std::vector<Label>{0, 1});
    CHECK(complete_bipartite_alpha(2, 2).labelling.labels() == std::vector<Label>{0, 1, 2, 4});
    CHECK(complete_bipartite_alpha(3, 2).labelling.labels() == std::vector<Label>{0, 1, 2, 3, 6});
    for (auto [p, q] : {std::pair{1, 1}, {2, 2}, {3, 2}, {5, 4}, {8, 8}}) {
        auto lg = complete_bipartite_alpha(p, q);
        CHECK(check_alpha(lg.graph, lg.labelling) == p - 1);
    }
}

TEST_CASE("cycle_alpha") {
    CHECK(cycle_alpha(4).labelling.labels() == std::vector<Label>{0, 4, 1, 2});
    CHECK(cycle_alpha(8).labelling.labels() == std::vector<Label>{0, 8, 1, 7, 2, 5, 3, 4});
    for (int m : {4, 8, 12, 24})
        CHECK(check_alpha(cycle_alpha(m).graph, cycle_alpha(m).labelling).has_value());
    CHECK_THROWS_AS(cycle_alpha(6), std::invalid_argument);
    CHECK_THROWS_AS(cycle_alpha(7), std::invalid_argument);
}

TEST_CASE("cycle_oriented_near_alpha") {
    auto c6 = cycle_oriented_near_alpha(6);
    CHECK(c6.labelling.labels() == std::vector<Label>{0, 6, 1, 4, 2, 3});
    CHECK(c6.digraph.has_arc(5, 0));  // closing arc reversed
    CHECK(check_oriented_near_alpha(c6.digraph, c6.labelling).has_value());
    auto c10 = cycle_oriented_near_alpha(10);
    CHECK(check_oriented_near_alpha(c10.digraph, c10.labelling).has_value());
    CHECK_THROWS_AS(cycle_oriented_near_alpha(4), std::invalid_argument);
    CHECK_THROWS_AS(cycle_oriented_near_alpha(8), std::invalid_argument);
}

TEST_CASE("cyclotomic_near_alpha_tree") {
    auto t11 = cyclotomic_near_alpha_tree(11);
    CHECK(t11.graph.vertex_count() == 11);
    CHECK(t11.graph.edge_count() == 10);
    // Level 1 = {2,6,7,8,9,10}; level 2 = {1,3,4,5} with parents 2,6,8,10
    std::set<Label> root_children;
    for (int u : t11.graph.neighbours(0)) root_children.insert(t11.labelling(u));
    CHECK(root_children == std::set<Label>{2, 6, 7, 8, 9, 10});
    for (auto [child, parent] : {std::pair<Label, Label>{1, 2}, {3, 6}, {4, 8}, {5, 10}}) {
        int cid = -1, pid = -1;
        for (int v = 0; v < 11; ++v) {
            if (t11.labelling(v) == child) cid = v;
            if (t11.labelling(v) == parent) pid = v;
        }
        CHECK(t11.graph.adjacent(cid, pid));
    }
    CHECK(check_near_alpha(t11.graph, t11.labelling).has_value());
    CHECK(diameter(t11.graph) == 4);

    // p = 13 = 5 mod 8: 3(p-1)/4 = 9 children of the root, (p-1)/4 = 3 with a child
    auto t13 = cyclotomic_near_alpha_tree(13);
    CHECK(t13.graph.degree(0) == 9);
    int with_child = 0;
    for (int u : t13.graph.neighbours(0)) with_child += t13.graph.degree(u) == 2;
    CHECK(with_child == 3);
    CHECK(diameter(t13.graph) == 4);

    CHECK_THROWS_AS(cyclotomic_near_alpha_tree(17), std::invalid_argument);  // 1 mod 8
    CHECK_THROWS_AS(cyclotomic_near_alpha_tree(23), std::invalid_argument);  // -1 mod 8
    CHECK_THROWS_AS(cyclotomic_near_alpha_tree(21), std::invalid_argument);  // composite
    CHECK_THROWS_AS(cyclotomic_near_alpha_tree(5), std::invalid_argument);   // too small

    // every valid prime up to 100: p vertices, near alpha, at least 3 level-2 vertices
    for (std::int64_t p : {11, 13, 19, 29, 37, 43, 53, 59, 61, 67, 83}) {
        auto t = cyclotomic_near_alpha_tree(p);
        CHECK(t.graph.vertex_count() == p);
        CHECK(check_near_alpha(t.graph, t.labelling).has_value());
        int level2 = 0;
        for (int v = 1; v < t.graph.vertex_count(); ++v)
            if (!t.graph.adjacent(0, v)) ++level2;
        CHECK(level2 >= 3);
        CHECK(diameter(t.graph) == 4);
    }
}

TEST_CASE("star_path_oriented_beta") {
    auto s7 = star_path_oriented_beta(7, 3);
    CHECK(s7.labelling.labels() == std::vector<Label>{0, 3, 6, 5, 1, 2, 4});
    CHECK(check_oriented_beta(s7.digraph, s7.labelling));
    // the remark: with alpha-1 a square and no wrap-around this is a plain near alpha
    CHECK(check_near_alpha(s7.digraph.underlying(), s7.labelling).has_value());

    auto s5 = star_path_oriented_beta(5, 2);
    CHECK(s5.labelling.labels() == std::vector<Label>{0, 2, 3, 1, 4});
    CHECK(check_oriented_beta(s5.digraph, s5.labelling));
    CHECK_FALSE(check_near_alpha(s5.digraph.underlying(), s5.labelling).has_value());

    // smallest primitive root is the default: 3 for p=7
    CHECK(star_path_oriented_beta(7).labelling == s7.labelling);

    CHECK_THROWS_AS(star_path_oriented_beta(7, 2), std::invalid_argument);  // 2^3 = 1 mod 7
    CHECK_THROWS_AS(star_path_oriented_beta(9), std::invalid_argument);
    CHECK_THROWS_AS(star_path_oriented_beta(2), std::invalid_argument);
}

TEST_CASE("two_cycles_alpha") {
    auto k1 = two_cycles_alpha(1);
    CHECK(k1.labelling.labels() == std::vector<Label>{0, 8, 1, 6, 3, 7, 4, 5});
    CHECK(check_alpha(k1.graph, k1.labelling) == 4);
    auto k2 = two_cycles_alpha(2);
    CHECK(k2.labelling.labels() ==
          std::vector<Label>{0, 15, 1, 11, 2, 14, 3, 16, 5, 12, 6, 10, 7, 9, 8, 13});
    for (int k : {1, 2, 3, 4, 5, 6})
        CHECK(check_alpha(two_cycles_alpha(k).graph, two_cycles_alpha(k).labelling).has_value());
    // the closed form also happens to verify at k=3, where the table is used
    CHECK_THROWS_AS(two_cycles_alpha(0), std::invalid_argument);
}

TEST_CASE("two_cycles_alpha_4k2") {
    auto k1 = two_cycles_alpha_4k2(1);
    CHECK(k1.labelling.labels() == std::vector<Label>{0, 11, 1, 10, 4, 12, 5, 9, 2, 7, 6, 8});
    for (int k : {1, 2, 3, 5})
        CHECK(check_alpha(two_cycles_alpha_4k2(k).graph, two_cycles_alpha_4k2(k).labelling)
                  .has_value());
}

TEST_CASE("two_cycles_clockwise") {
    auto cw = two_cycles_clockwise(1, TwoCycleClass::len_4k);
    CHECK(arc_labels(cw.digraph, cw.labelling) ==
          std::vector<Residue>{8, 2, 5, 3, 4, 6, 1, 7});
    CHECK(check_oriented_near_alpha(cw.digraph, cw.labelling).has_value());

    for (int k : {1, 2, 3, 4}) {
        auto d = two_cycles_clockwise(k, TwoCycleClass::len_4k);
        CHECK(check_oriented_near_alpha(d.digraph, d.labelling).has_value());
    }
    for (int k : {1, 2, 3}) {
        auto d = two_cycles_clockwise(k, TwoCycleClass::len_4k_plus_2);
        CHECK(check_oriented_near_alpha(d.digraph, d.labelling).has_value());
    }
}

TEST_CASE("ladder_oriented") {
    auto l3 = ladder_oriented(1);
    // u = (2,4,3), v = (7,0,6)
    CHECK(l3.labelling.labels() == std::vector<Label>{2, 4, 3, 7, 0, 6});
    std::vector<Residue> labs = arc_labels(l3.digraph, l3.labelling);
    CHECK(std::set<Residue>(labs.begin(), labs.end()) ==
          std::set<Residue>{1, 2, 3, 4, 5, 6, 7});
    for (int k = 1; k <= 5; ++k) {
        auto l = ladder_oriented(k);
        CHECK(check_oriented_near_alpha(l.digraph, l.labelling).has_value());
    }
}

TEST_CASE("sun_alpha") {
    auto s8 = sun_alpha(1);
    CHECK(s8.labelling.labels() == std::vector<Label>{0, 7, 2, 4, 8, 1, 5, 3});
    CHECK(check_alpha(s8.graph, s8.labelling) == 3);  // x = 4k-1

    // S_24 matches the published figure
    auto s24 = sun_alpha(3);
    CHECK(std::vector<Label>(s24.labelling.labels().begin(),
                             s24.labelling.labels().begin() + 12) ==
          std::vector<Label>{0, 23, 1, 22, 2, 21, 8, 14, 9, 13, 10, 12});
    CHECK(std::vector<Label>(s24.labelling.labels().begin() + 12,
                             s24.labelling.labels().end()) ==
          std::vector<Label>{24, 6, 17, 7, 16, 3, 15, 4, 20, 5, 19, 11});

    for (int k = 1; k <= 6; ++k)
        CHECK(check_alpha(sun_alpha(k).graph, sun_alpha(k).labelling) == 4 * k - 1);
}

TEST_CASE("sun_semi_directed") {
    auto s = sun_semi_directed(1);
    CHECK(s.flipped_labels == std::vector<Residue>{4, 5});
    CHECK(check_oriented_near_alpha(s.digraph, s.labelling).has_value());

    for (int k = 1; k <= 4; ++k) {
        auto sd = sun_semi_directed(k);
        CHECK(check_oriented_near_alpha(sd.digraph, sd.labelling).has_value());
        const int c = 4 * k;
        // unidirectional cycle
        bool forward = sd.digraph.has_arc(0, 1);
        for (int i = 0; i < c; ++i) {
            int from = i, to = (i + 1) % c;
            if (!forward) std::swap(from, to);
            CHECK(sd.digraph.has_arc(from, to));
        }
        // pendant arcs alternate outward / inward
        for (int i = 0; i < c; ++i) {
            if (i % 2 == 0)
                CHECK(sd.digraph.has_arc(i, c + i));
            else
                CHECK(sd.digraph.has_arc(c + i, i));
        }
        // the flip set is negation-closed mod 8k+1
        std::set<Residue> flips(sd.flipped_labels.begin(), sd.flipped_labels.end());
        for (Residue f : flips) CHECK(flips.count(reduce_mod(-f, 8 * k + 1)) == 1);
    }
}

TEST_CASE("unidirectional_path_family") {
    SetFamily f21 = unidirectional_path_family(2, 1);
    CHECK(f21.modulus() == 2);
    CHECK(f21.sets()[0].elements() == std::vector<Residue>{0});
    CHECK(f21.sets()[1].elements() == std::vector<Residue>{1});

    SetFamily f42 = unidirectional_path_family(4, 2);
    CHECK(f42.modulus() == 13);
    CHECK(f42.sets()[0].elements() == std::vector<Residue>{0, 2});
    CHECK(f42.sets()[1].elements() == std::vector<Residue>{11, 12});
    CHECK(f42.sets()[2].elements() == std::vector<Residue>{4, 6});
    CHECK(f42.sets()[3].elements() == std::vector<Residue>{7, 8});

    CHECK_THROWS_AS(unidirectional_path_family(5, 2), std::invalid_argument);
    CHECK_THROWS_AS(unidirectional_path_family(4, 0), std::invalid_argument);
}

TEST_CASE("unidirectional path family equals the oriented blow-up of the flipped path") {
    for (auto [m, l] : {std::pair{4, 2}, {6, 3}, {8, 2}, {10, 1}}) {
        auto path = path_alpha(m);
        Digraph flipped = unidirectional_path(m);
        EdfWitness blown = edf_from_oriented_near_alpha(flipped, path.labelling, l);
        CHECK(blown.family == unidirectional_path_family(m, l));
    }
}
