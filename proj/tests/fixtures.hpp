// Shared test fixtures: the worked examples and small instance pools used
// across suites.
#pragma once

#include <utility>
#include <vector>

#include "edfforge/edf.hpp"
#include "edfforge/families.hpp"
#include "edfforge/graph.hpp"

namespace edfforge::test {

// Five-vertex graph with the alpha-valuation (0,3,2,4,5); blowing up by 3
// yields the (46,5,3,1)-EDF with sets {0,1,2},{21,24,27},{18,19,20},
// {30,33,36},{39,42,45}.
inline LabelledGraph five_vertex_example() {
    Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}});
    return {std::move(g), Labelling({0, 3, 2, 4, 5})};
}

// Six-vertex digraph with 8 arcs and the oriented near alpha-valuation
// 0,4,1,7,8,5 (arc labels mod 9 cover 1..8); blow-up by 3 gives the
// (73,6,3,1)-EDF. Vertex ids follow the label order 0,4,1,7,8,5.
inline LabelledDigraph eight_arc_example() {
    Digraph d(6, {{0, 3}, {0, 4}, {1, 4}, {0, 5}, {1, 3}, {1, 5}, {2, 3}, {4, 2}});
    return {std::move(d), Labelling({0, 4, 1, 7, 8, 5})};
}

// Seven-arc digraph on labels 0,5,3,6,4,2 whose arc labels mod 8 cover 1..7
// while the underlying undirected labelling is not a beta-valuation.
inline LabelledDigraph seven_arc_example() {
    Digraph d(6, {{0, 2}, {5, 4}, {5, 2}, {0, 1}, {0, 4}, {3, 4}, {3, 1}});
    return {std::move(d), Labelling({0, 5, 3, 6, 4, 2})};
}

// Rosa's star S_{3,2} (three paths of length 2 from a root).
inline Graph rosa_star() {
    return Graph(7, {{0, 1}, {1, 4}, {0, 2}, {2, 5}, {0, 3}, {3, 6}});
}

// S_{3,2} with the near alpha-valuation: root 0, middles 5,3,6, leaves 4,1,2.
inline LabelledGraph rosa_star_near_alpha() {
    return {rosa_star(), Labelling({0, 5, 3, 6, 4, 1, 2})};
}

inline Graph cycle_graph(int m) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i) edges.emplace_back(i, (i + 1) % m);
    return Graph(m, std::move(edges));
}

// Instances that carry a near alpha-valuation, for property sweeps.
inline std::vector<LabelledGraph> near_alpha_pool() {
    std::vector<LabelledGraph> pool;
    for (int m : {2, 3, 5, 8, 10}) pool.push_back(path_alpha(m));
    for (auto [p, q] : {std::pair{1, 3}, {2, 2}, {3, 2}, {4, 3}})
        pool.push_back(complete_bipartite_alpha(p, q));
    for (int m : {4, 8, 12}) pool.push_back(cycle_alpha(m));
    pool.push_back(rosa_star_near_alpha());
    pool.push_back(cyclotomic_near_alpha_tree(11));
    pool.push_back(cyclotomic_near_alpha_tree(13));
    pool.push_back(sun_alpha(1));
    pool.push_back(two_cycles_alpha(1));
    return pool;
}

// Instances that carry an oriented near alpha-valuation.
inline std::vector<LabelledDigraph> oriented_near_alpha_pool() {
    std::vector<LabelledDigraph> pool;
    for (int m : {6, 10, 14}) pool.push_back(cycle_oriented_near_alpha(m));
    pool.push_back(two_cycles_clockwise(1, TwoCycleClass::len_4k));
    pool.push_back(two_cycles_clockwise(2, TwoCycleClass::len_4k));
    pool.push_back(two_cycles_clockwise(1, TwoCycleClass::len_4k_plus_2));
    for (int k : {1, 2, 3}) pool.push_back(ladder_oriented(k));
    pool.push_back(eight_arc_example());
    for (int k : {1, 2}) {
        SemiDirectedSun s = sun_semi_directed(k);
        pool.push_back({std::move(s.digraph), std::move(s.labelling)});
    }
    return pool;
}

// Instances with an oriented beta-valuation (superset of the pool above).
inline std::vector<LabelledDigraph> oriented_beta_pool() {
    std::vector<LabelledDigraph> pool = oriented_near_alpha_pool();
    pool.push_back(seven_arc_example());
    for (std::int64_t p : {5, 7, 11, 13}) pool.push_back(star_path_oriented_beta(p));
    return pool;
}

}  // namespace edfforge::test
