// Closed-form valuation constructors for the graph and digraph families
// with explicit labellings. Every constructor's output passes its declared
// checker; the checkers are run by the callers and the test suites.
#pragma once

#include <optional>

#include "edfforge/edf.hpp"
#include "edfforge/graph.hpp"

namespace edfforge {

struct LabelledGraph {
    Graph graph;
    Labelling labelling;
};
struct LabelledDigraph {
    Digraph digraph;
    Labelling labelling;
};

// Path P_m, alpha-valuation a(v_i) = (i-1)/2 (i odd), m - i/2 (i even).
LabelledGraph path_alpha(int m);

// K_{p,q}, alpha-valuation a(v_i) = i-1, a(u_j) = j*p; threshold x = p-1.
LabelledGraph complete_bipartite_alpha(int p, int q);

// Cycle C_m for m = 0 mod 4, alpha-valuation.
LabelledGraph cycle_alpha(int m);

// Cycle C_m for m = 2 mod 4, m >= 6: same labelling, natural orientation
// with the closing arc reversed; an oriented near alpha-valuation mod m+1.
LabelledDigraph cycle_oriented_near_alpha(int m);

// Cyclotomy-based tree on p vertices (p >= 11 prime, p != +-1 mod 8) with a
// near alpha-valuation but no alpha-valuation: root 0, level 1 the
// nonsquares and the large squares, level 2 each small square s under 2s.
LabelledGraph cyclotomic_near_alpha_tree(std::int64_t p);

// Oriented beta-valuation of S_{(p-1)/2,2} from powers of a primitive
// element (smallest primitive root unless one is supplied). The grandchild
// arcs point towards u_i when alpha-1 is a square, away otherwise.
LabelledDigraph star_path_oriented_beta(std::int64_t p,
                                        std::optional<std::int64_t> primitive = std::nullopt);

enum class TwoCycleClass { len_4k, len_4k_plus_2 };

// 2C_{4k}: tabulated alpha-valuations for k <= 3, the closed form for k >= 4.
LabelledGraph two_cycles_alpha(int k);

// 2C_{4k+2}: tabulated for k = 1, the closed form for k >= 2.
LabelledGraph two_cycles_alpha_4k2(int k);

// Both cycles clockwise; an oriented near alpha-valuation mod 8k+1 / 8k+5.
LabelledDigraph two_cycles_clockwise(int k, TwoCycleClass length_class);

// Ladder L_{2k+1} with rails left-to-right and rungs bottom-to-top;
// oriented near alpha-valuation mod 6k+2.
LabelledDigraph ladder_oriented(int k);

// Sun graph S_{8k} (cycle of length 4k, one pendant per cycle vertex),
// alpha-valuation with threshold x = 4k-1.
LabelledGraph sun_alpha(int k);

struct SemiDirectedSun {
    Digraph digraph;
    Labelling labelling;
    std::vector<Residue> flipped_labels;  // negation-closed set found by search
};

// Semi-directed sun S*_{8k}: unidirectional cycle, pendant arcs alternately
// outward and inward. Obtained from the sun alpha-valuation's natural
// orientation by flipping a negation-closed label set found by search.
SemiDirectedSun sun_semi_directed(int k);

// The explicit ((m-1)l^2+1, m, l, 1; P*_m)-EDF sets for the unidirectional
// path, m even: A_i = {i l^2/2 + jl} (i even), {(m-(i+1)/2) l^2 - j} (i odd).
SetFamily unidirectional_path_family(int m, int l);

// Unidirectional path digraph P*_m: arcs (v_i, v_{i+1}).
Digraph unidirectional_path(int m);

}  // namespace edfforge
