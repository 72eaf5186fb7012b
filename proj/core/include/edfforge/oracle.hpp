// Independent brute-force ground truth: exhaustive valuation search over all
// injective labellings of small (di)graphs, and isomorphism-free enumeration
// of trees. Deliberately separate from the constructive pipelines so the two
// routes can check each other.
#pragma once

#include <optional>
#include <vector>

#include "edfforge/graph.hpp"
#include "edfforge/valuation.hpp"

namespace edfforge {

struct SearchOptions {
    int max_vertices = 12;  // hard refusal above this, never silent truncation
};

// Exhaustive search for a labelling of the requested class (beta, alpha or
// near_alpha). Vertices are assigned in descending-degree order with labels
// tried ascending, so the first hit is deterministic. Absent means the
// search space was exhausted.
std::optional<Labelling> search_valuation(const Graph& g, ValuationKind kind,
                                          const SearchOptions& opts = {});

// Exhaustive search for an oriented beta-valuation of the digraph.
std::optional<Labelling> search_oriented_beta(const Digraph& d, const SearchOptions& opts = {});

// All non-isomorphic trees on n >= 2 vertices. Rooted level sequences are
// generated exhaustively and deduplicated through a centre-rooted canonical
// code, so each free tree appears exactly once.
std::vector<Graph> all_trees(int n);

struct TreeSweepReport {
    int order = 0;
    int tree_count = 0;
    std::vector<int> failures;  // indices of trees with no near alpha-valuation
};

// Confirms that every tree of the given order (2 <= n <= 10) admits a near
// alpha-valuation.
TreeSweepReport exhaustive_trees_near_alpha(int n);

}  // namespace edfforge
