// Finite simple graphs and oriented digraphs with dense integer vertex ids
// (creation order), injective labellings, and the blow-up / product
// constructions. Blow-up children of vertex s get consecutive new ids in
// child-index order, so replacement maps double as canonical pairings.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace edfforge {

using Label = std::int64_t;

// Simple graph: no loops, no duplicate edges, no isolated vertices.
class Graph {
public:
    Graph(int vertex_count, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    // Edges normalized to (min,max), kept in insertion order.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbours(int v) const { return adjacency_[v]; }
    int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
    bool adjacent(int u, int v) const;

    bool operator==(const Graph&) const = default;

private:
    int vertex_count_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adjacency_;  // sorted
};

// Oriented graph: no loops, at most one of (u,v),(v,u), no isolated vertices.
class Digraph {
public:
    Digraph(int vertex_count, std::vector<std::pair<int, int>> arcs);

    int vertex_count() const { return vertex_count_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }
    const std::vector<int>& out_neighbours(int v) const { return out_[v]; }
    const std::vector<int>& in_neighbours(int v) const { return in_[v]; }
    bool has_arc(int u, int v) const;
    Graph underlying() const;

    bool operator==(const Digraph&) const = default;

private:
    int vertex_count_;
    std::vector<std::pair<int, int>> arcs_;
    std::vector<std::vector<int>> out_, in_;  // sorted
};

// Injective vertex -> {0,...,n} assignment, indexed by vertex id.
class Labelling {
public:
    explicit Labelling(std::vector<Label> labels);

    Label operator()(int v) const { return labels_[v]; }
    int size() const { return static_cast<int>(labels_.size()); }
    const std::vector<Label>& labels() const { return labels_; }

    // Complete, injective, and into {0,...,max_label}.
    bool valid_for(int vertex_count, Label max_label) const;

    bool operator==(const Labelling&) const = default;

private:
    std::vector<Label> labels_;
};

// Two-sided vertex partition witness; side[v] is 0 (S / small) or 1 (T / large).
struct BipartiteWitness {
    std::vector<int> side;

    bool operator==(const BipartiteWitness&) const = default;
};

// True iff the witness covers every vertex with side 0/1 and every edge crosses.
bool witness_valid(const Graph& g, const BipartiteWitness& w);

// Orient each edge towards the larger endpoint label.
Digraph natural_orientation(const Graph& g, const Labelling& b);

struct BlownGraph {
    Graph graph;
    std::vector<std::vector<int>> children;  // children[old vertex] -> new ids
};
struct BlownDigraph {
    Digraph digraph;
    std::vector<std::vector<int>> children;
};

// Replace vertex s by an independent set of sizes[s] vertices; V_s and V_t are
// fully joined iff {s,t} was an edge.
BlownGraph blow_up(const Graph& g, std::span<const int> sizes);
BlownDigraph blow_up(const Digraph& d, std::span<const int> sizes);

// G . K^c_l, built directly from the lexicographic-product definition.
// Vertex (x,i) gets id x*l + i, matching the balanced blow_up pairing.
Graph lexicographic_with_empty(const Graph& g, int l);

struct WeakTensorProduct {
    Graph graph;
    // vertex_pairs[new id] = (vertex of g, vertex of h)
    std::vector<std::pair<int, int>> vertex_pairs;
};

// Vertices (S_g x S_h) u (T_g x T_h); (x,y)~(u,v) iff {x,u} in E(g) and {y,v} in E(h).
WeakTensorProduct weak_tensor_product(const Graph& g, const BipartiteWitness& gw,
                                      const Graph& h, const BipartiteWitness& hw);

}  // namespace edfforge
