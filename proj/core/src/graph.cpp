#include "edfforge/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace edfforge {

namespace {

void sort_all(std::vector<std::vector<int>>& lists) {
    for (auto& l : lists) std::sort(l.begin(), l.end());
}

void check_no_isolated(const std::vector<std::vector<int>>& adjacency, const char* what) {
    for (const auto& l : adjacency)
        if (l.empty()) throw std::invalid_argument(std::string(what) + ": isolated vertex");
}

}  // namespace

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edges)
    : vertex_count_(vertex_count) {
    if (vertex_count <= 0) throw std::invalid_argument("Graph: need at least one vertex");
    adjacency_.resize(vertex_count);
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
            throw std::invalid_argument("Graph: vertex id out of range");
        if (u == v) throw std::invalid_argument("Graph: loop");
        auto e = std::minmax(u, v);
        if (!seen.insert(e).second) throw std::invalid_argument("Graph: duplicate edge");
        edges_.emplace_back(e.first, e.second);
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    check_no_isolated(adjacency_, "Graph");
    sort_all(adjacency_);
}

bool Graph::adjacent(int u, int v) const {
    const auto& l = adjacency_[u];
    return std::binary_search(l.begin(), l.end(), v);
}

Digraph::Digraph(int vertex_count, std::vector<std::pair<int, int>> arcs)
    : vertex_count_(vertex_count) {
    if (vertex_count <= 0) throw std::invalid_argument("Digraph: need at least one vertex");
    out_.resize(vertex_count);
    in_.resize(vertex_count);
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : arcs) {
        if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
            throw std::invalid_argument("Digraph: vertex id out of range");
        if (u == v) throw std::invalid_argument("Digraph: loop");
        if (seen.count({v, u}))
            throw std::invalid_argument("Digraph: both orientations of an edge present");
        if (!seen.insert({u, v}).second) throw std::invalid_argument("Digraph: duplicate arc");
        arcs_.emplace_back(u, v);
        out_[u].push_back(v);
        in_[v].push_back(u);
    }
    std::vector<std::vector<int>> touched(vertex_count);
    for (auto [u, v] : arcs_) {
        touched[u].push_back(v);
        touched[v].push_back(u);
    }
    check_no_isolated(touched, "Digraph");
    sort_all(out_);
    sort_all(in_);
}

bool Digraph::has_arc(int u, int v) const {
    const auto& l = out_[u];
    return std::binary_search(l.begin(), l.end(), v);
}

Graph Digraph::underlying() const {
    return Graph(vertex_count_, arcs_);
}

Labelling::Labelling(std::vector<Label> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) throw std::invalid_argument("Labelling: empty");
}

bool Labelling::valid_for(int vertex_count, Label max_label) const {
    if (size() != vertex_count) return false;
    std::set<Label> seen;
    for (Label l : labels_) {
        if (l < 0 || l > max_label) return false;
        if (!seen.insert(l).second) return false;
    }
    return true;
}

bool witness_valid(const Graph& g, const BipartiteWitness& w) {
    if (static_cast<int>(w.side.size()) != g.vertex_count()) return false;
    for (int s : w.side)
        if (s != 0 && s != 1) return false;
    for (auto [u, v] : g.edges())
        if (w.side[u] == w.side[v]) return false;
    return true;
}

Digraph natural_orientation(const Graph& g, const Labelling& b) {
    if (!b.valid_for(g.vertex_count(), g.edge_count()))
        throw std::invalid_argument("natural_orientation: labelling not injective into {0,...,n}");
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(g.edges().size());
    for (auto [u, v] : g.edges()) {
        if (b(u) < b(v))
            arcs.emplace_back(u, v);
        else
            arcs.emplace_back(v, u);
    }
    return Digraph(g.vertex_count(), std::move(arcs));
}

namespace {

// Shared id layout for both blow-ups: children of s are consecutive.
std::vector<std::vector<int>> assign_children(int vertex_count, std::span<const int> sizes) {
    if (static_cast<int>(sizes.size()) != vertex_count)
        throw std::invalid_argument("blow_up: one size per vertex required");
    std::vector<std::vector<int>> children(vertex_count);
    int next = 0;
    for (int s = 0; s < vertex_count; ++s) {
        if (sizes[s] <= 0) throw std::invalid_argument("blow_up: sizes must be positive");
        for (int i = 0; i < sizes[s]; ++i) children[s].push_back(next++);
    }
    return children;
}

}  // namespace

BlownGraph blow_up(const Graph& g, std::span<const int> sizes) {
    auto children = assign_children(g.vertex_count(), sizes);
    int total = children.back().back() + 1;
    std::vector<std::pair<int, int>> edges;
    for (auto [s, t] : g.edges())
        for (int a : children[s])
            for (int b : children[t]) edges.emplace_back(a, b);
    return BlownGraph{Graph(total, std::move(edges)), std::move(children)};
}

BlownDigraph blow_up(const Digraph& d, std::span<const int> sizes) {
    auto children = assign_children(d.vertex_count(), sizes);
    int total = children.back().back() + 1;
    std::vector<std::pair<int, int>> arcs;
    for (auto [u, v] : d.arcs())
        for (int a : children[u])
            for (int b : children[v]) arcs.emplace_back(a, b);
    return BlownDigraph{Digraph(total, std::move(arcs)), std::move(children)};
}

Graph lexicographic_with_empty(const Graph& g, int l) {
    if (l < 1) throw std::invalid_argument("lexicographic_with_empty: l must be >= 1");
    // E(K^c_l) is empty, so only the "{x,u} in E(G)" clause contributes.
    std::vector<std::pair<int, int>> edges;
    for (auto [x, u] : g.edges())
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j) edges.emplace_back(x * l + i, u * l + j);
    return Graph(g.vertex_count() * l, std::move(edges));
}

WeakTensorProduct weak_tensor_product(const Graph& g, const BipartiteWitness& gw,
                                      const Graph& h, const BipartiteWitness& hw) {
    if (!witness_valid(g, gw) || !witness_valid(h, hw))
        throw std::invalid_argument("weak_tensor_product: invalid bipartite witness");

    std::vector<std::pair<int, int>> pairs;
    std::vector<std::vector<int>> id(g.vertex_count(), std::vector<int>(h.vertex_count(), -1));
    for (int side = 0; side < 2; ++side)
        for (int x = 0; x < g.vertex_count(); ++x) {
            if (gw.side[x] != side) continue;
            for (int y = 0; y < h.vertex_count(); ++y) {
                if (hw.side[y] != side) continue;
                id[x][y] = static_cast<int>(pairs.size());
                pairs.emplace_back(x, y);
            }
        }

    std::vector<std::pair<int, int>> edges;
    for (auto [x, u] : g.edges()) {
        int xs = gw.side[x] == 0 ? x : u;  // side-0 endpoint
        int xl = gw.side[x] == 0 ? u : x;
        for (auto [y, v] : h.edges()) {
            int ys = hw.side[y] == 0 ? y : v;
            int yl = hw.side[y] == 0 ? v : y;
            edges.emplace_back(id[xs][ys], id[xl][yl]);
        }
    }
    return WeakTensorProduct{Graph(static_cast<int>(pairs.size()), std::move(edges)),
                             std::move(pairs)};
}

}  // namespace edfforge
