#include "edfforge/oracle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace edfforge {

namespace {

// Backtracking over injective maps V -> {0,...,n}, vertices in descending
// degree order, labels ascending. Prunes:
//  - duplicate edge label (all classes),
//  - a vertex with both a smaller and a larger assigned neighbour
//    (alpha / near_alpha), and
//  - max over completed edges of the smaller endpoint reaching the min of
//    the larger endpoints (alpha): no threshold x could separate them.
// A full assignment that survives the prunes is a valuation of the requested
// class, so leaves need no recheck.
class ValuationSearch {
public:
    ValuationSearch(const Graph& g, ValuationKind kind) : g_(g), kind_(kind), n_(g.edge_count()) {
        order_.resize(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) order_[v] = v;
        std::stable_sort(order_.begin(), order_.end(),
                         [&](int a, int b) { return g.degree(a) > g.degree(b); });
        labels_.assign(g.vertex_count(), -1);
        label_used_.assign(n_ + 1, 0);
        edge_used_.assign(n_ + 1, 0);
        has_smaller_.assign(g.vertex_count(), 0);
        has_larger_.assign(g.vertex_count(), 0);
        min_hi_ = n_ + 1;
    }

    std::optional<Labelling> run() {
        if (g_.vertex_count() > n_ + 1) return std::nullopt;  // injectivity impossible
        if (dfs(0)) return Labelling(labels_);
        return std::nullopt;
    }

private:
    struct Trail {
        std::vector<Label> edges;
        std::vector<std::pair<std::vector<char>*, int>> flags;
        Label saved_lo = 0, saved_hi = 0;
    };

    bool dfs(std::size_t idx) {
        if (idx == order_.size()) return true;
        const int v = order_[idx];
        for (Label cand = 0; cand <= n_; ++cand) {
            if (label_used_[cand]) continue;
            Trail trail;
            if (apply(v, cand, trail)) {
                if (dfs(idx + 1)) return true;
                revert(v, cand, trail);
            }
        }
        return false;
    }

    // Assigns cand to v and updates the prune state; on any violation the
    // partial effects are rolled back and false is returned.
    bool apply(int v, Label cand, Trail& trail) {
        trail.saved_lo = max_lo_;
        trail.saved_hi = min_hi_;
        for (int u : g_.neighbours(v)) {
            if (labels_[u] < 0) continue;
            const Label lu = labels_[u];
            const Label diff = std::abs(cand - lu);
            if (edge_used_[diff]) return rollback(trail);
            edge_used_[diff] = 1;
            trail.edges.push_back(diff);
            if (kind_ != ValuationKind::beta) {
                mark(cand < lu ? has_smaller_ : has_larger_, u, trail);
                mark(cand < lu ? has_larger_ : has_smaller_, v, trail);
                if ((has_smaller_[u] && has_larger_[u]) || (has_smaller_[v] && has_larger_[v]))
                    return rollback(trail);
            }
            if (kind_ == ValuationKind::alpha) {
                max_lo_ = std::max(max_lo_, std::min(cand, lu));
                min_hi_ = std::min(min_hi_, std::max(cand, lu));
                if (max_lo_ >= min_hi_) return rollback(trail);
            }
        }
        labels_[v] = cand;
        label_used_[cand] = 1;
        return true;
    }

    void revert(int v, Label cand, Trail& trail) {
        labels_[v] = -1;
        label_used_[cand] = 0;
        rollback(trail);
    }

    bool rollback(Trail& trail) {
        for (Label d : trail.edges) edge_used_[d] = 0;
        for (auto [flags, u] : trail.flags) (*flags)[u] = 0;
        max_lo_ = trail.saved_lo;
        min_hi_ = trail.saved_hi;
        trail.edges.clear();
        trail.flags.clear();
        return false;
    }

    // Records only 0 -> 1 transitions so rollback restores exactly.
    void mark(std::vector<char>& flags, int u, Trail& trail) {
        if (!flags[u]) {
            flags[u] = 1;
            trail.flags.emplace_back(&flags, u);
        }
    }

    const Graph& g_;
    ValuationKind kind_;
    Label n_;
    std::vector<int> order_;
    std::vector<Label> labels_;
    std::vector<char> label_used_, edge_used_;
    std::vector<char> has_smaller_, has_larger_;
    Label max_lo_ = 0, min_hi_ = 0;
};

class OrientedBetaSearch {
public:
    explicit OrientedBetaSearch(const Digraph& d) : d_(d), n_(d.arc_count()), mod_(n_ + 1) {
        order_.resize(d.vertex_count());
        for (int v = 0; v < d.vertex_count(); ++v) order_[v] = v;
        auto deg = [&](int v) { return d.out_neighbours(v).size() + d.in_neighbours(v).size(); };
        std::stable_sort(order_.begin(), order_.end(),
                         [&](int a, int b) { return deg(a) > deg(b); });
        labels_.assign(d.vertex_count(), -1);
        label_used_.assign(n_ + 1, 0);
        arc_used_.assign(mod_, 0);
    }

    std::optional<Labelling> run() {
        if (d_.vertex_count() > n_ + 1) return std::nullopt;
        if (dfs(0)) return Labelling(labels_);
        return std::nullopt;
    }

private:
    bool dfs(std::size_t idx) {
        if (idx == order_.size()) return true;
        const int v = order_[idx];
        for (Label cand = 0; cand <= n_; ++cand) {
            if (label_used_[cand]) continue;
            std::vector<Residue> marked;
            bool ok = true;
            auto use = [&](Residue diff) {
                if (arc_used_[diff]) return false;
                arc_used_[diff] = 1;
                marked.push_back(diff);
                return true;
            };
            for (int u : d_.out_neighbours(v)) {
                if (labels_[u] < 0) continue;
                if (!use(reduce_mod(labels_[u] - cand, mod_))) {
                    ok = false;
                    break;
                }
            }
            if (ok)
                for (int u : d_.in_neighbours(v)) {
                    if (labels_[u] < 0) continue;
                    if (!use(reduce_mod(cand - labels_[u], mod_))) {
                        ok = false;
                        break;
                    }
                }
            if (ok) {
                labels_[v] = cand;
                label_used_[cand] = 1;
                if (dfs(idx + 1)) return true;
                labels_[v] = -1;
                label_used_[cand] = 0;
            }
            for (Residue diff : marked) arc_used_[diff] = 0;
        }
        return false;
    }

    const Digraph& d_;
    Label n_;
    Residue mod_;
    std::vector<int> order_;
    std::vector<Label> labels_;
    std::vector<char> label_used_;
    std::vector<char> arc_used_;
};

}  // namespace

std::optional<Labelling> search_valuation(const Graph& g, ValuationKind kind,
                                          const SearchOptions& opts) {
    if (kind != ValuationKind::beta && kind != ValuationKind::alpha &&
        kind != ValuationKind::near_alpha)
        throw std::invalid_argument("search_valuation: oriented classes need a digraph");
    if (g.vertex_count() > opts.max_vertices)
        throw std::invalid_argument("search_valuation: graph exceeds the size bound (" +
                                    std::to_string(opts.max_vertices) + " vertices)");
    return ValuationSearch(g, kind).run();
}

std::optional<Labelling> search_oriented_beta(const Digraph& d, const SearchOptions& opts) {
    if (d.vertex_count() > opts.max_vertices)
        throw std::invalid_argument("search_oriented_beta: digraph exceeds the size bound (" +
                                    std::to_string(opts.max_vertices) + " vertices)");
    return OrientedBetaSearch(d).run();
}

namespace {

// Beyer-Hedetniemi successor over rooted level sequences (root level 1).
std::vector<std::vector<int>> rooted_level_sequences(int n) {
    std::vector<int> s(n);
    for (int i = 0; i < n; ++i) s[i] = i + 1;
    std::vector<std::vector<int>> out;
    while (true) {
        out.push_back(s);
        int p = -1;
        for (int i = n - 1; i >= 0; --i)
            if (s[i] > 2) {
                p = i;
                break;
            }
        if (p < 0) break;
        int q = -1;
        for (int i = p - 1; i >= 0; --i)
            if (s[i] == s[p] - 1) {
                q = i;
                break;
            }
        for (int i = p; i < n; ++i) s[i] = s[i - (p - q)];
    }
    return out;
}

std::vector<int> parents_of(const std::vector<int>& levels) {
    std::vector<int> parent(levels.size(), -1);
    for (std::size_t i = 1; i < levels.size(); ++i)
        for (int j = static_cast<int>(i) - 1; j >= 0; --j)
            if (levels[j] == levels[i] - 1) {
                parent[i] = j;
                break;
            }
    return parent;
}

std::string ahu_code(const std::vector<std::vector<int>>& adj, int v, int parent) {
    std::vector<std::string> child_codes;
    for (int u : adj[v])
        if (u != parent) child_codes.push_back(ahu_code(adj, u, v));
    std::sort(child_codes.begin(), child_codes.end());
    std::string code = "(";
    for (const auto& c : child_codes) code += c;
    code += ")";
    return code;
}

std::vector<int> tree_centres(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> degree(n), removed(n, 0);
    std::vector<int> layer;
    for (int v = 0; v < n; ++v) {
        degree[v] = static_cast<int>(adj[v].size());
        if (degree[v] <= 1) layer.push_back(v);
    }
    int remaining = n;
    while (remaining > 2 && !layer.empty()) {
        std::vector<int> next;
        for (int v : layer) {
            removed[v] = 1;
            --remaining;
            for (int u : adj[v])
                if (!removed[u] && --degree[u] == 1) next.push_back(u);
        }
        layer = std::move(next);
    }
    std::vector<int> centres;
    for (int v = 0; v < n; ++v)
        if (!removed[v]) centres.push_back(v);
    return centres;
}

std::string canonical_tree_code(const std::vector<int>& parent) {
    const int n = static_cast<int>(parent.size());
    std::vector<std::vector<int>> adj(n);
    for (int i = 1; i < n; ++i) {
        adj[i].push_back(parent[i]);
        adj[parent[i]].push_back(i);
    }
    auto centres = tree_centres(adj);
    if (centres.size() == 1) return "c" + ahu_code(adj, centres[0], -1);
    std::string a = ahu_code(adj, centres[0], centres[1]);
    std::string b = ahu_code(adj, centres[1], centres[0]);
    if (b < a) std::swap(a, b);
    return "b" + a + b;
}

}  // namespace

std::vector<Graph> all_trees(int n) {
    if (n < 2) throw std::invalid_argument("all_trees: need n >= 2 (K_1 has an isolated vertex)");
    std::set<std::string> seen;
    std::vector<Graph> trees;
    for (const auto& levels : rooted_level_sequences(n)) {
        auto parent = parents_of(levels);
        if (!seen.insert(canonical_tree_code(parent)).second) continue;
        std::vector<std::pair<int, int>> edges;
        for (int i = 1; i < n; ++i) edges.emplace_back(parent[i], i);
        trees.emplace_back(n, std::move(edges));
    }
    return trees;
}

TreeSweepReport exhaustive_trees_near_alpha(int n) {
    if (n < 2 || n > 10)
        throw std::invalid_argument("exhaustive_trees_near_alpha: order must be in [2,10]");
    TreeSweepReport report;
    report.order = n;
    auto trees = all_trees(n);
    report.tree_count = static_cast<int>(trees.size());
    for (int i = 0; i < report.tree_count; ++i)
        if (!search_valuation(trees[i], ValuationKind::near_alpha).has_value())
            report.failures.push_back(i);
    return report;
}

}  // namespace edfforge
