#include "edfforge/valuation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace edfforge {

namespace {

// Extremum sides: side[v] = 0 if v is a strict local minimum, 1 if maximum,
// absent if mixed. Injectivity rules out ties.
std::optional<BipartiteWitness> extremum_sides(const Graph& g, const Labelling& b) {
    BipartiteWitness w;
    w.side.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        bool below = false, above = false;
        for (int u : g.neighbours(v)) (b(u) < b(v) ? below : above) = true;
        if (below && above) return std::nullopt;
        w.side[v] = below ? 1 : 0;
    }
    return w;
}

}  // namespace

bool check_beta(const Graph& g, const Labelling& b) {
    const int n = g.edge_count();
    if (!b.valid_for(g.vertex_count(), n)) return false;
    std::vector<char> used(n + 1, 0);
    for (auto [u, v] : g.edges()) {
        Label diff = std::abs(b(u) - b(v));
        if (used[diff]) return false;
        used[diff] = 1;
    }
    return true;  // n distinct values in {1,...,n} fill the set
}

std::optional<Label> check_alpha(const Graph& g, const Labelling& b) {
    if (!check_beta(g, b)) return std::nullopt;
    Label max_lo = 0, min_hi = g.edge_count();
    for (auto [u, v] : g.edges()) {
        max_lo = std::max(max_lo, std::min(b(u), b(v)));
        min_hi = std::min(min_hi, std::max(b(u), b(v)));
    }
    if (max_lo < min_hi) return max_lo;
    return std::nullopt;
}

std::optional<BipartiteWitness> check_near_alpha(const Graph& g, const Labelling& b) {
    if (!check_beta(g, b)) return std::nullopt;
    return extremum_sides(g, b);
}

std::vector<Residue> arc_labels(const Digraph& d, const Labelling& b) {
    const Residue mod = d.arc_count() + 1;
    std::vector<Residue> labels;
    labels.reserve(d.arcs().size());
    for (auto [u, v] : d.arcs()) labels.push_back(reduce_mod(b(v) - b(u), mod));
    return labels;
}

bool check_oriented_beta(const Digraph& d, const Labelling& b) {
    const int n = d.arc_count();
    if (!b.valid_for(d.vertex_count(), n)) return false;
    std::vector<char> used(n + 1, 0);
    for (Residue l : arc_labels(d, b)) {
        if (l == 0 || used[l]) return false;
        used[l] = 1;
    }
    return true;
}

std::optional<BipartiteWitness> check_oriented_near_alpha(const Digraph& d, const Labelling& b) {
    if (!check_oriented_beta(d, b)) return std::nullopt;
    return extremum_sides(d.underlying(), b);
}

Digraph flip_arcs(const Digraph& d, const Labelling& b, const std::set<Residue>& labels_to_flip) {
    const Residue mod = d.arc_count() + 1;
    const auto labels = arc_labels(d, b);

    std::set<Residue> wanted;
    for (Residue r : labels_to_flip) wanted.insert(reduce_mod(r, mod));

    std::vector<char> flip(labels.size(), 0);
    for (Residue r : wanted) {
        int last = -1;
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == r) last = static_cast<int>(i);
        if (last < 0)
            throw std::invalid_argument("flip_arcs: requested label absent from arc labels");
        flip[last] = 1;
    }

    std::vector<std::pair<int, int>> arcs = d.arcs();
    for (std::size_t i = 0; i < arcs.size(); ++i)
        if (flip[i]) std::swap(arcs[i].first, arcs[i].second);
    Digraph result(d.vertex_count(), std::move(arcs));

    if (!check_oriented_beta(result, b))
        throw std::invalid_argument("flip_arcs: flipped digraph is not an oriented beta-valuation");
    return result;
}

std::vector<Digraph> enumerate_flip_family(const Digraph& d, const Labelling& b) {
    if (!check_oriented_beta(d, b))
        throw std::invalid_argument("enumerate_flip_family: not an oriented beta-valuation");
    const int n = d.arc_count();
    const Residue mod = n + 1;

    // Flip units: the pairs {e, mod-e} with e < mod-e, plus the self-negative
    // label mod/2 when mod is even. Every label occurs exactly once here.
    std::vector<std::vector<Residue>> units;
    for (Residue e = 1; 2 * e < mod; ++e) units.push_back({e, mod - e});
    if (mod % 2 == 0) units.push_back({mod / 2});

    if (units.size() > 20)
        throw std::invalid_argument("enumerate_flip_family: family too large to enumerate");

    std::vector<Digraph> family;
    family.reserve(std::size_t{1} << units.size());
    for (std::size_t mask = 0; mask < (std::size_t{1} << units.size()); ++mask) {
        std::set<Residue> flips;
        for (std::size_t i = 0; i < units.size(); ++i)
            if (mask & (std::size_t{1} << i)) flips.insert(units[i].begin(), units[i].end());
        family.push_back(flip_arcs(d, b, flips));
    }
    return family;
}

Labelling affine_transform(const Labelling& b, std::int64_t k, std::int64_t m, Residue modulus) {
    if (modulus <= 0) throw std::invalid_argument("affine_transform: modulus must be positive");
    if (std::gcd(reduce_mod(k, modulus), modulus) != 1)
        throw std::invalid_argument("affine_transform: k not invertible mod modulus");
    std::vector<Label> labels;
    labels.reserve(b.labels().size());
    for (Label l : b.labels()) labels.push_back(reduce_mod(k * l + m, modulus));
    return Labelling(std::move(labels));
}

LabelledWeakTensor near_alpha_weak_tensor(const Graph& g, const Labelling& gamma,
                                          const Graph& h, const Labelling& delta) {
    auto gw = check_near_alpha(g, gamma);
    auto hw = check_near_alpha(h, delta);
    if (!gw || !hw)
        throw std::invalid_argument("near_alpha_weak_tensor: inputs must be near alpha-valuations");

    auto product = weak_tensor_product(g, *gw, h, *hw);
    const Label m = g.edge_count();
    std::vector<Label> sigma;
    sigma.reserve(product.vertex_pairs.size());
    for (auto [v, w] : product.vertex_pairs) {
        if (gw->side[v] == 0)
            sigma.push_back(m * delta(w) + gamma(v));
        else
            sigma.push_back(m * (delta(w) - 1) + gamma(v));
    }
    LabelledWeakTensor out{std::move(product), Labelling(std::move(sigma))};
    if (!check_near_alpha(out.product.graph, out.labelling))
        throw std::logic_error("near_alpha_weak_tensor: construction failed its own check");
    return out;
}

}  // namespace edfforge
