#include "edfforge/edf.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

#include "edfforge/families.hpp"

namespace edfforge {

SetFamily::SetFamily(Residue modulus, std::vector<ZSubset> sets) : modulus_(modulus) {
    if (sets.empty()) throw std::invalid_argument("SetFamily: empty family");
    const std::size_t l = sets.front().size();
    std::set<Residue> seen;
    for (const ZSubset& s : sets) {
        if (s.modulus() != modulus) throw std::invalid_argument("SetFamily: modulus mismatch");
        if (s.size() != l) throw std::invalid_argument("SetFamily: sets must share one size");
        for (Residue e : s.elements())
            if (!seen.insert(e).second)
                throw std::invalid_argument("SetFamily: sets are not pairwise disjoint");
    }
    sets_ = std::move(sets);
}

EdfWitness witness_from_digraph(EdfParams params, const Digraph& h, SetFamily family) {
    return EdfWitness{params, h.vertex_count(), h.arcs(), std::move(family)};
}

namespace {

std::optional<std::pair<Residue, Residue>> as_interval(const ZMultiset& m) {
    if (m.counts().empty()) return std::nullopt;
    Residue lo = m.counts().begin()->first;
    Residue hi = m.counts().rbegin()->first;
    if (hi - lo + 1 != m.total()) return std::nullopt;
    for (const auto& [r, c] : m.counts())
        if (c != 1) return std::nullopt;
    return std::make_pair(lo, hi);
}

std::string cover_failure(const ZMultiset& u, std::int64_t lambda) {
    if (u.count(0) != 0)
        return "residue 0 occurs " + std::to_string(u.count(0)) + " times, expected 0";
    for (const auto& [r, c] : u.counts())
        if (c != lambda)
            return "residue " + std::to_string(r) + " occurs " + std::to_string(c) +
                   " times, expected " + std::to_string(lambda);
    for (Residue r = 1; r < u.modulus(); ++r)
        if (u.count(r) == 0) return "residue " + std::to_string(r) + " is missing";
    return "multiset is not a lambda-cover";
}

}  // namespace

VerifyResult verify_edf(const EdfWitness& w) {
    VerifyResult res;
    const auto& sets = w.family.sets();
    if (w.family.modulus() != w.params.n || w.params.m != w.vertex_count ||
        w.params.m != w.family.set_count() || w.params.l != w.family.set_size()) {
        res.message = "witness parameters disagree with the family";
        return res;
    }
    for (auto [i, j] : w.arcs)
        if (i < 0 || j < 0 || i >= w.params.m || j >= w.params.m)
            throw std::invalid_argument("verify_edf: arc index out of range");

    std::vector<ZMultiset> parts;
    parts.reserve(w.arcs.size());
    for (auto [i, j] : w.arcs) {
        ZMultiset diffs = external_difference(sets[j], sets[i]);
        res.transcript.push_back(ArcTranscript{{i, j}, diffs, as_interval(diffs)});
        parts.push_back(std::move(diffs));
    }
    ZMultiset total = multiset_union(parts, w.params.n);
    res.ok = is_lambda_cover(total, w.params.lambda);
    if (!res.ok) res.message = cover_failure(total, w.params.lambda);
    return res;
}

CcedfResult verify_ccedf(const SetFamily& family, int c, std::int64_t lambda) {
    const int m = family.set_count();
    if (m <= 1) throw std::invalid_argument("verify_ccedf: need m > 1 sets");
    if (c < 1 || c > m - 1) throw std::invalid_argument("verify_ccedf: need 1 <= c <= m-1");

    CcedfResult res;
    const auto& sets = family.sets();
    std::vector<ZMultiset> direct_parts;
    for (int i = 0; i < m; ++i)
        direct_parts.push_back(external_difference(sets[(i + c) % m], sets[i]));
    ZMultiset direct = multiset_union(direct_parts, family.modulus());

    res.d = std::gcd(c, m);
    std::vector<ZMultiset> block_parts;
    for (int j = 0; j < res.d; ++j) {
        std::vector<int> block;
        for (int i = 0, idx = j; i < m / res.d; ++i, idx = (idx + c) % m) {
            block.push_back(idx);
            block_parts.push_back(external_difference(sets[(idx + c) % m], sets[idx]));
        }
        res.blocks.push_back(std::move(block));
    }
    ZMultiset grouped = multiset_union(block_parts, family.modulus());

    res.grouping_agrees = (direct == grouped);
    res.ok = res.grouping_agrees && is_lambda_cover(direct, lambda);
    if (!res.ok)
        res.message = res.grouping_agrees ? cover_failure(direct, lambda)
                                          : "gcd decomposition disagrees with the direct union";
    return res;
}

Digraph ccedf_digraph(int m, int c) {
    if (m <= 1 || c < 1 || c > m - 1) throw std::invalid_argument("ccedf_digraph: bad (m,c)");
    if (2 * c == m)
        throw std::invalid_argument("ccedf_digraph: c = m/2 is not an oriented digraph");
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < m; ++i) arcs.emplace_back(i, (i + c) % m);
    return Digraph(m, std::move(arcs));
}

namespace {

// Shared label rule for one blow-up pass over the side to expand.
// expand_large=false: V_small -> {l*p+i}, others -> {l*p}.
// expand_large=true:  V_large -> {l*p-i}, others -> {l*p}.
std::vector<Label> pass_labels(const Labelling& p, const BipartiteWitness& sides, int l,
                               bool expand_large, const std::vector<std::vector<int>>& children) {
    int total = 0;
    for (const auto& c : children) total += static_cast<int>(c.size());
    std::vector<Label> labels(total);
    for (int v = 0; v < static_cast<int>(children.size()); ++v) {
        const bool expanded = (sides.side[v] == 1) == expand_large && children[v].size() > 1;
        for (std::size_t i = 0; i < children[v].size(); ++i) {
            Label base = static_cast<Label>(l) * p(v);
            labels[children[v][i]] =
                expanded ? (expand_large ? base - static_cast<Label>(i) : base + static_cast<Label>(i))
                         : base;
        }
    }
    return labels;
}

std::vector<int> pass_sizes(const BipartiteWitness& sides, int l, bool expand_large) {
    std::vector<int> sizes(sides.side.size());
    for (std::size_t v = 0; v < sides.side.size(); ++v)
        sizes[v] = (sides.side[v] == 1) == expand_large ? l : 1;
    return sizes;
}

LabelledBlownGraph blow_up_labelled_pass(const Graph& g, const Labelling& p, int l,
                                         bool expand_large) {
    if (l < 1) throw std::invalid_argument("blow_up_labelled: l must be >= 1");
    auto sides = check_near_alpha(g, p);
    if (!sides)
        throw std::invalid_argument("blow_up_labelled: input is not a near alpha-valuation");
    BlownGraph blown = blow_up(g, pass_sizes(*sides, l, expand_large));
    Labelling q(pass_labels(p, *sides, l, expand_large, blown.children));
    if (!check_near_alpha(blown.graph, q))
        throw std::logic_error("blow_up_labelled: pass lost the near alpha property");
    return {std::move(blown.graph), std::move(q), std::move(blown.children)};
}

LabelledBlownDigraph blow_up_labelled_pass(const Digraph& d, const Labelling& p, int l,
                                           bool expand_large) {
    if (l < 1) throw std::invalid_argument("blow_up_labelled: l must be >= 1");
    auto sides = check_oriented_near_alpha(d, p);
    if (!sides)
        throw std::invalid_argument(
            "blow_up_labelled: input is not an oriented near alpha-valuation");
    BlownDigraph blown = blow_up(d, pass_sizes(*sides, l, expand_large));
    Labelling q(pass_labels(p, *sides, l, expand_large, blown.children));
    if (!check_oriented_near_alpha(blown.digraph, q))
        throw std::logic_error("blow_up_labelled: pass lost the oriented near alpha property");
    return {std::move(blown.digraph), std::move(q), std::move(blown.children)};
}

}  // namespace

LabelledBlownGraph blow_up_labelled_small(const Graph& g, const Labelling& p, int l) {
    return blow_up_labelled_pass(g, p, l, false);
}
LabelledBlownGraph blow_up_labelled_large(const Graph& g, const Labelling& p, int l) {
    return blow_up_labelled_pass(g, p, l, true);
}
LabelledBlownDigraph blow_up_labelled_small(const Digraph& d, const Labelling& p, int l) {
    return blow_up_labelled_pass(d, p, l, false);
}
LabelledBlownDigraph blow_up_labelled_large(const Digraph& d, const Labelling& p, int l) {
    return blow_up_labelled_pass(d, p, l, true);
}

namespace {

std::vector<std::vector<int>> compose_children(const std::vector<std::vector<int>>& first,
                                               const std::vector<std::vector<int>>& second) {
    std::vector<std::vector<int>> out(first.size());
    for (std::size_t v = 0; v < first.size(); ++v)
        for (int mid : first[v])
            out[v].insert(out[v].end(), second[mid].begin(), second[mid].end());
    return out;
}

SetFamily family_from_children(const std::vector<std::vector<int>>& children,
                               const Labelling& final_labels, Residue n) {
    std::vector<ZSubset> sets;
    sets.reserve(children.size());
    for (const auto& kids : children) {
        std::vector<Residue> elems;
        elems.reserve(kids.size());
        for (int id : kids) elems.push_back(final_labels(id));
        sets.emplace_back(n, std::move(elems));
    }
    return SetFamily(n, std::move(sets));
}

}  // namespace

EdfWitness edf_from_near_alpha(const Graph& g, const Labelling& p, int l) {
    const Residue n = static_cast<Residue>(g.edge_count()) * l * l + 1;
    auto pass1 = blow_up_labelled_large(g, p, l);
    auto pass2 = blow_up_labelled_small(pass1.graph, pass1.labelling, l);
    auto children = compose_children(pass1.children, pass2.children);

    EdfWitness w = witness_from_digraph(EdfParams{n, g.vertex_count(), l, 1},
                                        natural_orientation(g, p),
                                        family_from_children(children, pass2.labelling, n));
    if (!verify_edf(w).ok)
        throw std::logic_error("edf_from_near_alpha: pipeline output failed verification");
    return w;
}

EdfWitness edf_from_oriented_near_alpha(const Digraph& d, const Labelling& p, int l) {
    const Residue n = static_cast<Residue>(d.arc_count()) * l * l + 1;
    auto pass1 = blow_up_labelled_small(d, p, l);
    auto pass2 = blow_up_labelled_large(pass1.digraph, pass1.labelling, l);
    auto children = compose_children(pass1.children, pass2.children);

    EdfWitness w = witness_from_digraph(EdfParams{n, d.vertex_count(), l, 1}, d,
                                        family_from_children(children, pass2.labelling, n));
    if (!verify_edf(w).ok)
        throw std::logic_error("edf_from_oriented_near_alpha: pipeline output failed verification");
    return w;
}

EdfWitness with_reversed_arcs(const EdfWitness& w) {
    EdfWitness doubled = w;
    for (auto [i, j] : w.arcs) doubled.arcs.emplace_back(j, i);
    doubled.params.lambda = 2 * w.params.lambda;
    return doubled;
}

TwoCedf build_2cedf(int k, int l) {
    if (k < 2) throw std::invalid_argument("build_2cedf: cycle length 2k must be >= 4");
    if (l < 1) throw std::invalid_argument("build_2cedf: l must be >= 1");
    const int cycle_len = 2 * k;
    LabelledDigraph cycles =
        cycle_len % 4 == 0 ? two_cycles_clockwise(cycle_len / 4, TwoCycleClass::len_4k)
                           : two_cycles_clockwise((cycle_len - 2) / 4, TwoCycleClass::len_4k_plus_2);

    EdfWitness w = edf_from_oriented_near_alpha(cycles.digraph, cycles.labelling, l);
    const auto& sets = w.family.sets();
    std::vector<ZSubset> interleaved;
    interleaved.reserve(sets.size());
    for (int i = 0; i < cycle_len; ++i) {
        interleaved.push_back(sets[i]);
        interleaved.push_back(sets[cycle_len + i]);
    }
    SetFamily family(w.params.n, std::move(interleaved));
    CcedfResult verification = verify_ccedf(family, 2, 1);
    if (!verification.ok)
        throw std::logic_error("build_2cedf: interleaved family failed the 2-CEDF check");
    return TwoCedf{std::move(family), std::move(w), std::move(verification)};
}

}  // namespace edfforge
