// Classifying labellings (beta / alpha / near-alpha and the oriented
// variants) and transforming oriented valuations by arc flips and affine
// maps of the label group.
#pragma once

#include <optional>
#include <set>
#include <vector>

#include "edfforge/graph.hpp"
#include "edfforge/zmod.hpp"

namespace edfforge {

enum class ValuationKind { beta, alpha, near_alpha, oriented_beta, oriented_near_alpha };

// True iff the absolute edge differences are exactly {1,...,n}, n = |E|.
// Malformed labellings (not injective into {0,...,n}) simply fail the check.
bool check_beta(const Graph& g, const Labelling& b);

// Smallest x such that every edge {u,v} has min label <= x < max label,
// provided b is a beta-valuation. Absent otherwise.
std::optional<Label> check_alpha(const Graph& g, const Labelling& b);

// Bipartition witness (side 0 = V_small) if b is a beta-valuation and every
// vertex is a strict local extremum. The witness is unique: a local minimum
// can only sit in V_small, a local maximum only in V_large.
std::optional<BipartiteWitness> check_near_alpha(const Graph& g, const Labelling& b);

// True iff the arc differences mod n+1 cover Z_{n+1} \ {0} exactly once,
// n = number of arcs. The modulus is always n+1, never caller-supplied.
bool check_oriented_beta(const Digraph& d, const Labelling& b);

// Oriented beta plus the local-extremum condition in the underlying graph.
std::optional<BipartiteWitness> check_oriented_near_alpha(const Digraph& d, const Labelling& b);

// Multiset of arc labels b(v)-b(u) mod n+1, in arc order.
std::vector<Residue> arc_labels(const Digraph& d, const Labelling& b);

// Reverse the arcs carrying the requested labels. Each requested residue must
// occur as an arc label. If a residue labels two arcs (possible only when the
// input is not an oriented beta-valuation), only the last such arc flips;
// that is the self-flip repair of a doubled label. The result must pass
// check_oriented_beta, otherwise the request is rejected.
Digraph flip_arcs(const Digraph& d, const Labelling& b, const std::set<Residue>& labels_to_flip);

// All digraphs reachable from an oriented beta-valuation by flipping
// negation-closed label classes {e,-e} (a self-negative label flips alone).
// 2^ceil(n/2) digraphs; refused above 2^20.
std::vector<Digraph> enumerate_flip_family(const Digraph& d, const Labelling& b);

// b'(x) = k*b(x) + m mod modulus; requires gcd(k, modulus) = 1.
Labelling affine_transform(const Labelling& b, std::int64_t k, std::int64_t m, Residue modulus);

struct LabelledWeakTensor {
    WeakTensorProduct product;
    Labelling labelling;
};

// Near-alpha valuation for the weak tensor product of two near-alpha graphs,
// taken with respect to the bipartitions the valuations induce:
//   sigma(v,w) = m*delta(w) + gamma(v)        on small x small
//   sigma(v,w) = m*(delta(w)-1) + gamma(v)    on large x large
// with m = |E(g)|.
LabelledWeakTensor near_alpha_weak_tensor(const Graph& g, const Labelling& gamma,
                                          const Graph& h, const Labelling& delta);

}  // namespace edfforge
