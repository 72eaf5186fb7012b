// Digraph-defined external difference families: verification by exact
// multiset arithmetic, the labelled blow-up passes, and the pipelines that
// turn (oriented) near alpha-valuations into verified EDFs and 2-CEDFs.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "edfforge/graph.hpp"
#include "edfforge/valuation.hpp"
#include "edfforge/zmod.hpp"

namespace edfforge {

// Ordered pairwise-disjoint subsets of Z_n, all of one size.
class SetFamily {
public:
    SetFamily(Residue modulus, std::vector<ZSubset> sets);

    Residue modulus() const { return modulus_; }
    const std::vector<ZSubset>& sets() const { return sets_; }
    int set_count() const { return static_cast<int>(sets_.size()); }
    int set_size() const { return static_cast<int>(sets_.front().size()); }

    bool operator==(const SetFamily&) const = default;

private:
    Residue modulus_;
    std::vector<ZSubset> sets_;
};

struct EdfParams {
    Residue n;
    int m;
    int l;
    std::int64_t lambda;

    bool operator==(const EdfParams&) const = default;
};

// (n,m,l,lambda;H)-EDF candidate. The arc list usually comes from a simple
// digraph H on {0,...,m-1}; the lambda=2 reversal construction doubles it
// with the reversed arcs, which no longer fits the oriented-graph invariant,
// so arcs are stored as a plain list here.
struct EdfWitness {
    EdfParams params;
    int vertex_count;
    std::vector<std::pair<int, int>> arcs;
    SetFamily family;

    bool operator==(const EdfWitness&) const = default;
};

EdfWitness witness_from_digraph(EdfParams params, const Digraph& h, SetFamily family);

struct ArcTranscript {
    std::pair<int, int> arc;
    ZMultiset diffs;
    // Set when the multiset is a non-wrapping interval [lo,hi], each once.
    std::optional<std::pair<Residue, Residue>> interval;
};

struct VerifyResult {
    bool ok = false;
    std::string message;  // names the first failing residue when !ok
    std::vector<ArcTranscript> transcript;
};

// Checks  U_{(i,j) in arcs} Delta(A_j, A_i) = lambda * (Z_n \ {0}).
VerifyResult verify_edf(const EdfWitness& w);

struct CcedfResult {
    bool ok = false;
    std::string message;
    int d = 0;                             // gcd(c, m)
    std::vector<std::vector<int>> blocks;  // d cyclic index blocks, m/d sets each
    bool grouping_agrees = false;          // direct union == union of block unions
};

// Checks  U_i Delta(A_{i+c mod m}, A_i) = lambda * (Z_n \ {0}), and
// re-derives the same multiset through the gcd(c,m) block decomposition.
CcedfResult verify_ccedf(const SetFamily& family, int c, std::int64_t lambda = 1);

// The digraph whose arcs are (i, i+c mod m): d disjoint unidirectional cycles.
Digraph ccedf_digraph(int m, int c);

struct LabelledBlownGraph {
    Graph graph;
    Labelling labelling;
    std::vector<std::vector<int>> children;
};
struct LabelledBlownDigraph {
    Digraph digraph;
    Labelling labelling;
    std::vector<std::vector<int>> children;
};

// One blow-up pass. "small" expands every V_small vertex x to the ascending
// run {l*p(x)+i : 0<=i<l} and rescales V_large labels to l*p(y); "large"
// expands V_large to the descending run {l*p(y)-i} and rescales V_small.
// Inputs must pass check_near_alpha / check_oriented_near_alpha; outputs do too.
LabelledBlownGraph blow_up_labelled_small(const Graph& g, const Labelling& p, int l);
LabelledBlownGraph blow_up_labelled_large(const Graph& g, const Labelling& p, int l);
LabelledBlownDigraph blow_up_labelled_small(const Digraph& d, const Labelling& p, int l);
LabelledBlownDigraph blow_up_labelled_large(const Digraph& d, const Labelling& p, int l);

// (|E|l^2+1, |V|, l, 1; G^p)-EDF from a near alpha-valuation. Pass order is
// large side then small side, which reproduces the published example sets:
// small vertices end as {l^2 p(x)+i}, large ones as {l^2 p(y)-l*i}.
EdfWitness edf_from_near_alpha(const Graph& g, const Labelling& p, int l);

// (|E|l^2+1, |V|, l, 1; G)-EDF from an oriented near alpha-valuation. Pass
// order is small side then large side: small vertices end as {l^2 p(x)+l*i},
// large ones as {l^2 p(y)-i}.
EdfWitness edf_from_oriented_near_alpha(const Digraph& d, const Labelling& p, int l);

// Adds the reversed arc set, doubling lambda.
EdfWitness with_reversed_arcs(const EdfWitness& w);

struct TwoCedf {
    SetFamily family;      // interleaved (A_1,B_1,A_2,B_2,...)
    EdfWitness witness;    // the underlying 2C_{2k}* clockwise EDF
    CcedfResult verification;
};

// (4k l^2 + 1, 4k, l, 1)-2-CEDF from two clockwise cycles of length 2k, k >= 2.
TwoCedf build_2cedf(int k, int l);

}  // namespace edfforge
