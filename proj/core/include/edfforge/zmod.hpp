// Exact multiset arithmetic over Z_n. Everything downstream (valuation
// checks, EDF verification) reduces to equations between these values.
#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace edfforge {

using Residue = std::int64_t;

// Canonical representative of v modulo n, in {0,...,n-1}. Accepts negatives.
Residue reduce_mod(Residue v, Residue n);

// Multiset of residues mod n, stored sparsely. Immutable once built.
class ZMultiset {
public:
    explicit ZMultiset(Residue modulus);
    ZMultiset(Residue modulus, std::span<const Residue> values);
    ZMultiset(Residue modulus, std::map<Residue, std::int64_t> counts);

    Residue modulus() const { return modulus_; }
    std::int64_t count(Residue r) const;
    std::int64_t total() const { return total_; }
    const std::map<Residue, std::int64_t>& counts() const { return counts_; }

    bool operator==(const ZMultiset&) const = default;

private:
    Residue modulus_;
    std::map<Residue, std::int64_t> counts_;  // residue -> multiplicity > 0
    std::int64_t total_ = 0;
};

// Subset of Z_n: strictly sorted distinct residues.
class ZSubset {
public:
    ZSubset(Residue modulus, std::vector<Residue> elements);

    Residue modulus() const { return modulus_; }
    const std::vector<Residue>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    bool contains(Residue r) const;

    bool operator==(const ZSubset&) const = default;

private:
    Residue modulus_;
    std::vector<Residue> elements_;
};

// Delta(a,b) = {x - y : x in a, y in b} as a multiset mod n.
ZMultiset external_difference(const ZSubset& a, const ZSubset& b);

// True iff count(0) == 0 and count(r) == lambda for every r in {1,...,n-1}.
bool is_lambda_cover(const ZMultiset& m, std::int64_t lambda);

// Pointwise sum of multiplicities. The empty union needs an explicit modulus.
ZMultiset multiset_union(std::span<const ZMultiset> parts);
ZMultiset multiset_union(std::span<const ZMultiset> parts, Residue modulus);

}  // namespace edfforge
