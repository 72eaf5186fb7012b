#include "edfforge/zmod.hpp"

#include <algorithm>
#include <stdexcept>

namespace edfforge {

Residue reduce_mod(Residue v, Residue n) {
    if (n <= 0) throw std::invalid_argument("modulus must be positive");
    Residue r = v % n;
    return r < 0 ? r + n : r;
}

ZMultiset::ZMultiset(Residue modulus) : modulus_(modulus) {
    if (modulus <= 0) throw std::invalid_argument("ZMultiset: modulus must be positive");
}

ZMultiset::ZMultiset(Residue modulus, std::span<const Residue> values) : ZMultiset(modulus) {
    for (Residue v : values) {
        ++counts_[reduce_mod(v, modulus_)];
        ++total_;
    }
}

ZMultiset::ZMultiset(Residue modulus, std::map<Residue, std::int64_t> counts) : ZMultiset(modulus) {
    for (auto& [r, c] : counts) {
        if (c < 0) throw std::invalid_argument("ZMultiset: negative multiplicity");
        if (c == 0) continue;
        counts_[reduce_mod(r, modulus_)] += c;
        total_ += c;
    }
}

std::int64_t ZMultiset::count(Residue r) const {
    auto it = counts_.find(reduce_mod(r, modulus_));
    return it == counts_.end() ? 0 : it->second;
}

ZSubset::ZSubset(Residue modulus, std::vector<Residue> elements) : modulus_(modulus) {
    if (modulus <= 0) throw std::invalid_argument("ZSubset: modulus must be positive");
    for (Residue& e : elements) e = reduce_mod(e, modulus);
    std::sort(elements.begin(), elements.end());
    if (std::adjacent_find(elements.begin(), elements.end()) != elements.end())
        throw std::invalid_argument("ZSubset: elements collide after reduction mod n");
    elements_ = std::move(elements);
}

bool ZSubset::contains(Residue r) const {
    return std::binary_search(elements_.begin(), elements_.end(), reduce_mod(r, modulus_));
}

ZMultiset external_difference(const ZSubset& a, const ZSubset& b) {
    if (a.modulus() != b.modulus())
        throw std::invalid_argument("external_difference: modulus mismatch");
    const Residue n = a.modulus();
    std::map<Residue, std::int64_t> counts;
    for (Residue x : a.elements())
        for (Residue y : b.elements()) ++counts[reduce_mod(x - y, n)];
    return ZMultiset(n, std::move(counts));
}

bool is_lambda_cover(const ZMultiset& m, std::int64_t lambda) {
    if (m.modulus() < 2) throw std::invalid_argument("is_lambda_cover: modulus must be >= 2");
    if (lambda <= 0) throw std::invalid_argument("is_lambda_cover: lambda must be positive");
    if (m.count(0) != 0) return false;
    if (m.total() != lambda * (m.modulus() - 1)) return false;
    for (const auto& [r, c] : m.counts())
        if (c != lambda) return false;
    return true;
}

ZMultiset multiset_union(std::span<const ZMultiset> parts, Residue modulus) {
    std::map<Residue, std::int64_t> counts;
    for (const ZMultiset& p : parts) {
        if (p.modulus() != modulus)
            throw std::invalid_argument("multiset_union: modulus mismatch");
        for (const auto& [r, c] : p.counts()) counts[r] += c;
    }
    return ZMultiset(modulus, std::move(counts));
}

ZMultiset multiset_union(std::span<const ZMultiset> parts) {
    if (parts.empty())
        throw std::invalid_argument("multiset_union: empty union needs an explicit modulus");
    return multiset_union(parts, parts.front().modulus());
}

}  // namespace edfforge
