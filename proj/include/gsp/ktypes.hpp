#pragma once

#include "gsp/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace gsp {

// Highest weight of a U(n) irrep: weakly decreasing integers, negatives allowed.
using KWeight = std::vector<long long>;

bool is_dominant(const KWeight& w);

// Formal nonnegative-integer combination of weights of a fixed length.
class WeightMultiset {
public:
    using Map = std::map<std::vector<long long>, Int>;

    WeightMultiset() = default;

    void add(const std::vector<long long>& w, const Int& mult);
    const Map& entries() const { return m_; }
    Int total() const;
    bool empty() const { return m_.empty(); }
    size_t support_size() const { return m_.size(); }
    Int multiplicity(const std::vector<long long>& w) const;

    friend WeightMultiset operator*(const WeightMultiset& a, const WeightMultiset& b);
    friend bool operator==(const WeightMultiset& a, const WeightMultiset& b) {
        return a.m_ == b.m_;
    }

private:
    Map m_;
};

using Decomposition = std::map<KWeight, Int>; // irrep highest weight -> multiplicity

// Exact dimension by the Weyl formula prod_{i<j} (k_i - k_j + j - i)/(j - i).
Int irrep_dim(const KWeight& hw);

// Weights of p+ as a U(n)-representation: {2e_j} and {e_j + e_k}, j<k.
WeightMultiset p_plus_weights(int n);
WeightMultiset p_minus_weights(int n);

// Full character weight multiset of the irreducible with highest weight hw.
WeightMultiset char_weights(const KWeight& hw);

// Inverse character map by greedy peeling of maximal dominant weights.
// Throws std::domain_error if ms is not a genuine character.
Decomposition decompose(WeightMultiset ms);

Decomposition tensor(const KWeight& a, const KWeight& b);

// k-th exterior power of a multiplicity-free weight set.
Decomposition exterior_power(const WeightMultiset& ms, int k);

// Decomposition of wedge^p p+ (x) wedge^q p-.
Decomposition wedge_pq(int n, int p, int q);

Int dim_of(const Decomposition& d);

// Text table of all wedge_pq(n, p, q) with p + q = n(n+1)/2.
std::string ktype_table(int n);

std::string format_weight(const std::vector<long long>& w);

} // namespace gsp
