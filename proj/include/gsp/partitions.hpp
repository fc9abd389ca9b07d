#pragma once

#include <vector>

namespace gsp {

// A partition n = n_1 + ... + n_k (ascending) whose binomial weights
// sum to half the ambient dimension, with the first eps parts pinned to 1.
struct SpecialPartition {
    long long n = 0;
    std::vector<long long> parts; // ascending
    int eps = 0;                  // 1 if n = 0,3 mod 4, else 2

    long long part_count() const { return static_cast<long long>(parts.size()); }
};

// One block GSp*_{2m,F} with [F:Q] = degree.
struct GroupBlock {
    long long m = 0;
    long long degree = 0;
    friend bool operator==(const GroupBlock&, const GroupBlock&) = default;
};

struct EmbeddingDatum {
    SpecialPartition partition;
    std::vector<GroupBlock> groups;
    long long ambient_dim = 0;    // n(n+1)/2
    long long subvariety_dim = 0; // sum_i C(n_i+1, 2)
    long long codim = 0;          // ambient_dim - subvariety_dim
    long long twist = 0;          // eps + codim
    long long hv_exponent = 0;    // 1 - k(n)
};

int epsilon_for(long long n);

// All special partitions of n, lexicographically ascending. May be empty.
std::vector<SpecialPartition> find_special_partitions(long long n);

// n in [2, n_max] admitting no special partition.
std::vector<long long> scan_exceptions(long long n_max);

// Validates p and derives the block structure and embedding invariants.
EmbeddingDatum embedding_datum(const SpecialPartition& p);

// Throws std::invalid_argument when p violates its invariants.
void validate(const SpecialPartition& p);

} // namespace gsp
