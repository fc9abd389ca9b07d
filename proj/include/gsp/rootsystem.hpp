#pragma once

#include "gsp/rational.hpp"

#include <utility>
#include <vector>

namespace gsp {

using Weight = std::vector<long long>; // coordinates in the basis dual to the torus generators

struct Root {
    Weight wt;
    bool compact = false;  // wt = +-(e_j - e_k)
    bool positive = false; // 2e_j, e_j+e_k, e_j-e_k with j<k
};

// All 2n^2 roots of sp(2n): +-2e_j, +-(e_j+e_k), +-(e_j-e_k).
std::vector<Root> roots(int n);

// Half-sum of the standard positive roots: (n, n-1, ..., 1).
Weight rho(int n);

// Element of {+-1}^n x S_n. Acts on weights by (w.x)_i = signs[i] * x[perm[i]].
struct SignedPerm {
    std::vector<int> perm;  // 0-based
    std::vector<int> signs; // +-1
};

SignedPerm compose(const SignedPerm& a, const SignedPerm& b); // a after b
SignedPerm inverse(const SignedPerm& w);
Weight act(const SignedPerm& w, const Weight& x);

struct CosetRep {
    SignedPerm w;
    Weight image;          // w(lambda + rho), strictly decreasing
    int flips = 0;         // number of -1 signs
};

// 2^n coset representatives making w(lambda+rho) dominant for U(n); ordered by
// increasing flip count, ties by the flip mask read as a binary number.
std::vector<CosetRep> coset_reps(int n, const Weight& lambda);

struct HalfSums {
    std::vector<Rat> delta_g; // half-sum of roots positive on the chamber of the parameter
    std::vector<Rat> delta_k; // compact part
};

// Requires <hc_param, alpha> != 0 for every root.
HalfSums delta_sums(const Weight& hc_param, int n);

struct DiscreteSeriesDatum {
    SignedPerm rep;
    Weight hc_param;   // strictly decreasing
    Weight min_k_type; // hc_param + delta_g - 2 delta_k
    std::pair<int, int> hodge;
};

std::vector<DiscreteSeriesDatum> discrete_series_packet(int n, const Weight& lambda);

long long dot(const Weight& a, const Weight& b);

} // namespace gsp
