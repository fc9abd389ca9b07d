#pragma once

#include "gsp/rootsystem.hpp"

#include <map>
#include <optional>
#include <utility>

namespace gsp {

struct HodgeTable {
    long long w = 0; // pure weight
    std::map<std::pair<long long, long long>, long long> h; // (p, q) -> h^{p,q}
    // (h^{w/2,+}, h^{w/2,-}) when w is even; caller-supplied
    std::optional<std::pair<long long, long long>> diag_split;

    long long at(long long p, long long q) const;
};

// Subset-count initialization: w = n(n+1)/2 - |lambda|, and p runs over
// sum_{i not in B} (n - i + 1) - sum_{i in B} lambda_i for all B in {1..n}.
// diag_split is left unset.
HodgeTable hodge_weights(int n, const Weight& lambda);

// Pole order of the Gamma-factor at s = m:
//   sum_{m <= p < q} h^{p,q} + [w even, m <= w/2] h^{w/2, sign (-1)^{m-w/2}}.
// Requires diag_split when w is even.
long long gamma_pole_order(const HodgeTable& t, long long m);

struct SpecialPole {
    long long m0 = 0;
    long long order = 0;
    int branch = 0; // epsilon branch the formula used (1 or 2)
};

// The distinguished pole: order h^{w/2,+} at m0 = w/2 when n = 0,3 mod 4,
// order h^{(w-1)/2,(w+1)/2} at m0 = (w-1)/2 when n = 1,2 mod 4.
// Cross-checked against gamma_pole_order; mismatch is a hard error.
SpecialPole orderpole_special(const HodgeTable& t, int n);

// ord_m when m < w/2; ord_m - ord_{m+1} when m = w/2. Requires m <= w/2.
long long deligne_dim(long long ord_m, long long ord_m_plus_1, long long m, long long w);

} // namespace gsp
