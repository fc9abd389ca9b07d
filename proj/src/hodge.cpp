#include "gsp/hodge.hpp"

#include <stdexcept>

namespace gsp {

long long HodgeTable::at(long long p, long long q) const {
    auto it = h.find({p, q});
    return it == h.end() ? 0 : it->second;
}

HodgeTable hodge_weights(int n, const Weight& lambda) {
    if (static_cast<int>(lambda.size()) != n)
        throw std::invalid_argument("hodge_weights: lambda has wrong length");
    for (int i = 0; i + 1 < n; ++i)
        if (lambda[static_cast<size_t>(i)] < lambda[static_cast<size_t>(i + 1)])
            throw std::invalid_argument("hodge_weights: lambda not dominant");
    if (n >= 1 && lambda[static_cast<size_t>(n - 1)] < 0)
        throw std::invalid_argument("hodge_weights: lambda not dominant");
    long long absl = 0;
    for (long long x : lambda) absl += x;
    HodgeTable t;
    t.w = static_cast<long long>(n) * (n + 1) / 2 - absl;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        long long p = 0;
        for (int i = 0; i < n; ++i) {
            if (mask & (1u << i)) p -= lambda[static_cast<size_t>(i)];
            else p += n - i; // n - (i+1) + 1
        }
        ++t.h[{p, t.w - p}];
    }
    return t;
}

long long gamma_pole_order(const HodgeTable& t, long long m) {
    bool even = t.w % 2 == 0;
    if (even && !t.diag_split)
        throw std::invalid_argument("gamma_pole_order: diag_split required for even weight");
    long long total = 0;
    for (auto& [pq, hv] : t.h) {
        auto [p, q] = pq;
        if (m <= p && p < q) total += hv;
    }
    if (even && m <= t.w / 2) {
        bool plus = ((m - t.w / 2) % 2) == 0;
        total += plus ? t.diag_split->first : t.diag_split->second;
    }
    return total;
}

SpecialPole orderpole_special(const HodgeTable& t, int n) {
    if (n < 2) throw std::invalid_argument("orderpole_special: n must be >= 2");
    SpecialPole sp;
    long long r = n % 4;
    if (r == 0 || r == 3) {
        sp.branch = 1;
        if (t.w % 2 != 0) throw std::invalid_argument("orderpole_special: odd weight on even branch");
        if (!t.diag_split) throw std::invalid_argument("orderpole_special: diag_split required");
        sp.m0 = t.w / 2;
        sp.order = t.diag_split->first;
    } else {
        sp.branch = 2;
        if (t.w % 2 == 0) throw std::invalid_argument("orderpole_special: even weight on odd branch");
        sp.m0 = (t.w - 1) / 2;
        sp.order = t.at(sp.m0, sp.m0 + 1);
    }
    if (sp.order != gamma_pole_order(t, sp.m0))
        throw std::logic_error("orderpole_special disagrees with gamma_pole_order");
    return sp;
}

long long deligne_dim(long long ord_m, long long ord_m_plus_1, long long m, long long w) {
    if (2 * m > w) throw std::invalid_argument("deligne_dim: requires m <= w/2");
    if (2 * m == w) return ord_m - ord_m_plus_1;
    return ord_m;
}

} // namespace gsp
