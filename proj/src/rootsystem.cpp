#include "gsp/rootsystem.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gsp {

long long dot(const Weight& a, const Weight& b) {
    long long s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

std::vector<Root> roots(int n) {
    if (n < 1) throw std::invalid_argument("roots: n must be positive");
    std::vector<Root> out;
    out.reserve(static_cast<size_t>(2 * n * n));
    auto push = [&](Weight w, bool compact, bool positive) {
        out.push_back({std::move(w), compact, positive});
    };
    for (int sgn : {1, -1}) {
        for (int j = 0; j < n; ++j) {
            Weight w(n, 0);
            w[j] = 2 * sgn;
            push(std::move(w), false, sgn > 0);
        }
        for (int j = 0; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                Weight w(n, 0);
                w[j] = sgn;
                w[k] = sgn;
                push(std::move(w), false, sgn > 0);
            }
        for (int j = 0; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                Weight w(n, 0);
                w[j] = sgn;
                w[k] = -sgn;
                push(std::move(w), true, sgn > 0);
            }
    }
    return out;
}

Weight rho(int n) {
    if (n < 1) throw std::invalid_argument("rho: n must be positive");
    Weight r(n);
    for (int i = 0; i < n; ++i) r[i] = n - i;
    return r;
}

SignedPerm compose(const SignedPerm& a, const SignedPerm& b) {
    size_t n = a.perm.size();
    if (b.perm.size() != n) throw std::invalid_argument("compose: size mismatch");
    SignedPerm c;
    c.perm.resize(n);
    c.signs.resize(n);
    // (a.b)(x) = a(b(x)): (b x)_i = s^b_i x_{p^b_i}; (a (bx))_i = s^a_i (bx)_{p^a_i}
    for (size_t i = 0; i < n; ++i) {
        c.perm[i] = b.perm[static_cast<size_t>(a.perm[i])];
        c.signs[i] = a.signs[i] * b.signs[static_cast<size_t>(a.perm[i])];
    }
    return c;
}

SignedPerm inverse(const SignedPerm& w) {
    size_t n = w.perm.size();
    SignedPerm v;
    v.perm.resize(n);
    v.signs.resize(n);
    for (size_t i = 0; i < n; ++i) {
        v.perm[static_cast<size_t>(w.perm[i])] = static_cast<int>(i);
        v.signs[static_cast<size_t>(w.perm[i])] = w.signs[i];
    }
    return v;
}

Weight act(const SignedPerm& w, const Weight& x) {
    Weight y(x.size());
    for (size_t i = 0; i < x.size(); ++i) y[i] = w.signs[i] * x[static_cast<size_t>(w.perm[i])];
    return y;
}

namespace {

void require_dominant(const Weight& lambda, int n) {
    if (static_cast<int>(lambda.size()) != n)
        throw std::invalid_argument("lambda has wrong length");
    for (int i = 0; i + 1 < n; ++i)
        if (lambda[i] < lambda[i + 1]) throw std::invalid_argument("lambda is not dominant");
    if (n > 0 && lambda[n - 1] < 0) throw std::invalid_argument("lambda is not dominant");
}

} // namespace

std::vector<CosetRep> coset_reps(int n, const Weight& lambda) {
    require_dominant(lambda, n);
    Weight base = rho(n);
    for (int i = 0; i < n; ++i) base[i] += lambda[i];

    std::vector<unsigned> masks(1u << n);
    std::iota(masks.begin(), masks.end(), 0u);
    std::stable_sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
        int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
        return pa != pb ? pa < pb : a < b;
    });

    std::vector<CosetRep> out;
    out.reserve(masks.size());
    for (unsigned mask : masks) {
        std::vector<std::pair<long long, int>> vals(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            // mask bit 0 = position 1 (most significant flip position first)
            int s = (mask >> (n - 1 - i)) & 1u ? -1 : 1;
            vals[static_cast<size_t>(i)] = {s * base[static_cast<size_t>(i)], i};
        }
        std::sort(vals.begin(), vals.end(),
                  [](const auto& a, const auto& b) { return a.first > b.first; });
        CosetRep r;
        r.flips = __builtin_popcount(mask);
        r.w.perm.resize(static_cast<size_t>(n));
        r.w.signs.resize(static_cast<size_t>(n));
        r.image.resize(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            int src = vals[static_cast<size_t>(i)].second;
            r.image[static_cast<size_t>(i)] = vals[static_cast<size_t>(i)].first;
            r.w.perm[static_cast<size_t>(i)] = src;
            r.w.signs[static_cast<size_t>(i)] = (mask >> (n - 1 - src)) & 1u ? -1 : 1;
        }
        out.push_back(std::move(r));
    }
    return out;
}

HalfSums delta_sums(const Weight& hc_param, int n) {
    if (static_cast<int>(hc_param.size()) != n)
        throw std::invalid_argument("delta_sums: parameter has wrong length");
    HalfSums hs;
    hs.delta_g.assign(static_cast<size_t>(n), Rat(0));
    hs.delta_k.assign(static_cast<size_t>(n), Rat(0));
    for (const Root& r : roots(n)) {
        long long pr = dot(r.wt, hc_param);
        if (pr == 0) throw std::invalid_argument("delta_sums: singular parameter");
        if (pr < 0) continue;
        for (int i = 0; i < n; ++i) {
            Rat half(r.wt[static_cast<size_t>(i)], 2);
            hs.delta_g[static_cast<size_t>(i)] += half;
            if (r.compact) hs.delta_k[static_cast<size_t>(i)] += half;
        }
    }
    return hs;
}

std::vector<DiscreteSeriesDatum> discrete_series_packet(int n, const Weight& lambda) {
    auto reps = coset_reps(n, lambda);
    std::vector<DiscreteSeriesDatum> out;
    out.reserve(reps.size());
    std::vector<Root> all = roots(n);
    for (auto& r : reps) {
        DiscreteSeriesDatum d;
        d.rep = r.w;
        d.hc_param = r.image;
        HalfSums hs = delta_sums(d.hc_param, n);
        d.min_k_type.resize(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            Rat v = Rat(d.hc_param[static_cast<size_t>(i)]) + hs.delta_g[static_cast<size_t>(i)] -
                    2 * hs.delta_k[static_cast<size_t>(i)];
            if (denominator(v) != 1)
                throw std::logic_error("minimal K-type is not integral");
            d.min_k_type[static_cast<size_t>(i)] = static_cast<long long>(numerator(v));
        }
        int p = 0, q = 0;
        for (const Root& a : all) {
            if (a.compact || !a.positive) continue;
            long long pr = dot(a.wt, d.hc_param);
            if (pr > 0) ++p;
            else if (pr < 0) ++q;
        }
        d.hodge = {p, q};
        out.push_back(std::move(d));
    }
    return out;
}

} // namespace gsp
