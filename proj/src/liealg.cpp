#include "gsp/liealg.hpp"

#include <algorithm>
#include <stdexcept>

namespace gsp {

bool LieMatrix::is_zero() const {
    for (auto& c : a_)
        if (!c.is_zero()) return false;
    return true;
}

bool LieMatrix::in_symplectic_algebra() const {
    // blocks [[A, B], [C, D]]: need C = tC, B = tB, D = -tA
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            if (at(i, j + n_) != at(j, i + n_)) return false;
            if (at(i + n_, j) != at(j + n_, i)) return false;
            if (at(i + n_, j + n_) != -at(j, i)) return false;
        }
    return true;
}

LieMatrix operator*(const LieMatrix& a, const LieMatrix& b) {
    int m = 2 * a.n_;
    LieMatrix c(a.n_);
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < m; ++k) {
            const GaussianRat& x = a.at(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < m; ++j) {
                const GaussianRat& y = b.at(k, j);
                if (!y.is_zero()) c.at(i, j) += x * y;
            }
        }
    return c;
}

LieMatrix operator-(const LieMatrix& a, const LieMatrix& b) {
    LieMatrix c(a.n_);
    for (size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = a.a_[i] - b.a_[i];
    return c;
}

LieMatrix operator*(const GaussianRat& s, const LieMatrix& a) {
    LieMatrix c(a.n_);
    for (size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = s * a.a_[i];
    return c;
}

LieMatrix bracket(const LieMatrix& a, const LieMatrix& b) {
    if (a.n() != b.n()) throw std::invalid_argument("bracket: size mismatch");
    return a * b - b * a;
}

LieMatrix root_vector(const Weight& root, int n) {
    if (static_cast<int>(root.size()) != n) throw std::invalid_argument("root has wrong length");
    LieMatrix X(n);
    std::vector<std::pair<int, long long>> nz;
    for (int i = 0; i < n; ++i)
        if (root[static_cast<size_t>(i)] != 0) nz.push_back({i, root[static_cast<size_t>(i)]});
    const GaussianRat one(1), iu = GaussianRat::i();
    if (nz.size() == 1 && (nz[0].second == 2 || nz[0].second == -2)) {
        // X_{±2e_j}: [[D_j, ±i D_j], [±i D_j, -D_j]]
        int j = nz[0].first;
        GaussianRat si = nz[0].second > 0 ? iu : -iu;
        X.at(j, j) = one;
        X.at(j, j + n) = si;
        X.at(j + n, j) = si;
        X.at(j + n, j + n) = -one;
        return X;
    }
    if (nz.size() == 2) {
        auto [j, cj] = nz[0];
        auto [k, ck] = nz[1];
        if (cj == ck && (cj == 1 || cj == -1)) {
            // X_{±(e_j+e_k)}: [[E, ±iE], [±iE, -E]]
            GaussianRat si = cj > 0 ? iu : -iu;
            for (auto [r, c] : {std::pair{j, k}, std::pair{k, j}}) {
                X.at(r, c) = one;
                X.at(r, c + n) = si;
                X.at(r + n, c) = si;
                X.at(r + n, c + n) = -one;
            }
            return X;
        }
        if (cj == -ck && (cj == 1 || cj == -1)) {
            // X_{±(e_j-e_k)}: [[±F, -iE], [iE, ±F]] with F antisymmetric
            GaussianRat s(cj);
            X.at(j, k) = s;
            X.at(k, j) = -s;
            X.at(j + n, k + n) = s;
            X.at(k + n, j + n) = -s;
            for (auto [r, c] : {std::pair{j, k}, std::pair{k, j}}) {
                X.at(r, c + n) = -iu;
                X.at(r + n, c) = iu;
            }
            return X;
        }
    }
    throw std::invalid_argument("root_vector: not a root of sp(2n)");
}

LieMatrix torus_generator(int j, int n) {
    if (j < 1 || j > n) throw std::invalid_argument("torus_generator: index out of range");
    LieMatrix T(n);
    T.at(j - 1, j - 1 + n) = -GaussianRat::i();
    T.at(j - 1 + n, j - 1) = GaussianRat::i();
    return T;
}

std::vector<Weight> noncompact_positive_order(int n) {
    std::vector<Weight> out;
    for (int j = 0; j < n; ++j) {
        Weight w(static_cast<size_t>(n), 0);
        w[static_cast<size_t>(j)] = 2;
        out.push_back(std::move(w));
    }
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
            Weight w(static_cast<size_t>(n), 0);
            w[static_cast<size_t>(j)] = 1;
            w[static_cast<size_t>(k)] = 1;
            out.push_back(std::move(w));
        }
    return out;
}

void WedgeTensor::add(Key k, const GaussianRat& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

namespace {

// sorts idx ascending; returns parity sign, or 0 on a repeated index
int sort_parity(std::vector<int>& idx) {
    int sign = 1;
    for (size_t i = 0; i < idx.size(); ++i)
        for (size_t j = i + 1; j < idx.size(); ++j) {
            if (idx[i] == idx[j]) return 0;
            if (idx[i] > idx[j]) {
                std::swap(idx[i], idx[j]);
                sign = -sign;
            }
        }
    return sign;
}

std::uint32_t mask_of(const std::vector<int>& sorted_idx) {
    std::uint32_t m = 0;
    for (int i : sorted_idx) m |= (1u << i);
    return m;
}

std::vector<int> idx_of(std::uint32_t mask) {
    std::vector<int> v;
    for (int i = 0; i < 32; ++i)
        if (mask & (1u << i)) v.push_back(i);
    return v;
}

} // namespace

WedgeTensor WedgeTensor::monomial(int n, const std::vector<int>& plus_idx,
                                  const std::vector<int>& minus_idx, const GaussianRat& c) {
    WedgeTensor t(n, static_cast<int>(plus_idx.size()), static_cast<int>(minus_idx.size()));
    std::vector<int> p = plus_idx, m = minus_idx;
    int sp = sort_parity(p), sm = sort_parity(m);
    if (sp == 0 || sm == 0) return t; // repeated slot: zero
    GaussianRat coef = GaussianRat(sp * sm) * c;
    t.add({mask_of(p), mask_of(m)}, coef);
    return t;
}

WedgeTensor operator+(const WedgeTensor& a, const WedgeTensor& b) {
    if (a.n_ != b.n_ || a.p_ != b.p_ || a.q_ != b.q_)
        throw std::invalid_argument("wedge tensor shape mismatch");
    WedgeTensor c = a;
    for (auto& [k, v] : b.terms_) c.add(k, v);
    return c;
}

WedgeTensor operator*(const GaussianRat& s, const WedgeTensor& a) {
    WedgeTensor c(a.n_, a.p_, a.q_);
    if (s.is_zero()) return c;
    for (auto& [k, v] : a.terms_) c.terms_.emplace(k, s * v);
    return c;
}

bool operator==(const WedgeTensor& a, const WedgeTensor& b) {
    return a.n_ == b.n_ && a.p_ == b.p_ && a.q_ == b.q_ && a.terms_ == b.terms_;
}

std::optional<GaussianRat> WedgeTensor::scalar_ratio_to(const WedgeTensor& other) const {
    if (other.terms_.empty()) return std::nullopt;
    const auto& [k0, c0] = *other.terms_.begin();
    auto it = terms_.find(k0);
    if (it == terms_.end()) return is_zero() ? std::optional<GaussianRat>(GaussianRat(0)) : std::nullopt;
    GaussianRat ratio = it->second / c0;
    WedgeTensor scaled = ratio * other;
    if (scaled == *this) return ratio;
    return std::nullopt;
}

namespace {

struct AdTable {
    // per basis index: target index and coefficient, or absent for zero
    std::vector<std::optional<std::pair<int, GaussianRat>>> plus, minus;
};

AdTable build_ad_table(const LieMatrix& x, int n) {
    auto order = noncompact_positive_order(n);
    std::vector<LieMatrix> bp, bm;
    for (auto& r : order) {
        bp.push_back(root_vector(r, n));
        Weight neg(r.size());
        for (size_t i = 0; i < r.size(); ++i) neg[i] = -r[i];
        bm.push_back(root_vector(neg, n));
    }
    auto solve = [&](const LieMatrix& M, const std::vector<LieMatrix>& basis)
        -> std::optional<std::pair<int, GaussianRat>> {
        if (M.is_zero()) return std::nullopt;
        for (int t = 0; t < static_cast<int>(basis.size()); ++t) {
            const LieMatrix& B = basis[static_cast<size_t>(t)];
            GaussianRat c;
            bool found = false;
            for (int i = 0; i < 2 * n && !found; ++i)
                for (int j = 0; j < 2 * n && !found; ++j)
                    if (!B.at(i, j).is_zero()) {
                        c = M.at(i, j) / B.at(i, j);
                        found = true;
                    }
            if (!found || c.is_zero()) continue;
            if (c * B == M) return std::make_pair(t, c);
        }
        throw std::domain_error("ad_wedge: bracket left the noncompact root span");
    };
    AdTable tab;
    for (size_t i = 0; i < bp.size(); ++i) tab.plus.push_back(solve(bracket(x, bp[i]), bp));
    for (size_t i = 0; i < bm.size(); ++i) tab.minus.push_back(solve(bracket(x, bm[i]), bm));
    return tab;
}

} // namespace

WedgeTensor ad_wedge(const LieMatrix& x, const WedgeTensor& t) {
    int n = t.n();
    AdTable tab = build_ad_table(x, n);
    WedgeTensor out(n, t.p(), t.q());
    for (auto& [key, coef] : t.terms()) {
        auto pidx = idx_of(key.first);
        auto midx = idx_of(key.second);
        for (size_t s = 0; s < pidx.size(); ++s) {
            auto& act = tab.plus[static_cast<size_t>(pidx[s])];
            if (!act) continue;
            std::vector<int> np = pidx;
            np[s] = act->first;
            int sg = sort_parity(np);
            if (sg == 0) continue;
            out.add({mask_of(np), key.second}, GaussianRat(sg) * act->second * coef);
        }
        for (size_t s = 0; s < midx.size(); ++s) {
            auto& act = tab.minus[static_cast<size_t>(midx[s])];
            if (!act) continue;
            std::vector<int> nm = midx;
            nm[s] = act->first;
            int sg = sort_parity(nm);
            if (sg == 0) continue;
            out.add({key.first, mask_of(nm)}, GaussianRat(sg) * act->second * coef);
        }
    }
    return out;
}

std::optional<Weight> weight_of(const WedgeTensor& t) {
    if (t.is_zero()) return std::nullopt;
    auto order = noncompact_positive_order(t.n());
    std::optional<Weight> common;
    for (auto& [key, coef] : t.terms()) {
        Weight w(static_cast<size_t>(t.n()), 0);
        for (int i : idx_of(key.first))
            for (size_t j = 0; j < w.size(); ++j) w[j] += order[static_cast<size_t>(i)][j];
        for (int i : idx_of(key.second))
            for (size_t j = 0; j < w.size(); ++j) w[j] -= order[static_cast<size_t>(i)][j];
        if (!common) common = w;
        else if (*common != w) return std::nullopt;
    }
    return common;
}

bool is_highest_weight(const WedgeTensor& t) {
    int n = t.n();
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
            Weight r(static_cast<size_t>(n), 0);
            r[static_cast<size_t>(j)] = 1;
            r[static_cast<size_t>(k)] = -1;
            if (!ad_wedge(root_vector(r, n), t).is_zero()) return false;
        }
    return true;
}

WedgeTensor x0() {
    return WedgeTensor::monomial(3, {0, 1, 2}, {0, 1, 2}, GaussianRat(1));
}

WedgeTensor hw_vector_22m4() {
    // plus slots: 2e1, 2e2, e1+e2 -> 0, 1, 3
    // minus slots: -(e1+e3), -(e2+e3), -2e3 -> 4, 5, 2
    return WedgeTensor::monomial(3, {0, 1, 3}, {4, 5, 2}, GaussianRat(1));
}

WedgeTensor hw_vector_4m2m2() {
    // plus slots: 2e1, e1+e2, e1+e3 -> 0, 3, 4
    // minus slots: -(e2+e3), -2e2, -2e3 -> 5, 1, 2
    return WedgeTensor::monomial(3, {0, 3, 4}, {5, 1, 2}, GaussianRat(1));
}

namespace {

LieMatrix compact_vec(int j, int k, int n) { // X_{e_j - e_k}, 1-based
    Weight r(static_cast<size_t>(n), 0);
    r[static_cast<size_t>(j - 1)] = 1;
    r[static_cast<size_t>(k - 1)] = -1;
    return root_vector(r, n);
}

WedgeTensor apply_chain(const std::vector<const LieMatrix*>& ops, WedgeTensor t) {
    for (const LieMatrix* x : ops) t = ad_wedge(*x, t);
    return t;
}

Rat real_scalar(const WedgeTensor& got, const WedgeTensor& target, const char* what) {
    auto r = got.scalar_ratio_to(target);
    if (!r || !r->is_real())
        throw std::domain_error(std::string("projection identity is not a scalar multiple: ") + what);
    return r->re;
}

GaussianRat herm_dot(const LieMatrix& a, const LieMatrix& b) {
    GaussianRat s;
    for (int i = 0; i < 2 * a.n(); ++i)
        for (int j = 0; j < 2 * a.n(); ++j) s += a.at(i, j) * b.at(i, j).conj();
    return s;
}

GaussianRat det3(const std::vector<std::vector<GaussianRat>>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// K-invariant Hermitian pairing on wedge^3 p+ (x) wedge^3 p-, conjugate-linear
// in the second argument.
GaussianRat herm_pair(const WedgeTensor& s, const WedgeTensor& t) {
    int n = s.n();
    auto order = noncompact_positive_order(n);
    std::vector<LieMatrix> bp, bm;
    for (auto& r : order) {
        bp.push_back(root_vector(r, n));
        Weight neg(r.size());
        for (size_t i = 0; i < r.size(); ++i) neg[i] = -r[i];
        bm.push_back(root_vector(neg, n));
    }
    auto gram = [&](const std::vector<LieMatrix>& basis) {
        std::vector<std::vector<GaussianRat>> g(basis.size(),
                                                std::vector<GaussianRat>(basis.size()));
        for (size_t i = 0; i < basis.size(); ++i)
            for (size_t j = 0; j < basis.size(); ++j) g[i][j] = herm_dot(basis[i], basis[j]);
        return g;
    };
    auto gp = gram(bp), gm = gram(bm);
    GaussianRat acc;
    for (auto& [k1, c1] : s.terms())
        for (auto& [k2, c2] : t.terms()) {
            auto p1 = idx_of(k1.first), p2 = idx_of(k2.first);
            auto m1 = idx_of(k1.second), m2 = idx_of(k2.second);
            std::vector<std::vector<GaussianRat>> a(3, std::vector<GaussianRat>(3)),
                b(3, std::vector<GaussianRat>(3));
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) {
                    a[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                        gp[static_cast<size_t>(p1[static_cast<size_t>(i)])]
                          [static_cast<size_t>(p2[static_cast<size_t>(j)])];
                    b[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                        gm[static_cast<size_t>(m1[static_cast<size_t>(i)])]
                          [static_cast<size_t>(m2[static_cast<size_t>(j)])];
                }
            acc += c1 * c2.conj() * det3(a) * det3(b);
        }
    return acc;
}

} // namespace

ProjectionCertificate certify_projection() {
    const int n = 3;
    LieMatrix e13 = compact_vec(1, 3, n), e23 = compact_vec(2, 3, n);
    LieMatrix e31 = compact_vec(3, 1, n), e32 = compact_vec(3, 2, n);
    LieMatrix e12 = compact_vec(1, 2, n), e21 = compact_vec(2, 1, n);

    WedgeTensor X0 = x0();
    WedgeTensor X224 = hw_vector_22m4();
    WedgeTensor X422 = hw_vector_4m2m2();

    ProjectionCertificate cert;
    cert.hw_22m4 = is_highest_weight(X224);
    cert.hw_4m2m2 = is_highest_weight(X422);

    // raising pair (commuting): [Ad_{e1-e3} Ad_{e2-e3}]^2 X0
    WedgeTensor raised = apply_chain({&e23, &e13, &e23, &e13}, X0);
    cert.scalar_raise = real_scalar(raised, X224, "raise to (2,2,-4)");

    // square of the full cycle C = Ad_{e1-e3} Ad_{e2-e3} Ad_{e3-e2} Ad_{e3-e1}
    std::vector<const LieMatrix*> cycle = {&e31, &e32, &e23, &e13};
    WedgeTensor round_trip = apply_chain(cycle, apply_chain(cycle, X224));
    cert.scalar_round_trip = real_scalar(round_trip, X224, "round trip on (2,2,-4)");

    cert.alpha = cert.scalar_raise / cert.scalar_round_trip;

    // iterated-squares chain ad^2_{e1-e3} ad^2_{e2-e3} ad^2_{e3-e2} ad^2_{e3-e1}
    WedgeTensor iter = apply_chain({&e31, &e31, &e32, &e32, &e23, &e23, &e13, &e13}, X224);
    cert.iterated_square_round_trip = real_scalar(iter, X224, "iterated-square round trip");

    // mirror path to tau_(4,-2,-2)
    WedgeTensor raised_m = apply_chain({&e12, &e13, &e12, &e13}, X0);
    Rat sraise_m = real_scalar(raised_m, X422, "raise to (4,-2,-2)");
    std::vector<const LieMatrix*> cycle_m = {&e31, &e21, &e12, &e13};
    WedgeTensor round_m = apply_chain(cycle_m, apply_chain(cycle_m, X422));
    Rat sround_m = real_scalar(round_m, X422, "round trip on (4,-2,-2)");
    cert.alpha_mirror = sraise_m / sround_m;

    // independent invariant-form projection coefficient onto the weight-zero
    // line spanned by x = [Ad_{e3-e2} Ad_{e3-e1}]^2 X_{(2,2,-4)}
    WedgeTensor xvec = apply_chain({&e31, &e31, &e32, &e32}, X224);
    GaussianRat num = herm_pair(X0, xvec);
    GaussianRat den = herm_pair(xvec, xvec);
    GaussianRat ga = num / den;
    if (!ga.is_real()) throw std::domain_error("invariant-form coefficient is not real");
    cert.gram_alpha = ga.re;

    return cert;
}

} // namespace gsp
