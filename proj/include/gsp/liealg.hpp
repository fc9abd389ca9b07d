#pragma once

#include "gsp/rational.hpp"
#include "gsp/rootsystem.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace gsp {

// Dense (2n)x(2n) matrix over the Gaussian rationals.
class LieMatrix {
public:
    LieMatrix() = default;
    explicit LieMatrix(int n) : n_(n), a_(static_cast<size_t>(4 * n * n)) {}

    int n() const { return n_; }
    GaussianRat& at(int i, int j) { return a_[static_cast<size_t>(i * 2 * n_ + j)]; }
    const GaussianRat& at(int i, int j) const { return a_[static_cast<size_t>(i * 2 * n_ + j)]; }

    bool is_zero() const;
    // tX J + J X = 0 with J = [[0, I], [-I, 0]]
    bool in_symplectic_algebra() const;

    friend LieMatrix operator*(const LieMatrix& a, const LieMatrix& b);
    friend LieMatrix operator-(const LieMatrix& a, const LieMatrix& b);
    friend LieMatrix operator*(const GaussianRat& s, const LieMatrix& a);
    friend bool operator==(const LieMatrix& a, const LieMatrix& b) {
        return a.n_ == b.n_ && a.a_ == b.a_;
    }

private:
    int n_ = 0;
    std::vector<GaussianRat> a_;
};

// The exact root-space generator for a root of sp(2n).
LieMatrix root_vector(const Weight& root, int n);

// Torus generator dual to the j-th coordinate (1-based j in [1, n]).
LieMatrix torus_generator(int j, int n);

LieMatrix bracket(const LieMatrix& a, const LieMatrix& b);

// Canonical noncompact positive root order: 2e_1 < ... < 2e_n < e_1+e_2 < e_1+e_3 < ...
std::vector<Weight> noncompact_positive_order(int n);

// Exact element of wedge^p p+ (x) wedge^q p-. Slot subsets are stored as
// bitmasks over the canonical root order (the mirrored list for the minus side).
class WedgeTensor {
public:
    using Key = std::pair<std::uint32_t, std::uint32_t>;

    WedgeTensor() = default;
    WedgeTensor(int n, int p, int q) : n_(n), p_(p), q_(q) {}

    int n() const { return n_; }
    int p() const { return p_; }
    int q() const { return q_; }
    const std::map<Key, GaussianRat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(Key k, const GaussianRat& c);

    // c * (wedge of plus_idx roots) (x) (wedge of minus_idx roots), with signs
    // from sorting the given slot order into the canonical one.
    static WedgeTensor monomial(int n, const std::vector<int>& plus_idx,
                                const std::vector<int>& minus_idx, const GaussianRat& c);

    friend WedgeTensor operator+(const WedgeTensor& a, const WedgeTensor& b);
    friend WedgeTensor operator*(const GaussianRat& s, const WedgeTensor& a);
    friend bool operator==(const WedgeTensor& a, const WedgeTensor& b);

    // t == c * other for a single scalar c
    std::optional<GaussianRat> scalar_ratio_to(const WedgeTensor& other) const;

private:
    int n_ = 0, p_ = 0, q_ = 0;
    std::map<Key, GaussianRat> terms_;
};

// Derivation action of a compact (or torus) element on a wedge tensor.
// Throws std::domain_error if a slot bracket leaves the noncompact root span.
WedgeTensor ad_wedge(const LieMatrix& x, const WedgeTensor& t);

// Common total weight of all terms, if one exists.
std::optional<Weight> weight_of(const WedgeTensor& t);

// true iff ad by every raising compact root vector X_{e_j - e_k}, j<k, kills t.
bool is_highest_weight(const WedgeTensor& t);

// X0 = (X_{2e_1} ^ X_{2e_2} ^ X_{2e_3}) (x) (X_{-2e_1} ^ X_{-2e_2} ^ X_{-2e_3}).
WedgeTensor x0();

// Highest weight vectors of the two self-dual-weight components of
// wedge^3 p+ (x) wedge^3 p- for n = 3.
WedgeTensor hw_vector_22m4(); // tau_(2,2,-4)
WedgeTensor hw_vector_4m2m2(); // tau_(4,-2,-2)

struct ProjectionCertificate {
    Rat scalar_raise;       // [Ad_{e1-e3} Ad_{e2-e3}]^2 X0 = scalar * X_{(2,2,-4)}
    Rat scalar_round_trip;  // C^2 X_{(2,2,-4)} = scalar * X_{(2,2,-4)}, C the full lowering-raising cycle
    Rat alpha;              // scalar_raise / scalar_round_trip
    Rat alpha_mirror;       // same quotient along the conjugate path to tau_(4,-2,-2)
    Rat iterated_square_round_trip; // ad^2 ad^2 ad^2 ad^2 chain value (differs from C^2)
    Rat gram_alpha;         // <X0, x>/<x, x> under the invariant Hermitian form
    bool hw_22m4 = false;
    bool hw_4m2m2 = false;
};

// Certifies the projection identities by exact matrix-level adjoint actions.
// Throws std::domain_error if an identity fails to be a scalar multiple.
ProjectionCertificate certify_projection();

} // namespace gsp
