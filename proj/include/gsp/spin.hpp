#pragma once

#include <array>
#include <complex>
#include <optional>
#include <vector>

namespace gsp {

using Cplx = std::complex<double>;

// Unramified character value at the prime, or absent when ramified.
struct SatakeEntry {
    std::optional<Cplx> value;
    bool ramified() const { return !value.has_value(); }
    static SatakeEntry of(Cplx v) { return {v}; }
    static SatakeEntry ram() { return {}; }
};

struct SatakeDatum {
    long long ell = 0;
    std::array<SatakeEntry, 4> c; // c0, c1, c2, c3
};

// All four character values equal to 1 at the given prime.
SatakeDatum trivial_satake(long long ell);

// Local factor L(pi_ell, Spin, s)^{-1} as a polynomial in X = ell^{-s}:
// prod over subsets S of {1,2,3} of (1 - c0 prod_{i in S} c_i X), a subset
// contributing 1 when c0 or any involved c_i is ramified.
struct EulerFactor {
    long long ell = 0;
    std::vector<Cplx> inverse_poly; // coefficients, constant term first
    int degree() const { return static_cast<int>(inverse_poly.size()) - 1; }
    Cplx eval(Cplx x) const;
};

EulerFactor spin_factor(const SatakeDatum& d);

struct PartialL {
    Cplx value{1.0, 0.0};
    double tail_bound = 0.0; // absolute bound on the missing tail past p_max
    int factors_used = 0;
};

// Product of local Spin factors over the supplied data, ascending prime order.
// Requires Re(s) > 1 + max_i log|c_i| / log(ell) for every unramified entry.
PartialL partial_L(const std::vector<SatakeDatum>& data, Cplx s, long long p_max);

std::vector<long long> primes_up_to(long long n);

} // namespace gsp
