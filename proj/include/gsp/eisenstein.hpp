#pragma once

#include <complex>

namespace gsp {

struct UpperHalfPoint {
    double x = 0.0;
    double y = 1.0; // > 0
};

// char((a,b) + N Z^2) with (a,b) != (0,0) mod N; N >= 3.
struct SchwartzDatum {
    int N = 5;
    int a = 0;
    int b = 1;
};

void validate(const UpperHalfPoint& z);
void validate(const SchwartzDatum& phi);

struct PrecisionSpec {
    int q_terms = 0;         // 0 = choose automatically
    int lattice_bound = 0;   // 0 = choose automatically
    double target_abs_error = 1e-10;
};

// log |g_{a,b}(z)| for the Siegel unit
//   g_{a,b} = q^{B2(a)/2} prod_{n>=0} (1 - q^{n+a} e^{2 pi i b})
//                         prod_{n>=1} (1 - q^{n-a} e^{-2 pi i b}),
// B2(t) = t^2 - t + 1/6, with a, b in [0,1), (a,b) != (0,0).
double siegel_unit_log_abs(double a, double b, const UpperHalfPoint& z,
                           const PrecisionSpec& prec = {});

// phi(N) * sum over units b mod N of log |g_{0, b r_d / N}(z)|, r_d = d^{-1} mod N.
// Requires N >= 4 and gcd(d, N) = 1.
double u_log(int N, const UpperHalfPoint& z, long long d, const PrecisionSpec& prec = {});

struct EisResult {
    double value = 0.0;
    double abs_error_bound = 0.0;
};

// Value of the completed adelic Eisenstein series attached to the Schwartz
// function char((0,1)+N Z^2) with Gaussian archimedean component, evaluated at
// g_z, normalized so that the s = 0 value is the log-absolute-value of the
// level-N Siegel-unit product (see docs/eisenstein.md for the derivation):
//
//   E(N, z, s) = -(phi(N)/2) [ sum'_{N|m, gcd(n,N)=1} G(s, pi Q(m,n))
//                            + sum'_{(a,b)} (c_N(b)/N^2) Gd(s, pi Q*(a/N,b/N))
//                            + (phi(N)/N^2) / (s-1) ],
//   Q(m,n) = |mz+n|^2/y,  Q*(u1,u2) = |u2 z - u1|^2/y,
//   G(s,x) = x^{-s} Gamma(s,x),  Gd(s,x) = x^{s-1} Gamma(1-s,x).
//
// Throws std::domain_error near the continuation pole s = 1.
EisResult eisenstein_value(int N, const UpperHalfPoint& z, double s,
                           const PrecisionSpec& prec = {});

struct CorodlogResult {
    double dlog_side = 0.0; // 2 Re(2iy d/dz log u(z)) with u the Siegel-unit product
    double eis_side = 0.0;  // E(g_z, Phi', 0) for Phi'_infty = -4 pi (x^2-y^2) e^{-pi(x^2+y^2)}
    double residual = 0.0;
};

// Numerical check of the logarithmic-derivative identity; both sides are
// evaluated by independent series (q-expansion vs incomplete-gamma lattice).
CorodlogResult corodlog_check(int N, const UpperHalfPoint& z, const PrecisionSpec& prec = {});

// Upper incomplete gamma for real order (recurrence below 0). Exposed for tests.
double upper_gamma(double a, double x);

} // namespace gsp
