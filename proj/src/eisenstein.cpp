#include "gsp/eisenstein.hpp"

#include <boost/math/special_functions/expint.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace gsp {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

long long totient(long long n) {
    long long r = n, m = n;
    for (long long p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        while (m % p == 0) m /= p;
        r -= r / p;
    }
    if (m > 1) r -= r / m;
    return r;
}

int moebius(long long n) {
    int cnt = 0;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        ++cnt;
    }
    if (n > 1) ++cnt;
    return cnt % 2 ? -1 : 1;
}

// Ramanujan sum c_N(b) = sum over d | gcd(b, N) of d mu(N/d)
long long ramanujan(long long N, long long b) {
    long long g = std::gcd(((b % N) + N) % N, N);
    if (g == 0) g = N;
    long long s = 0;
    for (long long d = 1; d <= g; ++d)
        if (g % d == 0) s += d * moebius(N / d);
    return s;
}

} // namespace

void validate(const UpperHalfPoint& z) {
    if (!(z.y > 0.0)) throw std::invalid_argument("point must lie in the upper half plane");
}

void validate(const SchwartzDatum& phi) {
    if (phi.N < 3) throw std::invalid_argument("level must be at least 3");
    if (phi.a % phi.N == 0 && phi.b % phi.N == 0)
        throw std::invalid_argument("coset (0,0) is excluded");
}

double upper_gamma(double a, double x) {
    if (!(x > 0.0)) throw std::domain_error("upper_gamma: x must be positive");
    if (a > 0.0) return boost::math::tgamma(a, x);
    if (a == 0.0) return boost::math::expint(1, x);
    // Gamma(a, x) = (Gamma(a+1, x) - x^a e^{-x}) / a
    return (upper_gamma(a + 1.0, x) - std::pow(x, a) * std::exp(-x)) / a;
}

namespace {

struct LatticeSums {
    double plain = 0.0;      // sum c(v) x^{-s} Gamma(s, x), x = pi Q
    double plain_dual = 0.0; // sum d(u) x^{s-1} Gamma(1-s, x), x = pi Q*
    double weighted = 0.0;      // sum c(v) P e^{-x}/x / pi ... see caller
    double weighted_dual = 0.0; // sum d(u) Phat (1+x) e^{-x} / x^2 * pi ...
    long long terms = 0;
};

// Accumulates the primal (m = N M, gcd(n,N)=1) and dual ((a,b)/N with
// Ramanujan coefficients) Gaussian-lattice sums; cut at pi Q > T.
LatticeSums accumulate(int N, const UpperHalfPoint& z, double s, double T, bool weighted) {
    const double x0 = z.x, y0 = z.y;
    LatticeSums out;
    // primal: Q = ((m x + n)^2 + (m y)^2)/y
    long long mmax = static_cast<long long>(std::sqrt(T * y0 / kPi) / (N * y0)) + 1;
    double nspan = std::sqrt(T * y0 / kPi) + 1.0;
    for (long long M = -mmax; M <= mmax; ++M) {
        long long m = N * M;
        long long nc = static_cast<long long>(std::llround(-m * x0));
        long long nlo = nc - static_cast<long long>(nspan) - 1;
        long long nhi = nc + static_cast<long long>(nspan) + 1;
        for (long long n = nlo; n <= nhi; ++n) {
            if (m == 0 && n == 0) continue;
            if (std::gcd((n % N + N) % N, static_cast<long long>(N)) != 1) continue;
            double t1 = m * x0 + n;
            double Q = (t1 * t1 + static_cast<double>(m) * m * y0 * y0) / y0;
            double xx = kPi * Q;
            if (xx > T) continue;
            if (weighted) {
                double P = static_cast<double>(m) * m * y0 - t1 * t1 / y0;
                out.weighted += P * std::exp(-xx) / xx;
            } else {
                out.plain += std::pow(xx, -s) * upper_gamma(s, xx);
            }
            ++out.terms;
        }
    }
    // dual: u = (a/N, b/N), Q* = ((a/N - (b/N)x)^2 + (b/N)^2 y^2)/y
    long long bmax = static_cast<long long>(N * std::sqrt(T * y0 / kPi) / y0) + 1;
    double aspan = N * std::sqrt(T * y0 / kPi) + 1.0;
    for (long long b = -bmax; b <= bmax; ++b) {
        long long cb = ramanujan(N, b);
        if (cb == 0) continue;
        double ac = b * x0;
        long long alo = static_cast<long long>(std::llround(ac)) - static_cast<long long>(aspan) - 1;
        long long ahi = static_cast<long long>(std::llround(ac)) + static_cast<long long>(aspan) + 1;
        for (long long a = alo; a <= ahi; ++a) {
            if (a == 0 && b == 0) continue;
            double u1 = static_cast<double>(a) / N, u2 = static_cast<double>(b) / N;
            double t1 = u1 - u2 * x0;
            double Qs = (t1 * t1 + u2 * u2 * y0 * y0) / y0;
            double xx = kPi * Qs;
            if (xx > T) continue;
            double du = static_cast<double>(cb) / (static_cast<double>(N) * N);
            if (weighted) {
                double Ph = t1 * t1 / y0 - u2 * u2 * y0;
                out.weighted_dual += du * Ph * (1.0 + xx) * std::exp(-xx) / (xx * xx);
            } else {
                out.plain_dual += du * std::pow(xx, s - 1.0) * upper_gamma(1.0 - s, xx);
            }
            ++out.terms;
        }
    }
    return out;
}

double cutoff_for(const PrecisionSpec& prec) {
    double target = prec.target_abs_error > 0 ? prec.target_abs_error : 1e-10;
    double T = std::max(28.0, -std::log(target) + 14.0);
    if (prec.lattice_bound > 0) T = std::max(T, static_cast<double>(prec.lattice_bound));
    return T;
}

int q_terms_for(double y, const PrecisionSpec& prec) {
    double target = prec.target_abs_error > 0 ? prec.target_abs_error : 1e-10;
    int need = static_cast<int>(std::ceil((-std::log(target) + 6.0) / (2.0 * kPi * y))) + 2;
    if (prec.q_terms > 0 && prec.q_terms < need)
        throw std::domain_error("siegel unit: y too small for the requested precision");
    return prec.q_terms > 0 ? prec.q_terms : need;
}

} // namespace

double siegel_unit_log_abs(double a, double b, const UpperHalfPoint& z,
                           const PrecisionSpec& prec) {
    validate(z);
    if (a < 0.0 || a >= 1.0 || b < 0.0 || b >= 1.0)
        throw std::invalid_argument("siegel unit: a, b must lie in [0,1)");
    if (a == 0.0 && b == 0.0) throw std::invalid_argument("siegel unit: (a,b) = (0,0) excluded");
    int terms = q_terms_for(z.y, prec);
    const std::complex<double> q = std::exp(std::complex<double>(0.0, 2.0 * kPi) *
                                            std::complex<double>(z.x, z.y));
    const std::complex<double> e = std::exp(std::complex<double>(0.0, 2.0 * kPi * b));
    double B2 = a * a - a + 1.0 / 6.0;
    double val = 0.5 * B2 * (-2.0 * kPi * z.y); // log|q^{B2/2}|
    std::complex<double> qa = std::pow(q, a);
    std::complex<double> qn{1.0, 0.0}; // q^n
    for (int n = 0; n <= terms; ++n) {
        val += std::log(std::abs(1.0 - qn * qa * e));
        if (n >= 1) val += std::log(std::abs(1.0 - qn / qa * std::conj(e)));
        qn *= q;
    }
    // n = terms+1 of the second product
    val += std::log(std::abs(1.0 - qn / qa * std::conj(e)));
    return val;
}

double u_log(int N, const UpperHalfPoint& z, long long d, const PrecisionSpec& prec) {
    validate(z);
    if (N < 4) throw std::invalid_argument("u_log: requires N >= 4");
    long long dm = ((d % N) + N) % N;
    if (std::gcd(dm, static_cast<long long>(N)) != 1)
        throw std::invalid_argument("u_log: d must be a unit mod N");
    long long rd = 1;
    for (long long t = 1; t < N; ++t)
        if ((t * dm) % N == 1) { rd = t; break; }
    double phiN = static_cast<double>(totient(N));
    double sum = 0.0;
    for (long long b = 1; b < N; ++b) {
        if (std::gcd(b, static_cast<long long>(N)) != 1) continue;
        double frac = static_cast<double>((b * rd) % N) / N;
        sum += siegel_unit_log_abs(0.0, frac, z, prec);
    }
    return phiN * sum;
}

EisResult eisenstein_value(int N, const UpperHalfPoint& z, double s, const PrecisionSpec& prec) {
    validate(z);
    if (N < 3) throw std::invalid_argument("eisenstein_value: requires N >= 3");
    if (std::abs(s - 1.0) < 1e-9)
        throw std::domain_error("eisenstein_value: continuation pole at s = 1");
    double T = cutoff_for(prec);
    LatticeSums ls = accumulate(N, z, s, T, false);
    double phiN = static_cast<double>(totient(N));
    double lambda = ls.plain + ls.plain_dual + (phiN / (N * static_cast<double>(N))) / (s - 1.0);
    EisResult r;
    r.value = -(phiN / 2.0) * lambda;
    // conservative tail estimate: each omitted term is below e^{-T} times a
    // modest prefactor, and the cut leaves O(sqrt(T)) boundary cells per row
    r.abs_error_bound = phiN * (static_cast<double>(ls.terms) + 64.0) * std::exp(-T) * 8.0;
    return r;
}

CorodlogResult corodlog_check(int N, const UpperHalfPoint& z, const PrecisionSpec& prec) {
    validate(z);
    if (N < 4) throw std::invalid_argument("corodlog_check: requires N >= 4");
    // q-series side: 2 Re( 2iy phi(N) sum_b dlog g_{0,b/N}(z) )
    int terms = q_terms_for(z.y, prec);
    const std::complex<double> q = std::exp(std::complex<double>(0.0, 2.0 * kPi) *
                                            std::complex<double>(z.x, z.y));
    std::complex<double> total{0.0, 0.0};
    for (long long b = 1; b < N; ++b) {
        if (std::gcd(b, static_cast<long long>(N)) != 1) continue;
        const std::complex<double> e =
            std::exp(std::complex<double>(0.0, 2.0 * kPi * static_cast<double>(b) / N));
        std::complex<double> dl{0.0, 2.0 * kPi / 12.0};
        std::complex<double> qn = q;
        for (int n = 1; n <= terms; ++n) {
            std::complex<double> f = std::complex<double>(0.0, -2.0 * kPi * n) * qn;
            dl += f * e / (1.0 - qn * e) + f * std::conj(e) / (1.0 - qn * std::conj(e));
            qn *= q;
        }
        total += dl;
    }
    double phiN = static_cast<double>(totient(N));
    std::complex<double> dlog_side =
        std::complex<double>(0.0, 2.0 * z.y) * phiN * total;

    double T = cutoff_for(prec);
    LatticeSums ls = accumulate(N, z, 0.0, T, true);
    // E(g_z, Phi', 0) = 2 pi phi(N) M(0) with M(0) the weighted lattice value
    double M0 = ls.weighted - ls.weighted_dual;
    double eis = 2.0 * kPi * phiN * M0;

    CorodlogResult r;
    r.dlog_side = 2.0 * dlog_side.real();
    r.eis_side = eis;
    r.residual = std::abs(r.dlog_side - r.eis_side);
    return r;
}

} // namespace gsp
