#include "gsp/spin.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace gsp {

Cplx EulerFactor::eval(Cplx x) const {
    Cplx acc{0.0, 0.0};
    for (auto it = inverse_poly.rbegin(); it != inverse_poly.rend(); ++it) acc = acc * x + *it;
    return acc;
}

namespace {

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace

SatakeDatum trivial_satake(long long ell) {
    SatakeDatum d;
    d.ell = ell;
    for (auto& e : d.c) e.value = Cplx{1.0, 0.0};
    return d;
}

EulerFactor spin_factor(const SatakeDatum& d) {
    if (!is_prime(d.ell)) throw std::invalid_argument("spin_factor: ell must be prime");
    for (auto& e : d.c)
        if (!e.ramified() && *e.value == Cplx(0.0, 0.0))
            throw std::invalid_argument("spin_factor: unramified character value must be nonzero");
    EulerFactor f;
    f.ell = d.ell;
    f.inverse_poly = {Cplx(1.0, 0.0)};
    if (d.c[0].ramified()) return f; // every subset involves c0
    for (unsigned mask = 0; mask < 8; ++mask) {
        Cplx root = *d.c[0].value;
        bool ram = false;
        for (int i = 1; i <= 3; ++i)
            if (mask & (1u << (i - 1))) {
                if (d.c[static_cast<size_t>(i)].ramified()) { ram = true; break; }
                root *= *d.c[static_cast<size_t>(i)].value;
            }
        if (ram) continue;
        // multiply by (1 - root * X)
        std::vector<Cplx> next(f.inverse_poly.size() + 1, Cplx(0.0, 0.0));
        for (size_t i = 0; i < f.inverse_poly.size(); ++i) {
            next[i] += f.inverse_poly[i];
            next[i + 1] -= root * f.inverse_poly[i];
        }
        f.inverse_poly = std::move(next);
    }
    return f;
}

std::vector<long long> primes_up_to(long long n) {
    std::vector<long long> out;
    if (n < 2) return out;
    std::vector<bool> sieve(static_cast<size_t>(n + 1), true);
    for (long long i = 2; i <= n; ++i) {
        if (!sieve[static_cast<size_t>(i)]) continue;
        out.push_back(i);
        for (long long j = i * i; j <= n; j += i) sieve[static_cast<size_t>(j)] = false;
    }
    return out;
}

PartialL partial_L(const std::vector<SatakeDatum>& data, Cplx s, long long p_max) {
    double sigma = s.real();
    if (sigma <= 1.0)
        throw std::domain_error("partial_L: outside the convergence region (Re s <= 1)");
    std::vector<const SatakeDatum*> sorted;
    double max_abs_c = 1.0; // tail primes are modeled with unit-size parameters
    for (auto& d : data) {
        if (d.ell > p_max) throw std::invalid_argument("partial_L: datum prime exceeds p_max");
        for (auto& e : d.c)
            if (!e.ramified()) {
                double req = 1.0 + std::log(std::abs(*e.value)) / std::log(static_cast<double>(d.ell));
                if (sigma <= req)
                    throw std::domain_error("partial_L: outside the stated convergence region");
            }
        sorted.push_back(&d);
    }
    std::sort(sorted.begin(), sorted.end(),
              [](const SatakeDatum* a, const SatakeDatum* b) { return a->ell < b->ell; });
    for (size_t i = 0; i + 1 < sorted.size(); ++i)
        if (sorted[i]->ell == sorted[i + 1]->ell)
            throw std::invalid_argument("partial_L: duplicate prime");

    PartialL out;
    for (const SatakeDatum* d : sorted) {
        EulerFactor f = spin_factor(*d);
        Cplx x = std::exp(-s * std::log(static_cast<double>(d->ell)));
        Cplx denom = f.eval(x);
        if (std::abs(denom) < 1e-300)
            throw std::domain_error("partial_L: evaluation at a zero of an inverse factor");
        out.value *= Cplx(1.0, 0.0) / denom;
        ++out.factors_used;
    }

    // Tail over primes > p_max, each of the 8 linear factors bounded via
    // |log(1-z)| <= |z|/(1-|z|), |z| <= C n^{-sigma}, sum_{n>P} n^-sigma <= P^{1-sigma}/(sigma-1).
    double P = static_cast<double>(p_max);
    double C = max_abs_c;
    double z0 = C * std::pow(P, -sigma);
    if (z0 < 1.0) {
        double log_tail = 8.0 * (C / (1.0 - z0)) * std::pow(P, 1.0 - sigma) / (sigma - 1.0);
        out.tail_bound = std::abs(out.value) * std::expm1(log_tail);
    } else {
        out.tail_bound = std::numeric_limits<double>::infinity();
    }
    return out;
}

} // namespace gsp
