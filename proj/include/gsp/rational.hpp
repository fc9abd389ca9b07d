#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <ostream>
#include <string>

namespace gsp {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Complex number with exact rational real and imaginary parts.
struct GaussianRat {
    Rat re;
    Rat im;

    GaussianRat() = default;
    GaussianRat(Rat r) : re(std::move(r)) {}
    GaussianRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
    GaussianRat(long long r) : re(r) {}

    static GaussianRat i() { return GaussianRat(Rat(0), Rat(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianRat conj() const { return {re, -im}; }

    friend GaussianRat operator+(const GaussianRat& a, const GaussianRat& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRat operator-(const GaussianRat& a, const GaussianRat& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRat operator-(const GaussianRat& a) { return {-a.re, -a.im}; }
    friend GaussianRat operator*(const GaussianRat& a, const GaussianRat& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRat operator/(const GaussianRat& a, const GaussianRat& b) {
        Rat d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    friend bool operator==(const GaussianRat& a, const GaussianRat& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRat& a, const GaussianRat& b) { return !(a == b); }

    GaussianRat& operator+=(const GaussianRat& o) { *this = *this + o; return *this; }
    GaussianRat& operator*=(const GaussianRat& o) { *this = *this * o; return *this; }
};

inline std::string to_string(const Rat& r) { return r.str(); }

inline std::string to_string(const GaussianRat& g) {
    if (g.im == 0) return g.re.str();
    if (g.re == 0) return g.im.str() + "*i";
    return g.re.str() + (g.im > 0 ? "+" : "") + g.im.str() + "*i";
}

inline std::ostream& operator<<(std::ostream& os, const GaussianRat& g) {
    return os << to_string(g);
}

} // namespace gsp
