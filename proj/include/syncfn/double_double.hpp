#pragma once

// Double-double arithmetic: a value is the unevaluated sum of two
// doubles, giving ~31 significant digits.  The error-free transforms
// (two_sum, two_prod) and the elementary functions follow the classic
// constructions of Dekker and Knuth as popularized by the QD library.
//
// Only what the rest of the library needs is provided: field ops,
// comparisons, sqrt, exp, log, pow, and sin/cos of pi*x.  Arguments are
// assumed finite; behaviour on NaN mirrors the underlying doubles.

#include <array>
#include <cmath>
#include <limits>

namespace syncfn {

namespace detail {

inline double two_sum(double a, double b, double& err) {
    double s = a + b;
    double bb = s - a;
    err = (a - (s - bb)) + (b - bb);
    return s;
}

// Requires |a| >= |b|.
inline double quick_two_sum(double a, double b, double& err) {
    double s = a + b;
    err = b - (s - a);
    return s;
}

inline double two_prod(double a, double b, double& err) {
    double p = a * b;
    err = std::fma(a, b, -p);
    return p;
}

}  // namespace detail

struct DoubleDouble {
    double hi = 0.0;
    double lo = 0.0;

    constexpr DoubleDouble() = default;
    constexpr DoubleDouble(double h) : hi(h) {}
    constexpr DoubleDouble(double h, double l) : hi(h), lo(l) {}
    constexpr DoubleDouble(int v) : hi(v) {}
};

inline double to_double(double x) { return x; }
inline double to_double(const DoubleDouble& x) { return x.hi; }

inline DoubleDouble operator-(const DoubleDouble& a) { return {-a.hi, -a.lo}; }

inline DoubleDouble operator+(const DoubleDouble& a, const DoubleDouble& b) {
    double e1, e2;
    double s = detail::two_sum(a.hi, b.hi, e1);
    double t = detail::two_sum(a.lo, b.lo, e2);
    e1 += t;
    s = detail::quick_two_sum(s, e1, e1);
    e1 += e2;
    s = detail::quick_two_sum(s, e1, e1);
    return {s, e1};
}

inline DoubleDouble operator+(const DoubleDouble& a, double b) {
    double e;
    double s = detail::two_sum(a.hi, b, e);
    e += a.lo;
    s = detail::quick_two_sum(s, e, e);
    return {s, e};
}

inline DoubleDouble operator+(double a, const DoubleDouble& b) { return b + a; }

inline DoubleDouble operator-(const DoubleDouble& a, const DoubleDouble& b) { return a + (-b); }
inline DoubleDouble operator-(const DoubleDouble& a, double b) { return a + (-b); }
inline DoubleDouble operator-(double a, const DoubleDouble& b) { return (-b) + a; }

inline DoubleDouble operator*(const DoubleDouble& a, const DoubleDouble& b) {
    double e;
    double p = detail::two_prod(a.hi, b.hi, e);
    e += a.hi * b.lo + a.lo * b.hi;
    p = detail::quick_two_sum(p, e, e);
    return {p, e};
}

inline DoubleDouble operator*(const DoubleDouble& a, double b) {
    double e;
    double p = detail::two_prod(a.hi, b, e);
    e += a.lo * b;
    p = detail::quick_two_sum(p, e, e);
    return {p, e};
}

inline DoubleDouble operator*(double a, const DoubleDouble& b) { return b * a; }

inline DoubleDouble operator/(const DoubleDouble& a, const DoubleDouble& b) {
    double q1 = a.hi / b.hi;
    DoubleDouble r = a - b * q1;
    double q2 = r.hi / b.hi;
    r = r - b * q2;
    double q3 = r.hi / b.hi;
    double e;
    double s = detail::quick_two_sum(q1, q2, e);
    return DoubleDouble{s, e} + q3;
}

inline DoubleDouble operator/(const DoubleDouble& a, double b) { return a / DoubleDouble(b); }
inline DoubleDouble operator/(double a, const DoubleDouble& b) { return DoubleDouble(a) / b; }

inline DoubleDouble& operator+=(DoubleDouble& a, const DoubleDouble& b) { return a = a + b; }
inline DoubleDouble& operator-=(DoubleDouble& a, const DoubleDouble& b) { return a = a - b; }
inline DoubleDouble& operator*=(DoubleDouble& a, const DoubleDouble& b) { return a = a * b; }
inline DoubleDouble& operator/=(DoubleDouble& a, const DoubleDouble& b) { return a = a / b; }

inline bool operator==(const DoubleDouble& a, const DoubleDouble& b) {
    return a.hi == b.hi && a.lo == b.lo;
}
inline bool operator!=(const DoubleDouble& a, const DoubleDouble& b) { return !(a == b); }
inline bool operator<(const DoubleDouble& a, const DoubleDouble& b) {
    return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo);
}
inline bool operator>(const DoubleDouble& a, const DoubleDouble& b) { return b < a; }
inline bool operator<=(const DoubleDouble& a, const DoubleDouble& b) { return !(b < a); }
inline bool operator>=(const DoubleDouble& a, const DoubleDouble& b) { return !(a < b); }

inline DoubleDouble fabs(const DoubleDouble& a) { return a.hi < 0.0 ? -a : a; }

inline DoubleDouble ldexp(const DoubleDouble& a, int n) {
    return {std::ldexp(a.hi, n), std::ldexp(a.lo, n)};
}

inline DoubleDouble sqrt(const DoubleDouble& a) {
    if (a.hi == 0.0) return {0.0, 0.0};
    // One Newton step on 1/sqrt (Karp's trick): both multiplies stay cheap.
    double x = 1.0 / std::sqrt(a.hi);
    double ax = a.hi * x;
    DoubleDouble d = a - DoubleDouble(ax) * ax;
    return DoubleDouble(ax) + d.hi * (x * 0.5);
}

namespace ddc {
// Constants as (hi, lo) pairs.
inline constexpr DoubleDouble pi{3.141592653589793, 1.2246467991473532e-16};
inline constexpr DoubleDouble two_pi{6.283185307179586, 2.4492935982947064e-16};
inline constexpr DoubleDouble ln2{0.6931471805599453, 2.3190468138462996e-17};
inline constexpr DoubleDouble half_ln_two_pi{0.9189385332046728, -3.8782941580672414e-17};
inline constexpr DoubleDouble sqrt_pi{1.772453850905516, -7.666586499825799e-17};
inline constexpr double eps = 4.93038065763132e-32;  // 2^-104
}  // namespace ddc

inline DoubleDouble exp(const DoubleDouble& a) {
    if (a.hi > 709.0) return {std::numeric_limits<double>::infinity(), 0.0};
    if (a.hi < -745.0) return {0.0, 0.0};
    // e^a = 2^k e^r with r = a - k ln2 reduced further by 2^-6, so the
    // Taylor series needs ~14 terms; six squarings undo the scaling.
    double k = std::nearbyint(a.hi / ddc::ln2.hi);
    DoubleDouble r = a - ddc::ln2 * k;
    r = ldexp(r, -6);
    DoubleDouble term = r;
    DoubleDouble sum = r + 1.0;
    for (int n = 2; n < 26; ++n) {
        term = term * r / double(n);
        sum += term;
        if (std::fabs(term.hi) < 1e-36 * std::fabs(sum.hi)) break;
    }
    for (int i = 0; i < 6; ++i) sum = sum * sum;
    return ldexp(sum, int(k));
}

inline DoubleDouble log(const DoubleDouble& a) {
    // Newton iteration y <- y + a e^{-y} - 1 starting from the double log.
    DoubleDouble y = std::log(a.hi);
    y = y + a * exp(-y) - 1.0;
    y = y + a * exp(-y) - 1.0;
    return y;
}

// pow for positive base.
inline DoubleDouble pow(const DoubleDouble& base, const DoubleDouble& e) {
    if (base.hi == 0.0) return {0.0, 0.0};
    return exp(e * log(base));
}

inline DoubleDouble sinpi(const DoubleDouble& x) {
    double n = std::nearbyint(to_double(x));
    DoubleDouble t = ddc::pi * (x - n);  // |x - n| <= 1/2
    DoubleDouble t2 = t * t;
    DoubleDouble term = t;
    DoubleDouble sum = t;
    for (int k = 1; k < 32; ++k) {
        term = -(term * t2) / double((2 * k) * (2 * k + 1));
        sum += term;
        if (std::fabs(term.hi) < 1e-36 * (std::fabs(sum.hi) + 1e-300)) break;
    }
    if (std::fmod(n, 2.0) != 0.0) sum = -sum;
    return sum;
}

inline DoubleDouble cospi(const DoubleDouble& x) {
    double n = std::nearbyint(to_double(x));
    DoubleDouble t = ddc::pi * (x - n);
    DoubleDouble t2 = t * t;
    DoubleDouble term{1.0};
    DoubleDouble sum{1.0};
    for (int k = 1; k < 32; ++k) {
        term = -(term * t2) / double((2 * k - 1) * (2 * k));
        sum += term;
        if (std::fabs(term.hi) < 1e-36 * std::fabs(sum.hi)) break;
    }
    if (std::fmod(n, 2.0) != 0.0) sum = -sum;
    return sum;
}

// double counterparts so templated code can call unqualified helpers.
inline double sinpi(double x) {
    double n = std::nearbyint(x);
    double s = std::sin(3.141592653589793 * (x - n));
    return std::fmod(n, 2.0) != 0.0 ? -s : s;
}

inline double cospi(double x) {
    double n = std::nearbyint(x);
    double c = std::cos(3.141592653589793 * (x - n));
    return std::fmod(n, 2.0) != 0.0 ? -c : c;
}

inline bool isfinite_value(double x) { return std::isfinite(x); }
inline bool isfinite_value(const DoubleDouble& x) { return std::isfinite(x.hi); }

// Per-precision parameters used across the library.
template <class Real>
struct numeric;

template <>
struct numeric<double> {
    static constexpr double eps = 2.220446049250313e-16;
    static constexpr double tiny = 1e-290;  // absolute floor for near-zero sums
    static constexpr int stirling_shift = 13;
    static constexpr int stirling_terms = 9;
    static double pi() { return 3.141592653589793; }
    static double sqrt_pi() { return 1.7724538509055160273; }
    static double half_ln_two_pi() { return 0.91893853320467274178; }
};

template <>
struct numeric<DoubleDouble> {
    static constexpr double eps = ddc::eps;
    static constexpr double tiny = 1e-290;
    static constexpr int stirling_shift = 40;
    static constexpr int stirling_terms = 16;
    static DoubleDouble pi() { return ddc::pi; }
    static DoubleDouble sqrt_pi() { return ddc::sqrt_pi; }
    static DoubleDouble half_ln_two_pi() { return ddc::half_ln_two_pi; }
};

}  // namespace syncfn
