#pragma once

// Minimal exact rational arithmetic for the asymptotic coefficient
// generators.  Kept deliberately small: int64 numerator/denominator,
// reduced after every operation, overflow checked via __int128.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace syncfn {

struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n) : num(n) {}
    Rational(long long n, long long d) : num(n), den(d) { reduce(); }

    void reduce() {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    double to_double() const { return double(num) / double(den); }
};

namespace detail {
inline long long checked(__int128 v) {
    if (v > __int128(INT64_MAX) || v < __int128(INT64_MIN))
        throw std::overflow_error("Rational: 64-bit overflow");
    return (long long)v;
}
}  // namespace detail

inline Rational operator*(const Rational& a, const Rational& b) {
    // Cross-reduce before multiplying to keep intermediates small.
    long long g1 = std::gcd(a.num < 0 ? -a.num : a.num, b.den);
    long long g2 = std::gcd(b.num < 0 ? -b.num : b.num, a.den);
    __int128 n = __int128(a.num / g1) * (b.num / g2);
    __int128 d = __int128(a.den / g2) * (b.den / g1);
    return Rational(detail::checked(n), detail::checked(d));
}

inline Rational operator/(const Rational& a, const Rational& b) {
    if (b.num == 0) throw std::domain_error("Rational: division by zero");
    return a * Rational(b.den, b.num);
}

inline Rational operator+(const Rational& a, const Rational& b) {
    __int128 n = __int128(a.num) * b.den + __int128(b.num) * a.den;
    __int128 d = __int128(a.den) * b.den;
    return Rational(detail::checked(n), detail::checked(d));
}

inline Rational operator-(const Rational& a) { return Rational(-a.num, a.den); }
inline Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

inline bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
}
inline bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

inline std::string to_string(const Rational& r) {
    return std::to_string(r.num) + "/" + std::to_string(r.den);
}

}  // namespace syncfn
