#pragma once

// Real-line gamma function, its reciprocal, and the Pochhammer symbol,
// templated over double / DoubleDouble.
//
// Positive arguments use the Stirling series after shifting the
// argument upward; negative arguments go through the reflection
// formula Gamma(z) Gamma(1-z) = pi / sin(pi z)  (DLMF 5.5.3, 5.11.1).

#include <array>
#include <cmath>
#include <string>

#include "syncfn/double_double.hpp"
#include "syncfn/errors.hpp"

namespace syncfn {

namespace detail {

// B_{2j} / (2j (2j-1)) for the Stirling series, as exact integer ratios.
struct StirlingRatio {
    double num;
    double den;
};

inline constexpr std::array<StirlingRatio, 16> kStirlingRatios = {{
    {1.0, 12.0},
    {-1.0, 360.0},
    {1.0, 1260.0},
    {-1.0, 1680.0},
    {1.0, 1188.0},
    {-691.0, 360360.0},
    {1.0, 156.0},
    {-3617.0, 122400.0},
    {43867.0, 244188.0},
    {-174611.0, 125400.0},
    {77683.0, 5796.0},
    {-236364091.0, 1506960.0},
    {657931.0, 300.0},
    {-3392780147.0, 93960.0},
    {1723168255201.0, 2492028.0},
    {-7709321041217.0, 505920.0},
}};

template <class Real>
const std::array<Real, 16>& stirling_coefficients() {
    static const std::array<Real, 16> coefs = [] {
        std::array<Real, 16> c{};
        for (std::size_t j = 0; j < c.size(); ++j)
            c[j] = Real(kStirlingRatios[j].num) / Real(kStirlingRatios[j].den);
        return c;
    }();
    return coefs;
}

// log Gamma(w) for w at or above the per-precision shift threshold.
template <class Real>
Real lgamma_shifted(Real w) {
    using std::log;
    const auto& coefs = stirling_coefficients<Real>();
    const int terms = numeric<Real>::stirling_terms;
    Real iw = Real(1.0) / w;
    Real iw2 = iw * iw;
    Real acc{};
    for (int j = terms - 1; j >= 0; --j) acc = acc * iw2 + coefs[j];
    acc = acc * iw;
    return (w - Real(0.5)) * log(w) - w + numeric<Real>::half_ln_two_pi() + acc;
}

template <class Real>
Real gamma_positive(Real z) {
    using std::exp;
    const double shift = numeric<Real>::stirling_shift;
    Real prod{1.0};
    Real w = z;
    while (to_double(w) < shift) {
        prod = prod * w;
        w = w + Real(1.0);
    }
    return exp(lgamma_shifted(w)) / prod;
}

}  // namespace detail

inline bool is_integer_value(double z) { return z == std::nearbyint(z); }
inline bool is_integer_value(const DoubleDouble& z) {
    return z.hi == std::nearbyint(z.hi) && z.lo == 0.0;
}

// Gamma(z) on the real line; throws PoleError at 0, -1, -2, ...
template <class Real>
Real gamma_real(Real z) {
    if (to_double(z) <= 0.0 && is_integer_value(z))
        throw PoleError("gamma_real: pole at z = " + std::to_string(to_double(z)));
    if (to_double(z) >= 0.5) return detail::gamma_positive(z);
    Real s = sinpi(z);
    return numeric<Real>::pi() / (s * detail::gamma_positive(Real(1.0) - z));
}

// 1 / Gamma(z); exactly zero at the poles of Gamma.
template <class Real>
Real recip_gamma(Real z) {
    if (to_double(z) <= 0.0 && is_integer_value(z)) return Real(0.0);
    return Real(1.0) / gamma_real(z);
}

// Rising factorial (beta)_n as a plain product; defined for every real
// beta and n >= 0, with (beta)_0 = 1.
template <class Real>
Real pochhammer(Real beta, int n) {
    if (n < 0) throw DomainError("pochhammer: n must be nonnegative");
    Real prod{1.0};
    for (int k = 0; k < n; ++k) prod = prod * (beta + Real(double(k)));
    return prod;
}

}  // namespace syncfn
