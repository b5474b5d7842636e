#pragma once

// Modified Bessel functions for real non-integer order by two
// independent routes:
//
//  * the ascending series of I_{+nu} and I_{-nu} combined through
//    K_nu = (pi/2) (I_{-nu} - I_nu) / sin(nu pi)   (DLMF 10.27.4),
//    accurate everywhere but cancellation-limited for large x;
//
//  * the divergent 2F0 expansion
//    K_nu ~ sqrt(pi/(2x)) e^{-x} 2F0(1/2-nu, 1/2+nu; ; -1/(2x))
//    (DLMF 10.40.2) under optimal truncation, exact when the series
//    terminates (half-integer order).

#include <cmath>
#include <string>
#include <vector>

#include "syncfn/double_double.hpp"
#include "syncfn/errors.hpp"
#include "syncfn/eval.hpp"
#include "syncfn/gamma.hpp"
#include "syncfn/rational.hpp"
#include "syncfn/series.hpp"

namespace syncfn {

namespace detail {

template <class Real>
struct BesselIOutcome {
    Real value{};
    int terms = 0;
};

template <class Real>
BesselIOutcome<Real> bessel_i_series(Real nu, Real x, Real rel_tol) {
    using std::pow;
    if (!(to_double(x) > 0.0)) throw DomainError("bessel_i: x must be positive");
    HypParams<Real> p;
    p.lower = {nu + Real(1.0)};
    p.argument = x * x / Real(4.0);
    auto out = hyp_convergent(p, rel_tol);
    Real pref = pow(x / Real(2.0), nu) / gamma_real(nu + Real(1.0));
    return {pref * out.value, out.terms_used};
}

template <class Real>
struct KConvergentParts {
    Real value{};
    Real estimate{};
    int terms = 0;
};

// Shared by the public convergent route and the oracle's fast inner
// path; reports the cancellation estimate instead of policing it.
template <class Real>
KConvergentParts<Real> bessel_k_convergent_core(Real nu, Real x) {
    using std::fabs;
    if (is_integer_value(nu))
        throw OrderIsInteger("bessel_k: order must be non-integer");
    Real full = Real(4.0) * Real(numeric<Real>::eps);
    auto ip = bessel_i_series(nu, x, full);
    auto im = bessel_i_series(-nu, x, full);
    Real s = sinpi(nu);
    Real half_pi = numeric<Real>::pi() * Real(0.5);
    KConvergentParts<Real> out;
    out.value = half_pi * (im.value - ip.value) / s;
    out.estimate = half_pi * (fabs(im.value) + fabs(ip.value)) / fabs(s) *
                   Real(4.0 * numeric<Real>::eps);
    out.terms = ip.terms > im.terms ? ip.terms : im.terms;
    return out;
}

}  // namespace detail

// I_nu(x) by its ascending series (DLMF 10.25.2).
template <class Real>
Real bessel_i(Real nu, Real x, Real rel_tol) {
    return detail::bessel_i_series(nu, x, rel_tol).value;
}

// K_nu via the I_{+-nu} combination.  Throws CancellationLoss when the
// cancellation estimate exceeds rel_tol * |value|, signalling the
// caller to escalate precision or switch route.
template <class Real>
EvalResultT<Real> bessel_k_convergent(Real nu, Real x, Real rel_tol) {
    using std::fabs;
    auto parts = detail::bessel_k_convergent_core(nu, x);
    if (parts.estimate > rel_tol * fabs(parts.value))
        throw CancellationLoss("bessel_k_convergent: cancellation exceeds tolerance at x = " +
                                   std::to_string(to_double(x)),
                               to_double(parts.value), to_double(parts.estimate));
    return {parts.value, Regime::ClosedForm, parts.terms, parts.estimate};
}

// Large-x route: optimally truncated 2F0.  The error estimate is the
// prefactor times the first omitted (smallest) term, zero if the
// series terminates.
template <class Real>
EvalResultT<Real> bessel_k_asymptotic(Real nu, Real x) {
    using std::exp;
    using std::sqrt;
    if (!(to_double(x) > 0.0)) throw DomainError("bessel_k: x must be positive");
    HypParams<Real> p;
    p.upper = {Real(0.5) - nu, Real(0.5) + nu};
    p.argument = Real(-1.0) / (Real(2.0) * x);
    auto out = hyp_divergent_optimal(p);
    Real pref = sqrt(numeric<Real>::pi() / (Real(2.0) * x)) * exp(-x);
    return {pref * out.value, Regime::LargeX, out.terms_used,
            pref * out.smallest_term_magnitude};
}

// Error-driven dispatcher: asymptotic route when its own estimate meets
// the tolerance, otherwise the convergent route, escalated to extended
// precision on cancellation loss.  Declared here, defined in src/.
EvalResult bessel_k(double nu, double x, double rel_tol);

// Coefficients u_n of the large-x expansion
//   K_nu ~ sqrt(pi/(2x)) e^{-x} [1 + u_1/x + u_2/x^2 + ...],
// exact rationals for rational order: u_n = (1/2-nu)_n (1/2+nu)_n / (n! (-2)^n).
std::vector<Rational> bessel_k_asym_coefficients(const Rational& nu, int count);

}  // namespace syncfn
