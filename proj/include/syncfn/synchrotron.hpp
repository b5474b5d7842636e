#pragma once

// The synchrotron function F(x) = x * int_x^inf K_{5/3}(z) dz and the
// pieces of its antiderivative for general non-integer order.
//
// Four evaluation routes with per-call error estimates:
//   * closed form: -pi/sqrt(3) x + (4x)^{1/3} Gamma(2/3) 1F2(...) +
//     (x^11/256)^{1/3} Gamma(-8/3) 1F2(...), valid on all of (0, inf)
//     but cancellation-limited as x grows;
//   * small-x fractional-power expansion, generated mechanically from
//     the ascending series of the closed form;
//   * large-x exponentially suppressed double series accumulated along
//     anti-diagonals under optimal truncation (or truncated at fixed
//     order in both indices);
//   * the quadrature oracle as a fallback.

#include <cmath>
#include <string>
#include <vector>

#include "syncfn/double_double.hpp"
#include "syncfn/errors.hpp"
#include "syncfn/eval.hpp"
#include "syncfn/gamma.hpp"
#include "syncfn/oracle.hpp"
#include "syncfn/quadrature.hpp"
#include "syncfn/rational.hpp"
#include "syncfn/series.hpp"

namespace syncfn {

struct SmallXTruncation {
    int m_terms = 6;  // 1..8
};

struct LargeXTruncation {
    enum class Policy { FixedN, Optimal };
    Policy policy = Policy::Optimal;
    int n = 0;  // FixedN order, 1..20
};

struct SynchrotronOrder {
    double nu = 5.0 / 3.0;
};

namespace detail {

template <class Real>
void require_noninteger_order(Real nu) {
    if (is_integer_value(nu))
        throw PoleError("synchrotron: order nu must be non-integer");
}

template <class Real>
Real powi(Real b, int n) {
    Real r{1.0};
    for (int i = 0; i < (n < 0 ? -n : n); ++i) r = r * b;
    return n < 0 ? Real(1.0) / r : r;
}

}  // namespace detail

// First antiderivative piece:
// S1 = (x/2)^{1-nu} Gamma(nu-1) 1F2(1/2-nu/2; 1-nu, 3/2-nu/2; x^2/4).
template <class Real>
Real s1_term(Real nu, Real x) {
    using std::pow;
    detail::require_noninteger_order(nu);
    if (!(to_double(x) > 0.0)) throw DomainError("s1_term: x must be positive");
    HypParams<Real> p;
    p.upper = {Real(0.5) - nu * Real(0.5)};
    p.lower = {Real(1.0) - nu, Real(1.5) - nu * Real(0.5)};
    p.argument = x * x / Real(4.0);
    auto h = hyp_convergent(p, Real(4.0 * numeric<Real>::eps));
    return pow(x / Real(2.0), Real(1.0) - nu) * gamma_real(nu - Real(1.0)) * h.value;
}

// Second piece:
// S2 = (x/2)^{1+nu} Gamma(-nu-1) 1F2(1/2+nu/2; 1+nu, 3/2+nu/2; x^2/4).
template <class Real>
Real s2_term(Real nu, Real x) {
    using std::pow;
    detail::require_noninteger_order(nu);
    if (!(to_double(x) > 0.0)) throw DomainError("s2_term: x must be positive");
    HypParams<Real> p;
    p.upper = {Real(0.5) + nu * Real(0.5)};
    p.lower = {Real(1.0) + nu, Real(1.5) + nu * Real(0.5)};
    p.argument = x * x / Real(4.0);
    auto h = hyp_convergent(p, Real(4.0 * numeric<Real>::eps));
    return pow(x / Real(2.0), Real(1.0) + nu) * gamma_real(-nu - Real(1.0)) * h.value;
}

// Third piece collapses to a constant: Gamma(1/2+nu/2) Gamma(1/2-nu/2) / 2.
template <class Real>
Real s3_constant(Real nu) {
    return gamma_real(Real(0.5) + nu * Real(0.5)) * gamma_real(Real(0.5) - nu * Real(0.5)) *
           Real(0.5);
}

// Closed form of F at nu = 5/3.  The error estimate is the cancellation
// bound: the three pieces grow like e^x while F decays like e^{-x}.
template <class Real>
EvalResultT<Real> f_closed(Real x, Real rel_tol) {
    using std::fabs;
    using std::pow;
    using std::sqrt;
    if (!(to_double(x) > 0.0)) throw DomainError("f_closed: x must be positive");
    static const Real third = Real(1.0) / Real(3.0);
    static const Real g23 = gamma_real(Real(2.0) / Real(3.0));
    static const Real gm83 = gamma_real(Real(-8.0) / Real(3.0));
    static const Real pi_ovr_sqrt3 = numeric<Real>::pi() / sqrt(Real(3.0));
    static const Real c256 = pow(Real(256.0), third);

    Real z = x * x / Real(4.0);
    HypParams<Real> p1;
    p1.upper = {-third};
    p1.lower = {Real(-2.0) * third, Real(2.0) * third};
    p1.argument = z;
    HypParams<Real> p2;
    p2.upper = {Real(4.0) * third};
    p2.lower = {Real(8.0) * third, Real(7.0) * third};
    p2.argument = z;
    auto h1 = hyp_convergent(p1, Real(4.0 * numeric<Real>::eps));
    auto h2 = hyp_convergent(p2, Real(4.0 * numeric<Real>::eps));

    Real piece1 = pow(Real(4.0) * x, third) * g23 * h1.value;
    Real piece2 = pow(x, Real(11.0) * third) / c256 * gm83 * h2.value;
    Real piece3 = -pi_ovr_sqrt3 * x;
    Real value = piece1 + piece2 + piece3;

    Real est = Real(4.0 * numeric<Real>::eps) * (fabs(piece1) + fabs(piece2) + fabs(piece3)) +
               Real(2.0 * numeric<Real>::eps) * fabs(value);
    if (est > rel_tol * fabs(value))
        throw CancellationLoss("f_closed: cancellation exceeds tolerance at x = " +
                                   std::to_string(to_double(x)),
                               to_double(value), to_double(est));
    int order = h1.terms_used > h2.terms_used ? h1.terms_used : h2.terms_used;
    return {value, Regime::ClosedForm, order, est};
}

// One term of the small-x expansion of F: a fractional power and its
// coefficient.
template <class Real>
struct PowerTerm {
    Real power{};
    Real coeff{};
};

// The ascending expansion of F in fractional powers, generated from the
// closed-form series rather than transcribed: powers 2-nu+2n and
// 2+nu+2n from the two 1F2 pieces plus the single linear term, merged
// in ascending order.
template <class Real>
std::vector<PowerTerm<Real>> small_x_terms(Real nu, int count) {
    using std::pow;
    detail::require_noninteger_order(nu);
    if (count < 1 || count > 64) throw DomainError("small_x_terms: bad count");

    // stream A: x * S1; stream B: x * S2; stream C: x * S3.
    Real a_pow = Real(2.0) - nu;
    Real a_coef = gamma_real(nu - Real(1.0)) * pow(Real(2.0), nu - Real(1.0));
    Real a_upper = Real(0.5) - nu * Real(0.5);
    Real a_lo1 = Real(1.0) - nu, a_lo2 = Real(1.5) - nu * Real(0.5);
    Real b_pow = Real(2.0) + nu;
    Real b_coef = gamma_real(-nu - Real(1.0)) * pow(Real(2.0), -nu - Real(1.0));
    Real b_upper = Real(0.5) + nu * Real(0.5);
    Real b_lo1 = Real(1.0) + nu, b_lo2 = Real(1.5) + nu * Real(0.5);
    Real c_pow = Real(1.0);
    Real c_coef = s3_constant(nu);
    bool c_left = true;

    std::vector<PowerTerm<Real>> out;
    int an = 0, bn = 0;
    while (int(out.size()) < count) {
        double pa = to_double(a_pow), pb = to_double(b_pow);
        double pc = c_left ? to_double(c_pow) : std::numeric_limits<double>::infinity();
        if (pc <= pa && pc <= pb) {
            out.push_back({c_pow, c_coef});
            c_left = false;
        } else if (pa <= pb) {
            out.push_back({a_pow, a_coef});
            a_coef = a_coef * (a_upper + Real(double(an))) /
                     ((a_lo1 + Real(double(an))) * (a_lo2 + Real(double(an)))) /
                     Real(double(an + 1)) / Real(4.0);
            a_pow = a_pow + Real(2.0);
            ++an;
        } else {
            out.push_back({b_pow, b_coef});
            b_coef = b_coef * (b_upper + Real(double(bn))) /
                     ((b_lo1 + Real(double(bn))) * (b_lo2 + Real(double(bn)))) /
                     Real(double(bn + 1)) / Real(4.0);
            b_pow = b_pow + Real(2.0);
            ++bn;
        }
    }
    return out;
}

// Partial sum of the first m_terms of the small-x expansion; the error
// estimate is the magnitude of the first omitted term.
template <class Real>
EvalResultT<Real> f_small_x(Real x, const SmallXTruncation& t,
                            Real nu = default_synchrotron_order<Real>()) {
    using std::fabs;
    using std::pow;
    if (!(to_double(x) > 0.0)) throw DomainError("f_small_x: x must be positive");
    if (t.m_terms < 1 || t.m_terms > 8)
        throw DomainError("f_small_x: m_terms must be in [1, 8]");
    auto terms = small_x_terms(nu, t.m_terms + 1);
    detail::KahanSum<Real> acc;
    for (int i = 0; i < t.m_terms; ++i)
        acc.add(terms[std::size_t(i)].coeff * pow(x, terms[std::size_t(i)].power));
    Real next = fabs(terms[std::size_t(t.m_terms)].coeff *
                     pow(x, terms[std::size_t(t.m_terms)].power));
    return {acc.sum, Regime::SmallX, t.m_terms, next};
}

// Large-x double series
//   F ~ sqrt(pi x/2) e^{-x} sum_{n,m} e_m (1/2)_{m+n} (-1/x)^{m+n},
//   e_m = (1/2-nu)_m (1/2+nu)_m / (2^m (1/2)_m m!),
// accumulated along anti-diagonals s = n+m.  Optimal policy truncates
// before the smallest-magnitude anti-diagonal, which then bounds the
// error; FixedN runs both indices through 0..N and the bound is the
// first diagonal beyond N.
template <class Real>
EvalResultT<Real> f_large_x(Real x, const LargeXTruncation& t = {},
                            Real nu = default_synchrotron_order<Real>()) {
    using std::exp;
    using std::fabs;
    using std::sqrt;
    if (!(to_double(x) > 0.0)) throw DomainError("f_large_x: x must be positive");
    Real pref = sqrt(numeric<Real>::pi() * x / Real(2.0)) * exp(-x);
    const Real nu2 = nu * nu;
    auto e_next = [&](Real e, int m) -> Real {
        Real h = Real(double(m)) + Real(0.5);
        return e * (h * h - nu2) / (Real(2.0) * h * Real(double(m + 1)));
    };

    if (t.policy == LargeXTruncation::Policy::FixedN) {
        const int N = t.n;
        if (N < 1 || N > 20) throw DomainError("f_large_x: FixedN order must be in [1, 20]");
        std::vector<Real> e(std::size_t(N + 2));
        e[0] = Real(1.0);
        for (int m = 0; m <= N; ++m) e[std::size_t(m + 1)] = e_next(e[std::size_t(m)], m);
        detail::KahanSum<Real> acc;
        Real ratio{1.0};  // (1/2)_s (-1/x)^s
        for (int s = 0; s <= 2 * N; ++s) {
            Real part{};
            int mlo = s > N ? s - N : 0;
            int mhi = s < N ? s : N;
            for (int m = mlo; m <= mhi; ++m) part = part + e[std::size_t(m)];
            acc.add(ratio * part);
            ratio = ratio * (Real(double(s)) + Real(0.5)) * (Real(-1.0) / x);
        }
        // first omitted diagonal: s = N+1 with every |e_m| counted
        Real dmag{};
        Real r1{1.0};
        for (int s = 0; s <= N; ++s) r1 = r1 * (Real(double(s)) + Real(0.5)) / x;
        for (int m = 0; m <= N + 1; ++m) dmag = dmag + fabs(e[std::size_t(m)]);
        Real value = pref * acc.sum;
        Real est = pref * fabs(r1) * dmag + Real(4.0 * numeric<Real>::eps) * fabs(value);
        return {value, Regime::LargeX, N, est};
    }

    // Optimal anti-diagonal truncation.
    detail::KahanSum<Real> acc;
    detail::KahanSum<Real> esum;  // sum of e_m up to the current diagonal
    Real e{1.0};
    esum.add(e);
    Real ratio{1.0};
    Real diag{1.0};  // current D_s, not yet accumulated
    for (int s = 0; s < 10000; ++s) {
        e = e_next(e, s);
        esum.add(e);
        ratio = ratio * (Real(double(s)) + Real(0.5)) * (Real(-1.0) / x);
        Real next = ratio * esum.sum;
        if (fabs(next) >= fabs(diag)) {
            if (s == 0)
                throw ImmediateDivergence(
                    "f_large_x: second anti-diagonal exceeds the first; x too small");
            Real value = pref * acc.sum;
            Real est =
                pref * fabs(diag) + Real(4.0 * numeric<Real>::eps) * fabs(value);
            return {value, Regime::LargeX, s, est};
        }
        acc.add(diag);
        diag = next;
    }
    throw MaxTermsExceeded("f_large_x: anti-diagonal cap reached");
}

// Term of the reciprocal-argument companion series of the
// antiderivative; every term carries 1/Gamma(-k) and is identically
// zero.  Exposed for the nullity identity tests.
template <class Real>
Real s4_series_term(Real nu, Real x, int k) {
    using std::pow;
    if (k < 0) throw DomainError("s4_series_term: k must be nonnegative");
    Real num = gamma_real(nu + Real(double(2 * k))) *
               gamma_real(nu + Real(0.5) + Real(double(k))) *
               gamma_real(Real(0.5) + Real(double(k)));
    Real den = gamma_real(nu + Real(1.0) + Real(double(2 * k))) *
               gamma_real(Real(double(k)) + Real(1.0));
    Real arg = detail::powi(Real(-4.0) / (x * x), k);
    return pow(Real(2.0), nu) * pow(x, -nu) * num / den * recip_gamma(Real(double(-k))) * arg;
}

// Term of the fifth formal solution of the tail integral's bracket
// series; 1/Gamma(-m-n) makes every term vanish.
template <class Real>
Real s5_series_term(Real nu, Real x, int m, int n) {
    using std::exp;
    if (m < 0 || n < 0) throw DomainError("s5_series_term: indices must be nonnegative");
    Real num = gamma_real(Real(0.5) + Real(double(m + n))) *
               gamma_real(nu - Real(double(m + n))) *
               gamma_real(-nu - Real(double(m + n)));
    Real den = gamma_real(Real(0.5) - nu) * gamma_real(Real(0.5) + nu) *
               gamma_real(Real(double(n)) + Real(1.0));
    Real arg = detail::powi(Real(-2.0), m) * detail::powi(Real(-2.0) * x, n);
    return numeric<Real>::sqrt_pi() * exp(-x) * num / den *
           recip_gamma(Real(double(-m - n))) * arg;
}

// Inverse-power coefficients d_s of the large-x series,
//   F ~ sqrt(pi x/2) e^{-x} [d_0 + d_1/x + d_2/x^2 + ...],
// as exact rationals for rational order:
//   d_s = (-1)^s (1/2)_s sum_{m<=s} e_m.
std::vector<Rational> f_large_x_diag_coefficients(const Rational& nu, int count);

// Dispatcher configuration; defaults follow the validated thresholds.
struct EvalConfig {
    double small_x_cutoff = 0.05;
    int small_x_terms = 6;
    double closed_cutoff_double = 8.0;
    double closed_cutoff_extended = 25.0;
    Precision precision = Precision::Double;
    QuadratureConfig oracle_cfg{};
};

// Error-driven dispatch across the four routes.  Guarantees a result
// with a truthful error estimate; x = 0 returns the limit value 0.
EvalResult f_eval(double x, double rel_tol);
EvalResult f_eval(double x, double rel_tol, const EvalConfig& cfg);

}  // namespace syncfn
