#include "syncfn/synchrotron.hpp"

#include <algorithm>

namespace syncfn {

namespace {

template <class Real>
EvalResult small_route(double x, const EvalConfig& cfg) {
    SmallXTruncation t{cfg.small_x_terms};
    return narrow(f_small_x(Real(x), t));
}

template <class Real>
EvalResult large_route(double x) {
    return narrow(f_large_x(Real(x)));
}

}  // namespace

EvalResult f_eval(double x, double rel_tol) { return f_eval(x, rel_tol, EvalConfig{}); }

EvalResult f_eval(double x, double rel_tol, const EvalConfig& cfg) {
    if (!std::isfinite(x) || x < 0.0) throw DomainError("x must be positive");
    if (x == 0.0) return {0.0, Regime::SmallX, 0, 0.0};
    const bool extended = cfg.precision == Precision::Extended;

    if (x <= cfg.small_x_cutoff) {
        EvalResult r = extended ? small_route<DoubleDouble>(x, cfg) : small_route<double>(x, cfg);
        if (r.abs_error_estimate <= rel_tol * std::fabs(r.value)) return r;
    }

    if (x <= cfg.closed_cutoff_extended) {
        if (!extended && x <= cfg.closed_cutoff_double) {
            try {
                return narrow(f_closed(x, rel_tol));
            } catch (const CancellationLoss&) {
            }
        }
        try {
            return narrow(f_closed(DoubleDouble(x), DoubleDouble(rel_tol)));
        } catch (const CancellationLoss&) {
        }
    }

    try {
        EvalResult r = extended ? large_route<DoubleDouble>(x) : large_route<double>(x);
        if (r.abs_error_estimate <= rel_tol * std::fabs(r.value)) return r;
    } catch (const ImmediateDivergence&) {
    }

    QuadratureConfig q = cfg.oracle_cfg;
    q.rel_tol = std::min(q.rel_tol, rel_tol / 2.0);
    q.tail_eps = std::min(q.tail_eps, rel_tol / 8.0);
    if (extended) return narrow(f_quadrature(DoubleDouble(x), q));
    return f_quadrature(x, q);
}

std::vector<Rational> f_large_x_diag_coefficients(const Rational& nu, int count) {
    if (count < 0 || count > 8)
        throw DomainError("f_large_x_diag_coefficients: count must be in [0, 8]");
    Rational half(1, 2);
    std::vector<Rational> d;
    d.reserve(std::size_t(count) + 1);
    Rational e(1);       // e_m
    Rational esum(1);    // sum of e_m, m <= s
    Rational poch(1);    // (1/2)_s
    Rational sign(1);
    d.push_back(Rational(1));
    for (int s = 1; s <= count; ++s) {
        Rational m(s - 1);
        e = e * (half - nu + m) * (half + nu + m) / (Rational(2) * (half + m) * Rational(s));
        esum = esum + e;
        poch = poch * (half + m);
        sign = -sign;
        d.push_back(sign * poch * esum);
    }
    return d;
}

}  // namespace syncfn
