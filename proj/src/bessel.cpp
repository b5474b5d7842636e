#include "syncfn/bessel.hpp"

namespace syncfn {

EvalResult bessel_k(double nu, double x, double rel_tol) {
    if (is_integer_value(nu)) throw OrderIsInteger("bessel_k: order must be non-integer");
    if (!(x > 0.0)) throw DomainError("bessel_k: x must be positive");

    try {
        auto r = bessel_k_asymptotic<double>(nu, x);
        if (r.abs_error_estimate <= rel_tol * std::fabs(r.value)) return r;
    } catch (const ImmediateDivergence&) {
        // fall through to the convergent route
    }
    try {
        return bessel_k_convergent<double>(nu, x, rel_tol);
    } catch (const CancellationLoss&) {
        // escalate; a second CancellationLoss propagates to the caller
    }
    return narrow(bessel_k_convergent<DoubleDouble>(DoubleDouble(nu), DoubleDouble(x),
                                                    DoubleDouble(rel_tol)));
}

std::vector<Rational> bessel_k_asym_coefficients(const Rational& nu, int count) {
    if (count < 0 || count > 16)
        throw DomainError("bessel_k_asym_coefficients: count must be in [0, 16]");
    std::vector<Rational> u;
    u.reserve(std::size_t(count) + 1);
    Rational half(1, 2);
    Rational term(1);
    u.push_back(term);
    for (int n = 0; n < count; ++n) {
        Rational k(n);
        term = term * (half - nu + k) * (half + nu + k) / (Rational(n + 1) * Rational(-2));
        u.push_back(term);
    }
    return u;
}

}  // namespace syncfn
