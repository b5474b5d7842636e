#include <doctest.h>

#include <cmath>
#include <vector>

#include "syncfn/bessel.hpp"
#include "syncfn/oracle.hpp"

using namespace syncfn;
using DD = DoubleDouble;

namespace {
const double kNu = 5.0 / 3.0;
double relerr(double got, double want) { return std::fabs(got - want) / std::fabs(want); }
}  // namespace

TEST_CASE("I_{1/2} closed form") {
    // I_{1/2}(x) = sqrt(2/(pi x)) sinh(x), evaluated independently
    for (double x : {0.25, 1.0, 3.0}) {
        double want = std::sqrt(2.0 / (3.141592653589793 * x)) * std::sinh(x);
        CHECK(relerr(bessel_i(0.5, x, 1e-16), want) < 1e-13);
    }
    CHECK(relerr(bessel_i(0.5, 1.0, 1e-16), 0.9376748882454876) < 1e-13);
}

TEST_CASE("I_{5/3} leading order near zero") {
    double x = 1e-4;
    double lead = std::pow(x / 2.0, kNu) / gamma_real(kNu + 1.0);
    CHECK(relerr(bessel_i(kNu, x, 1e-16), lead) < 2e-9);
}

TEST_CASE("I_{-5/3} dominates I_{5/3} for small x") {
    // the leading power x^{-5/3} dominates in magnitude; its sign is
    // that of Gamma(1-nu), negative here, and the sign of sin(nu pi)
    // flips it back so K stays positive
    for (double x : {0.01, 0.1, 0.5}) {
        double im = bessel_i(-kNu, x, 1e-15);
        double ip = bessel_i(kNu, x, 1e-15);
        CHECK(std::fabs(im) > std::fabs(ip));
        CHECK((im - ip) / sinpi(kNu) > 0.0);
    }
    CHECK_THROWS_AS(bessel_i(kNu, -1.0, 1e-15), DomainError);
}

TEST_CASE("K_{1/2} exact closed form") {
    // K_{1/2}(x) = sqrt(pi/(2x)) e^{-x}; the 2F0 terminates so the
    // asymptotic route is exact with a zero error estimate.
    for (double x : {0.4, 1.0, 7.0, 33.0}) {
        double want = std::sqrt(3.141592653589793 / (2.0 * x)) * std::exp(-x);
        auto a = bessel_k_asymptotic(0.5, x);
        CHECK(relerr(a.value, want) < 1e-14);
        CHECK(a.abs_error_estimate == 0.0);
    }
    auto c = bessel_k_convergent(0.5, 1.0, 1e-9);
    CHECK(relerr(c.value, 0.46106850444789454) < 1e-13);
    CHECK(c.regime == Regime::ClosedForm);
}

TEST_CASE("K_{3/2} exact closed form") {
    for (double x : {0.5, 2.0, 17.0}) {
        double want = std::sqrt(3.141592653589793 / (2.0 * x)) * std::exp(-x) * (1.0 + 1.0 / x);
        auto a = bessel_k_asymptotic(1.5, x);
        CHECK(relerr(a.value, want) < 1e-14);
        CHECK(a.abs_error_estimate == 0.0);
    }
}

TEST_CASE("convergent route against the quadrature oracle") {
    QuadratureConfig cfg;
    cfg.rel_tol = 1e-13;
    auto q = k_nu_quadrature(kNu, 1.0, cfg);
    auto c = bessel_k_convergent(kNu, 1.0, 1e-9);
    CHECK(std::fabs(c.value - q.value) <= c.abs_error_estimate + q.abs_error_estimate);
    CHECK(relerr(c.value, 1.0977307162471454) < 1e-12);  // frozen 50-digit value
}

TEST_CASE("symmetry under order negation") {
    for (double nu : {kNu, 0.7}) {
        for (double x : {0.3, 2.0}) {
            auto a = bessel_k_convergent(nu, x, 1e-6);
            auto b = bessel_k_convergent(-nu, x, 1e-6);
            CHECK(relerr(a.value, b.value) < 1e-15);
        }
    }
}

TEST_CASE("integer order is rejected") {
    CHECK_THROWS_AS(bessel_k_convergent(2.0, 1.0, 1e-9), OrderIsInteger);
    CHECK_THROWS_AS(bessel_k(3.0, 1.0, 1e-9), OrderIsInteger);
}

TEST_CASE("cancellation loss signalled and escalated") {
    CHECK_THROWS_AS(bessel_k_convergent(kNu, 30.0, 1e-9), CancellationLoss);
    // the dispatcher escalates to double-double instead
    auto r = bessel_k(kNu, 6.0, 1e-12);
    CHECK(r.regime == Regime::ClosedForm);
    CHECK(r.abs_error_estimate <= 1e-12 * r.value);
    QuadratureConfig cfg;
    cfg.rel_tol = 1e-13;
    auto q = k_nu_quadrature(kNu, 6.0, cfg);
    CHECK(std::fabs(r.value - q.value) <= r.abs_error_estimate + q.abs_error_estimate);
}

TEST_CASE("dispatcher regimes") {
    auto small = bessel_k(kNu, 0.1, 1e-9);
    CHECK(small.regime == Regime::ClosedForm);
    CHECK(relerr(small.value, 66.27266368254552) < 1e-12);  // frozen 50-digit value

    auto big = bessel_k(kNu, 30.0, 1e-9);
    CHECK(big.regime == Regime::LargeX);
    CHECK(big.abs_error_estimate < 1e-15 * big.value);
    CHECK(relerr(big.value, 2.2318364987525757e-14) < 1e-13);
}

TEST_CASE("route agreement across the crossover, scanned in steps of 0.01") {
    // wherever the dispatcher switches route between adjacent grid
    // points, the two routes agree at both points within combined
    // estimates
    double tol = 1e-9;
    Regime prev = bessel_k(kNu, 4.0, tol).regime;
    int switches = 0;
    for (double x = 4.01; x <= 12.0; x += 0.01) {
        Regime cur = bessel_k(kNu, x, tol).regime;
        if (cur != prev) {
            ++switches;
            auto a = bessel_k_asymptotic<DD>(DD(kNu), DD(x));
            auto c = detail::bessel_k_convergent_core<DD>(DD(5.0) / 3.0, DD(x));
            double gap = std::fabs(to_double(a.value - c.value));
            CHECK(gap <= to_double(a.abs_error_estimate) + to_double(c.estimate));
        }
        prev = cur;
    }
    CHECK(switches >= 1);
}

TEST_CASE("route agreement in extended precision on [2, 15]") {
    for (double x = 2.0; x <= 15.0; x += 1.0) {
        auto a = bessel_k_asymptotic<DD>(DD(5.0) / 3.0, DD(x));
        auto c = detail::bessel_k_convergent_core<DD>(DD(5.0) / 3.0, DD(x));
        double gap = std::fabs(to_double(a.value - c.value));
        CHECK(gap <= to_double(a.abs_error_estimate) + to_double(c.estimate));
    }
}

TEST_CASE("asymptotic coefficient generator in exact rationals") {
    auto u = bessel_k_asym_coefficients(Rational(5, 3), 3);
    CHECK(u[0] == Rational(1));
    CHECK(u[1] == Rational(91, 72));
    CHECK(u[2] == Rational(1729, 10368));
    // terminating order: every coefficient beyond u_0 vanishes
    auto v = bessel_k_asym_coefficients(Rational(1, 2), 3);
    CHECK(v[1] == Rational(0));
    CHECK(v[2] == Rational(0));
}
