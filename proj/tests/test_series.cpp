#include <doctest.h>

#include <cmath>
#include <vector>

#include "syncfn/gamma.hpp"
#include "syncfn/series.hpp"

using namespace syncfn;
using DD = DoubleDouble;

namespace {

double relerr(double got, double want) { return std::fabs(got - want) / std::fabs(want); }

// Direct summation with per-term gamma/pochhammer evaluation, the slow
// reference the recurrence is checked against.  Stops once terms are
// negligible so the per-term factors stay within double range.
template <class Real>
Real naive_1f2(Real a, Real b1, Real b2, Real z, int max_terms) {
    using std::fabs;
    Real sum{};
    for (int n = 0; n < max_terms; ++n) {
        Real t = pochhammer(a, n) / (pochhammer(b1, n) * pochhammer(b2, n));
        Real zp{1.0};
        for (int k = 0; k < n; ++k) zp = zp * z;
        t = t * zp / gamma_real(Real(double(n)) + Real(1.0));
        sum = sum + t;
        if (n > 4 && fabs(t) < Real(1e-22) * fabs(sum)) break;
    }
    return sum;
}

}  // namespace

TEST_CASE("0F1 reproduces cosine") {
    // cos(t) = 0F1(; 1/2; -t^2/4) at t = pi
    const double t = 3.141592653589793;
    HypParams<double> p;
    p.lower = {0.5};
    p.argument = -t * t / 4.0;
    auto out = hyp_convergent(p, 1e-15);
    CHECK(out.stopped_reason == StopReason::Converged);
    CHECK(std::fabs(out.value - (-1.0)) < 1e-13);
}

TEST_CASE("1F2 at zero argument is one") {
    HypParams<double> p;
    p.upper = {-1.0 / 3.0};
    p.lower = {-2.0 / 3.0, 2.0 / 3.0};
    p.argument = 0.0;
    auto out = hyp_convergent(p, 1e-15);
    CHECK(out.value == 1.0);
    CHECK(out.stopped_reason == StopReason::Converged);
}

TEST_CASE("1F2 against direct high-precision summation") {
    // z = 0.25^2/4; reference frozen from 50-digit direct summation
    DD z = DD(0.25) * DD(0.25) / DD(4.0);
    HypParams<DD> p;
    p.upper = {DD(-1.0) / 3.0};
    p.lower = {DD(-2.0) / 3.0, DD(2.0) / 3.0};
    p.argument = z;
    auto out = hyp_convergent(p, DD(1e-30));
    DD want{1.0118288818289598, 1.345171861229848e-17};
    CHECK(std::fabs(to_double(out.value - want)) < 1e-29);
    // and the in-test 200-term naive summation agrees
    DD naive = naive_1f2(DD(-1.0) / 3.0, DD(-2.0) / 3.0, DD(2.0) / 3.0, z, 200);
    CHECK(std::fabs(to_double(out.value - naive)) < 1e-28);
}

TEST_CASE("recurrence matches naive gamma-based terms to 12+ digits") {
    // parameter sets used by the synchrotron module, arguments in [0, 100]
    struct Set {
        double a, b1, b2;
    };
    const Set sets[] = {
        {-1.0 / 3.0, -2.0 / 3.0, 2.0 / 3.0},  // closed form, first piece
        {4.0 / 3.0, 8.0 / 3.0, 7.0 / 3.0},    // closed form, second piece
    };
    for (const Set& s : sets) {
        for (double z : {0.0, 0.5, 3.0, 20.0, 60.0, 100.0}) {
            HypParams<double> p;
            p.upper = {s.a};
            p.lower = {s.b1, s.b2};
            p.argument = z;
            auto fast = hyp_convergent(p, 1e-16);
            double slow = naive_1f2(s.a, s.b1, s.b2, z, 320);
            CHECK(relerr(fast.value, slow) < 1e-12);
        }
    }
}

TEST_CASE("convergence contract") {
    HypParams<double> p;
    p.upper = {0.7};
    p.lower = {1.3, 2.1};
    for (double z : {0.3, 5.0, 42.0}) {
        p.argument = z;
        double tol = 1e-12;
        auto out = hyp_convergent(p, tol);
        CHECK(out.stopped_reason == StopReason::Converged);
        CHECK(out.last_term_magnitude <= tol * std::fabs(out.value) + 1e-290);
        CHECK(out.terms_used >= 2);
        // idempotent
        auto again = hyp_convergent(p, tol);
        CHECK(again.value == out.value);
        CHECK(again.terms_used == out.terms_used);
    }
}

TEST_CASE("term cap raises MaxTermsExceeded") {
    HypParams<double> p;
    p.upper = {0.5};
    p.lower = {1.5, 2.5};
    p.argument = 400.0;
    CHECK_THROWS_AS(hyp_convergent(p, 1e-15, 8), MaxTermsExceeded);
}

TEST_CASE("shape and pole validation") {
    HypParams<double> bad;
    bad.upper = {1.0, 2.0};
    bad.lower = {3.0};
    bad.argument = 0.5;
    CHECK_THROWS_AS(hyp_convergent(bad, 1e-12), DomainError);

    HypParams<double> pole;
    pole.upper = {0.4};
    pole.lower = {-2.0, 0.9};
    pole.argument = 0.5;
    CHECK_THROWS_AS(hyp_convergent(pole, 1e-12), PoleError);

    // a terminating upper saves a deeper lower pole
    HypParams<double> saved;
    saved.upper = {-1.0};
    saved.lower = {-3.0, 0.9};
    saved.argument = 0.5;
    CHECK_NOTHROW(hyp_convergent(saved, 1e-12));
}

TEST_CASE("2F0 terminates exactly at nu = 1/2") {
    // upper {1/2-nu, 1/2+nu} with nu = 1/2 kills every n >= 1 term
    for (double x : {0.3, 1.0, 10.0, 500.0}) {
        HypParams<double> p;
        p.upper = {0.0, 1.0};
        p.argument = -1.0 / (2.0 * x);
        auto out = hyp_divergent_optimal(p);
        CHECK(out.value == 1.0);
        CHECK(out.stopped_reason == StopReason::Converged);
        CHECK(out.smallest_term_magnitude == 0.0);
    }
}

TEST_CASE("2F0 optimal truncation at nu = 5/3, x = 10") {
    HypParams<double> p;
    p.upper = {0.5 - 5.0 / 3.0, 0.5 + 5.0 / 3.0};
    p.argument = -1.0 / 20.0;
    auto out = hyp_divergent_optimal(p);
    CHECK(out.stopped_reason == StopReason::OptimalTruncation);
    // frozen from 50-digit quadrature: K_{5/3}(10) e^{10} sqrt(20/pi)
    double want = 1.127969803352975;
    CHECK(std::fabs(out.value - want) <= out.smallest_term_magnitude);
    // idempotent: identical reruns
    auto again = hyp_divergent_optimal(p);
    CHECK(again.value == out.value);
    CHECK(again.terms_used == out.terms_used);
    // last included term is larger than the smallest (excluded) one
    CHECK(out.last_term_magnitude >= out.smallest_term_magnitude);
}

TEST_CASE("2F0 first terms reproduce the printed correction polynomial") {
    // 1 + (4nu^2-1)/(8x) + (16nu^4-40nu^2+9)/(128x^2) + ...
    const double nu = 5.0 / 3.0;
    for (double x : {7.0, 19.5}) {
        double a1 = 0.5 - nu, a2 = 0.5 + nu, z = -1.0 / (2.0 * x);
        double t1 = a1 * a2 * z;
        double t2 = t1 * (a1 + 1.0) * (a2 + 1.0) * z / 2.0;
        double c1 = (4.0 * nu * nu - 1.0) / (8.0 * x);
        double c2 = (16.0 * std::pow(nu, 4) - 40.0 * nu * nu + 9.0) / (128.0 * x * x);
        CHECK(relerr(t1, c1) < 1e-15);
        CHECK(relerr(t2, c2) < 1e-15);
    }
}

TEST_CASE("2F0 immediate divergence") {
    HypParams<double> p;
    p.upper = {0.5 - 5.0 / 3.0, 0.5 + 5.0 / 3.0};
    p.argument = -1.0 / (2.0 * 0.1);  // x = 0.1
    CHECK_THROWS_AS(hyp_divergent_optimal(p), ImmediateDivergence);
    p.argument = 0.0;
    CHECK_THROWS_AS(hyp_divergent_optimal(p), DomainError);
}
