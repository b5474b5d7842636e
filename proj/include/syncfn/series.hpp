#pragma once

// Generalized hypergeometric series summation for the shapes this
// library needs: convergent 0F1 / 1F2 summed to tolerance, and the
// formally divergent 2F0 summed under optimal truncation (stop just
// before the smallest term; that term bounds the error).
//
// Terms are generated by the ratio recurrence
//   t_{n+1} = t_n * prod(a_i + n) / prod(b_j + n) * z / (n + 1),
// never by per-term gamma calls, and accumulated with compensated
// summation.

#include <cmath>
#include <string>
#include <vector>

#include "syncfn/double_double.hpp"
#include "syncfn/errors.hpp"

namespace syncfn {

enum class StopReason { Converged, OptimalTruncation, MaxTerms };

template <class Real>
struct HypParams {
    std::vector<Real> upper;
    std::vector<Real> lower;
    Real argument{};
};

template <class Real>
struct SeriesOutcome {
    Real value{};
    int terms_used = 0;
    Real last_term_magnitude{};
    Real smallest_term_magnitude{};
    StopReason stopped_reason = StopReason::Converged;
};

namespace detail {

template <class Real>
struct KahanSum {
    Real sum{};
    Real comp{};
    void add(const Real& v) {
        Real y = v - comp;
        Real t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

// A lower parameter that is zero or a negative integer makes (b)_n hit
// zero unless an upper parameter terminates the series strictly first.
template <class Real>
void check_lower_poles(const HypParams<Real>& p) {
    int stop = -1;  // first index with a zero term due to a terminating upper
    for (const Real& a : p.upper) {
        double ad = to_double(a);
        if (ad <= 0.0 && is_integer_value(a)) {
            int n = int(-ad) + 1;
            if (stop < 0 || n < stop) stop = n;
        }
    }
    for (const Real& b : p.lower) {
        double bd = to_double(b);
        if (bd <= 0.0 && is_integer_value(b)) {
            int pole = int(-bd) + 1;
            if (stop < 0 || pole < stop)
                throw PoleError("hypergeometric series: lower parameter " +
                                std::to_string(bd) + " is a nonpositive integer");
        }
    }
}

}  // namespace detail

// Sums a series with q = p + 1 (infinite radius of convergence).
// Stops once two consecutive terms fall below rel_tol * |partial sum|.
template <class Real>
SeriesOutcome<Real> hyp_convergent(const HypParams<Real>& p, Real rel_tol,
                                   int max_terms = 10000) {
    using std::fabs;
    const std::size_t np = p.upper.size(), nq = p.lower.size();
    if (!((np == 0 && nq == 1) || (np == 1 && nq == 2)))
        throw DomainError("hyp_convergent: supported shapes are 0F1 and 1F2");
    detail::check_lower_poles(p);

    detail::KahanSum<Real> acc;
    Real term{1.0};
    acc.add(term);
    Real prev_mag{1.0};
    Real smallest{1.0};
    SeriesOutcome<Real> out;
    for (int n = 0; n < max_terms; ++n) {
        Real num{1.0}, den{1.0};
        for (const Real& a : p.upper) num = num * (a + Real(double(n)));
        for (const Real& b : p.lower) den = den * (b + Real(double(n)));
        term = term * num / den * p.argument / Real(double(n + 1));
        acc.add(term);
        Real mag = fabs(term);
        if (mag < smallest) smallest = mag;
        Real thresh = rel_tol * fabs(acc.sum) + Real(numeric<Real>::tiny);
        if (mag <= thresh && prev_mag <= thresh) {
            out.value = acc.sum;
            out.terms_used = n + 2;
            out.last_term_magnitude = mag;
            out.smallest_term_magnitude = smallest;
            out.stopped_reason = StopReason::Converged;
            return out;
        }
        prev_mag = mag;
    }
    throw MaxTermsExceeded("hyp_convergent: no convergence within " +
                           std::to_string(max_terms) + " terms");
}

// Sums a 2F0 series under optimal truncation.  The returned partial sum
// excludes the smallest-magnitude term, whose magnitude is reported as
// the error estimate; terms_used is the index of that smallest term.
// A series that terminates exactly (an upper parameter is a nonpositive
// integer) is summed completely and reported as Converged with a zero
// estimate.
template <class Real>
SeriesOutcome<Real> hyp_divergent_optimal(const HypParams<Real>& p,
                                          int max_terms = 10000) {
    using std::fabs;
    if (p.upper.size() != 2 || !p.lower.empty())
        throw DomainError("hyp_divergent_optimal: shape must be 2F0");
    if (to_double(p.argument) == 0.0)
        throw DomainError("hyp_divergent_optimal: argument must be nonzero");

    // A nonpositive-integer upper parameter terminates the series; the
    // finite sum is exact for every argument, so monotonicity of the
    // terms is irrelevant there.
    int finite_terms = -1;
    for (const Real& a : p.upper) {
        double ad = to_double(a);
        if (ad <= 0.0 && is_integer_value(a)) {
            int n = int(-ad) + 1;
            if (finite_terms < 0 || n < finite_terms) finite_terms = n;
        }
    }
    if (finite_terms > 0) {
        detail::KahanSum<Real> acc;
        Real term{1.0};
        for (int i = 0; i < finite_terms; ++i) {
            acc.add(term);
            term = term * (p.upper[0] + Real(double(i))) * (p.upper[1] + Real(double(i))) *
                   p.argument / Real(double(i + 1));
        }
        SeriesOutcome<Real> out;
        out.value = acc.sum;
        out.terms_used = finite_terms;
        out.last_term_magnitude = Real(0.0);
        out.smallest_term_magnitude = Real(0.0);
        out.stopped_reason = StopReason::Converged;
        return out;
    }

    detail::KahanSum<Real> acc;
    Real term{1.0};  // current term t_i, not yet accumulated
    Real included_mag{1.0};
    for (int i = 0; i < max_terms; ++i) {
        Real next = term * (p.upper[0] + Real(double(i))) *
                    (p.upper[1] + Real(double(i))) * p.argument / Real(double(i + 1));
        if (to_double(next) == 0.0) {
            acc.add(term);
            SeriesOutcome<Real> out;
            out.value = acc.sum;
            out.terms_used = i + 1;
            out.last_term_magnitude = Real(0.0);
            out.smallest_term_magnitude = Real(0.0);
            out.stopped_reason = StopReason::Converged;
            return out;
        }
        if (fabs(next) >= fabs(term)) {
            if (i == 0)
                throw ImmediateDivergence(
                    "hyp_divergent_optimal: second term exceeds the first; "
                    "argument too large for useful truncation");
            SeriesOutcome<Real> out;
            out.value = acc.sum;  // t_0 .. t_{i-1}; t_i is the smallest, excluded
            out.terms_used = i;
            out.last_term_magnitude = included_mag;
            out.smallest_term_magnitude = fabs(term);
            out.stopped_reason = StopReason::OptimalTruncation;
            return out;
        }
        acc.add(term);
        included_mag = fabs(term);
        term = next;
    }
    throw MaxTermsExceeded("hyp_divergent_optimal: term cap reached");
}

}  // namespace syncfn
