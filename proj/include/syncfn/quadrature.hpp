#pragma once

// Adaptive panel integration with a nested Clenshaw-Curtis 17/33 pair.
// The 17-point rule reuses every other node of the 33-point rule, so a
// panel costs 33 evaluations and the pair difference gives its error
// estimate.  Nodes cos(k pi / n) and the classic interpolatory weights
// are computed in the working precision, which is what lets the same
// engine run in double-double.
//
// Integrands return a QuadSample so a value computed with its own
// uncertainty (e.g. an inner quadrature) can propagate that channel:
// the engine integrates |error| alongside the value.

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "syncfn/double_double.hpp"
#include "syncfn/errors.hpp"

namespace syncfn {

enum class TailPolicy { FixedUpper, ExponentialBound };

struct QuadratureConfig {
    double abs_tol = 0.0;
    double rel_tol = 1e-12;
    int max_subdivisions = 4000;
    TailPolicy tail_policy = TailPolicy::ExponentialBound;
    double tail_upper = 0.0;   // FixedUpper: truncate the t-integral here
    double tail_eps = 1e-16;   // ExponentialBound: relative tail budget
};

inline void validate(const QuadratureConfig& cfg) {
    if (!(cfg.abs_tol > 0.0 || cfg.rel_tol > 0.0))
        throw DomainError("QuadratureConfig: need abs_tol > 0 or rel_tol > 0");
    if (cfg.max_subdivisions <= 0 || cfg.max_subdivisions > 10000)
        throw DomainError("QuadratureConfig: max_subdivisions must be in (0, 10000]");
    if (cfg.tail_policy == TailPolicy::ExponentialBound && !(cfg.tail_eps > 0.0))
        throw DomainError("QuadratureConfig: tail_eps must be positive");
}

template <class Real>
struct QuadSample {
    Real value{};
    Real error{};
};

template <class Real>
struct QuadResult {
    Real value{};
    Real rule_error{};       // accumulated pair differences
    Real inherited_error{};  // integral of the integrand's error channel
    int panels = 0;
};

namespace detail {

template <class Real>
struct CCRule {
    std::array<Real, 33> node;  // cos(k pi / 32), k = 0..32
    std::array<Real, 33> w33;
    std::array<Real, 17> w17;

    static const CCRule& get() {
        static const CCRule rule = make();
        return rule;
    }

    static CCRule make() {
        CCRule r;
        for (int k = 0; k <= 32; ++k) r.node[k] = cospi(Real(double(k)) / Real(32.0));
        fill_weights<33>(r.w33);
        fill_weights<17>(r.w17);
        return r;
    }

    // w_k = (c_k/n) [1 - 2 sum_{j=1}^{n/2} cos(2 j theta_k)/(4j^2-1)],
    // last term halved; c_k = 1 at the ends, 2 inside.
    template <int NP>
    static void fill_weights(std::array<Real, NP>& w) {
        const int n = NP - 1;
        for (int k = 0; k <= n; ++k) {
            Real s{};
            for (int j = 1; j <= n / 2; ++j) {
                Real c = cospi(Real(double(2 * j * k)) / Real(double(n)));
                Real t = c / Real(double(4 * j * j - 1));
                if (j == n / 2) t = t * Real(0.5);
                s = s + t;
            }
            Real ck = (k == 0 || k == n) ? Real(1.0) : Real(2.0);
            w[std::size_t(k)] = ck / Real(double(n)) * (Real(1.0) - Real(2.0) * s);
        }
    }
};

template <class Real>
struct Panel {
    Real a{}, b{};
    Real value{};
    Real err{};
    Real inh{};
};

template <class Real, class F>
Panel<Real> eval_panel(F& f, Real a, Real b) {
    using std::fabs;
    const auto& rule = CCRule<Real>::get();
    Real c = (a + b) * Real(0.5);
    Real h = (b - a) * Real(0.5);
    std::array<QuadSample<Real>, 33> v;
    for (int k = 0; k <= 32; ++k) v[std::size_t(k)] = f(c + h * rule.node[std::size_t(k)]);
    Real s33{}, s17{}, inh{};
    for (int k = 0; k <= 32; ++k) {
        s33 = s33 + rule.w33[std::size_t(k)] * v[std::size_t(k)].value;
        inh = inh + rule.w33[std::size_t(k)] * fabs(v[std::size_t(k)].error);
    }
    for (int k = 0; k <= 16; ++k)
        s17 = s17 + rule.w17[std::size_t(k)] * v[std::size_t(2 * k)].value;
    Panel<Real> p;
    p.a = a;
    p.b = b;
    p.value = h * s33;
    p.err = fabs(h * (s33 - s17));
    p.inh = h * inh;
    return p;
}

}  // namespace detail

template <class Real, class F>
QuadResult<Real> integrate_adaptive(F&& f, Real a, Real b, Real abs_tol, Real rel_tol,
                                    int max_panels) {
    using std::fabs;
    std::vector<detail::Panel<Real>> panels;
    panels.push_back(detail::eval_panel(f, a, b));
    while (true) {
        Real total{}, err{};
        std::size_t worst = 0;
        for (std::size_t i = 0; i < panels.size(); ++i) {
            total = total + panels[i].value;
            err = err + panels[i].err;
            if (panels[i].err > panels[worst].err) worst = i;
        }
        Real goal = abs_tol;
        Real rel_goal = rel_tol * fabs(total);
        if (rel_goal > goal) goal = rel_goal;
        if (err <= goal || to_double(panels[worst].err) == 0.0) {
            QuadResult<Real> out;
            out.panels = int(panels.size());
            for (const auto& p : panels) {
                out.value = out.value + p.value;
                out.rule_error = out.rule_error + p.err;
                out.inherited_error = out.inherited_error + p.inh;
            }
            return out;
        }
        if (int(panels.size()) >= max_panels)
            throw ToleranceNotMet("integrate_adaptive: " + std::to_string(panels.size()) +
                                  " panels without reaching tolerance");
        detail::Panel<Real> old = panels[worst];
        Real mid = (old.a + old.b) * Real(0.5);
        panels[worst] = detail::eval_panel(f, old.a, mid);
        panels.push_back(detail::eval_panel(f, mid, old.b));
    }
}

}  // namespace syncfn
