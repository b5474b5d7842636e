#pragma once

#include "syncfn/double_double.hpp"

namespace syncfn {

// Which route produced a value.
enum class Regime { ClosedForm, SmallX, LargeX, Oracle };

enum class Precision { Double, Extended };

inline const char* regime_name(Regime r) {
    switch (r) {
        case Regime::ClosedForm: return "closed_form";
        case Regime::SmallX: return "small_x";
        case Regime::LargeX: return "large_x";
        case Regime::Oracle: return "oracle";
    }
    return "?";
}

template <class Real>
struct EvalResultT {
    Real value{};
    Regime regime = Regime::ClosedForm;
    int order_used = 0;
    Real abs_error_estimate{};
};

using EvalResult = EvalResultT<double>;

inline EvalResult narrow(const EvalResultT<DoubleDouble>& r) {
    return {to_double(r.value), r.regime, r.order_used, to_double(r.abs_error_estimate)};
}

inline EvalResult narrow(const EvalResult& r) { return r; }

}  // namespace syncfn
