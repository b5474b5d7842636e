#pragma once

#include <stdexcept>
#include <string>

namespace syncfn {

// Base class for every failure the library reports.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Gamma requested at zero or a negative integer.
class PoleError : public Error {
public:
    using Error::Error;
};

// Argument outside an operation's domain.
class DomainError : public Error {
public:
    using Error::Error;
};

// A convergent series failed to reach tolerance within the term cap.
class MaxTermsExceeded : public Error {
public:
    using Error::Error;
};

// Second term of a divergent series already exceeds the first; no
// useful optimal truncation exists at this argument.
class ImmediateDivergence : public Error {
public:
    using Error::Error;
};

// The I_{+nu}/I_{-nu} combination for K_nu is undefined at integer order.
class OrderIsInteger : public Error {
public:
    using Error::Error;
};

// The result emerged from the difference of large terms and the
// cancellation estimate exceeds the requested tolerance.  Carries the
// computed value and its estimate so callers can escalate precision.
class CancellationLoss : public Error {
public:
    CancellationLoss(const std::string& what, double value, double estimate)
        : Error(what), value_(value), estimate_(estimate) {}

    double value() const noexcept { return value_; }
    double estimate() const noexcept { return estimate_; }

private:
    double value_;
    double estimate_;
};

// Adaptive quadrature hit its subdivision limit before the tolerance.
class ToleranceNotMet : public Error {
public:
    using Error::Error;
};

}  // namespace syncfn
