#pragma once

#include <stdexcept>
#include <string>

namespace nradii {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Rejected input: inadmissible coefficient triple, order below the
/// admissibility threshold, Q(nu) = 0, beta outside [0,1), or a
/// normalization/order combination the radius equations do not cover.
class InvalidParameters : public Error {
public:
    using Error::Error;
};

/// A series did not converge within the configured term budget.
class TruncationFailure : public Error {
public:
    using Error::Error;
};

/// A zero scan reached its ceiling with fewer zeros than requested.
class ScanExhausted : public Error {
public:
    using Error::Error;
};

/// A ratio denominator vanished (evaluation too close to a series zero).
class ZeroDenominator : public Error {
public:
    using Error::Error;
};

/// Q(2n+nu) vanished inside the coefficient recurrence. Cannot happen for
/// orders at or above the admissibility threshold; reachable only for
/// contexts constructed with allow_unverified.
class DegenerateCoefficient : public Error {
public:
    using Error::Error;
};

}  // namespace nradii
