#pragma once

#include <stdexcept>
#include <string>

namespace superext {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual const char* kind() const noexcept { return "error"; }
};

// Malformed input, broken precondition, or an axiom violation.
class ValidationError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "validation_error"; }
};

class GuardExceeded : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "guard_exceeded"; }
};

// Two independent computations of the same quantity disagree.
class OracleMismatch : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "oracle_mismatch"; }
};

class IndecomposableDetected : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "indecomposable_detected"; }
};

class SplitFieldFailure : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "split_field_failure"; }
};

class NormalizationFailure : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "normalization_failure"; }
};

class NonDiagonalizable : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "non_diagonalizable"; }
};

}  // namespace superext
