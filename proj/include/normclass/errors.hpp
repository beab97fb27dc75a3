#pragma once

#include <stdexcept>
#include <string>

namespace normclass {

/// Arithmetic domain violation, e.g. division by zero.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The input does not satisfy the hypotheses of the requested construction.
class HypothesisViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Independent generic draws disagreed on every allowed retry.
class GenericityExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotZeroDimensional : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnsupportedPoint : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A closed-form evaluation was requested on incomplete data.
class NotCertified : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace normclass
