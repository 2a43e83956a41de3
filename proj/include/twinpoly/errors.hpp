#pragma once

#include <stdexcept>
#include <string>

namespace twinpoly {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid argument for the mathematical domain of an operation.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

// A configurable work budget was exhausted before the computation finished.
class BudgetError : public Error {
public:
    explicit BudgetError(const std::string& what) : Error(what) {}
};

// A self-check backed by a proved theorem failed. This signals an arithmetic
// bug in the implementation, never a mathematical discovery.
class TheoremContradiction : public Error {
public:
    explicit TheoremContradiction(const std::string& what) : Error(what) {}
};

// q-1 is a power of two (q = 2^n + 1), so the pigeonhole construction for
// twin prime pairs does not apply.
class NongenericFieldError : public DomainError {
public:
    explicit NongenericFieldError(const std::string& what) : DomainError(what) {}
};

// The supplied exponent is not a multiple of the multiplicative order.
class NotAMultipleError : public DomainError {
public:
    explicit NotAMultipleError(const std::string& what) : DomainError(what) {}
};

// A family whose hypotheses were not established cannot emit members.
class NotCertifiedError : public DomainError {
public:
    explicit NotCertifiedError(const std::string& what) : DomainError(what) {}
};

}  // namespace twinpoly
