#pragma once

#include <stdexcept>
#include <string>

namespace cuspcal {

// Base for all domain-level failures. code() is a stable machine-readable tag
// used by the CLI diagnostics; what() carries the human-readable detail.
class Error : public std::runtime_error {
public:
    explicit Error(std::string message) : std::runtime_error(std::move(message)) {}
    virtual const char* code() const noexcept { return "error"; }
};

class DimensionMismatchError : public Error {
public:
    using Error::Error;
    const char* code() const noexcept override { return "dimension-mismatch"; }
};

class SingularMatrixError : public Error {
public:
    using Error::Error;
    const char* code() const noexcept override { return "singular-matrix"; }
};

class UnknownComponentError : public Error {
public:
    using Error::Error;
    const char* code() const noexcept override { return "unknown-component"; }
};

// Raised where the twig/inductance calculus degenerates because the divisor
// itself is a rational chain.
class ChainGraphError : public Error {
public:
    using Error::Error;
    const char* code() const noexcept override { return "whole-graph-is-chain"; }
};

class PairSequenceError : public Error {
public:
    using Error::Error;
    const char* code() const noexcept override { return "invalid-pair-sequence"; }
};

// Raised when a graph is not the exceptional tower of a point resolution
// (zero or multiple (-1)-curves at some contraction stage, tangency, ...).
class TowerError : public Error {
public:
    using Error::Error;
    const char* code() const noexcept override { return "not-a-resolution-tower"; }
};

class UnboundedSystemError : public Error {
public:
    using Error::Error;
    const char* code() const noexcept override { return "unbounded-system"; }
};

class DomainError : public Error {
public:
    using Error::Error;
    const char* code() const noexcept override { return "domain-error"; }
};

} // namespace cuspcal
