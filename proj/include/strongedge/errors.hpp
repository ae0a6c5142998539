#pragma once

#include <stdexcept>
#include <string>

namespace strongedge {

/// Malformed input text (edge lists, list assignments, rotations, ...).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// A caller-side contract violation (bad parameters, unmet preconditions).
class PreconditionError : public std::invalid_argument {
public:
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

/// A step that the theory guarantees cannot fail has failed: this signals a
/// bug in this library, never bad input. `details` carries a reproduction
/// bundle (serialized instance + step description).
class InternalInvariantError : public std::logic_error {
public:
    InternalInvariantError(const std::string& what, std::string details_)
        : std::logic_error(what), details(std::move(details_)) {}
    explicit InternalInvariantError(const std::string& what) : std::logic_error(what) {}
    std::string details;
};

/// The planar 10-list algorithm reached a cubic girth-6 core, which cannot
/// happen for planar inputs: the caller's planarity assertion was wrong.
class PremiseViolatedError : public std::runtime_error {
public:
    explicit PremiseViolatedError(const std::string& what) : std::runtime_error(what) {}
};

/// Exact integer arithmetic would overflow the coefficient representation.
class OverflowError : public std::overflow_error {
public:
    explicit OverflowError(const std::string& what) : std::overflow_error(what) {}
};

/// A bounded search ran out of its node budget (distinct from "no solution").
class BudgetExhaustedError : public std::runtime_error {
public:
    explicit BudgetExhaustedError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace strongedge
