#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace srbm {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or out-of-contract input (non-finite floats, bad parse, shape
/// mismatch, invalid problem data).
class InputError : public Error {
public:
    explicit InputError(const std::string& what) : Error(what) {}
};

/// A strict float-mode comparison fell inside the tolerance band; the
/// decision is deliberately not made.
class IndeterminateError : public Error {
public:
    explicit IndeterminateError(const std::string& what) : Error(what) {}
};

/// Contract violation by the caller (operation invoked outside its stated
/// precondition).
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what) : Error(what) {}
};

/// A principal subsystem of the complementarity problem is singular but
/// consistent, so a continuum of solutions exists on that support.
/// Indices are 0-based.
class DegenerateRayError : public Error {
public:
    DegenerateRayError(const std::string& what, std::vector<int> support)
        : Error(what), support(std::move(support)) {}
    std::vector<int> support;
};

/// A divergent complementarity solution matched none of the five category
/// patterns. Unreachable when the necessary stability condition holds.
class UnclassifiedSolutionError : public Error {
public:
    explicit UnclassifiedSolutionError(const std::string& what) : Error(what) {}
};

/// The one-step reflection subproblem admitted no feasible support in
/// float arithmetic.
class StepInfeasibleError : public Error {
public:
    explicit StepInfeasibleError(const std::string& what) : Error(what) {}
};

}  // namespace srbm
