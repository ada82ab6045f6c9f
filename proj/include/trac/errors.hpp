#pragma once

#include <stdexcept>
#include <string>

namespace trac {

// Input or state fails a documented precondition (bad axis norm, bad n,
// malformed file, out-of-range target...). CLI maps these to exit code 1.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

class InvalidAxisError : public ValidationError {
public:
    explicit InvalidAxisError(const std::string& what) : ValidationError(what) {}
};

// Conditioning on an outcome of probability zero.
class NullEventError : public ValidationError {
public:
    explicit NullEventError(const std::string& what) : ValidationError(what) {}
};

class InvalidScenarioError : public ValidationError {
public:
    explicit InvalidScenarioError(const std::string& what) : ValidationError(what) {}
};

// Request is well-formed but outside the supported exhaustive-search range.
class ResourceLimitError : public ValidationError {
public:
    explicit ResourceLimitError(const std::string& what) : ValidationError(what) {}
};

// Constraint set admits no solution (e.g. K target outside the feasible range).
class InfeasibleError : public ValidationError {
public:
    explicit InfeasibleError(const std::string& what) : ValidationError(what) {}
};

// Numerical failure inside the LP solver (iteration limit, lost feasibility).
// CLI maps these to exit code 2.
class SolverError : public std::runtime_error {
public:
    explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace trac
