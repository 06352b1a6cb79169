#pragma once

#include <stdexcept>
#include <string>

namespace bzeta {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input outside the mathematical domain of an operation.
class DomainError : public Error {
public:
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Evaluation requested at (or too close to) a pole.
class PoleError : public Error {
public:
  explicit PoleError(const std::string& msg) : Error(msg) {}
};

// A series cannot meet the requested tolerance in its convergence region.
class ConvergenceError : public Error {
public:
  explicit ConvergenceError(const std::string& msg) : Error(msg) {}
};

// Lattice-shift reduction failed to land in the target region.
class ReductionError : public Error {
public:
  explicit ReductionError(const std::string& msg) : Error(msg) {}
};

// Integer parameter outside the supported range.
class RangeError : public Error {
public:
  explicit RangeError(const std::string& msg) : Error(msg) {}
};

// An infinite product hit a factor that is exactly zero.
class ZeroFactorError : public Error {
public:
  explicit ZeroFactorError(const std::string& msg) : Error(msg) {}
};

// A geometric predicate was asked about a point within the boundary margin;
// the strict classification would be numerically meaningless.
class BoundaryError : public Error {
public:
  explicit BoundaryError(const std::string& msg) : Error(msg) {}
};

} // namespace bzeta
