#pragma once

#include <stdexcept>
#include <string>

namespace selectorate {

/// Base class for everything this library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of an operation
/// (negative quantities, derivatives at zero, offers above the benchmark).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The parameters admit no feasible allocation with positive private goods.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

/// Root finding was asked to work on an interval without a sign change.
class BracketError : public Error {
 public:
  using Error::Error;
};

/// An iterative routine hit its iteration cap before meeting tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// A parameter set, sweep description or regime description violates its
/// structural invariants.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Gap-decay detection needs more successful rows than the input contains.
class InsufficientRowsError : public Error {
 public:
  using Error::Error;
};

}  // namespace selectorate
