#ifndef NCPH_ERROR_HPP
#define NCPH_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ncph {

// Base of every exception thrown by the library. The C API maps each
// subclass onto a distinct status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed algebraic input: reducible polynomial, bad isolating interval,
// division by zero, singular matrix.
class AlgebraError : public Error {
 public:
  using Error::Error;
};

// Coxeter matrix that is malformed or not of finite type.
class DiagramError : public Error {
 public:
  using Error::Error;
};

// A configured size bound (group cap, simplex budget) was hit.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// An identity that must hold by construction failed. Indicates an upstream
// bug or a wrong diagram.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace ncph

#endif  // NCPH_ERROR_HPP
