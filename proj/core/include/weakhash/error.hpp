#ifndef WEAKHASH_ERROR_HPP
#define WEAKHASH_ERROR_HPP

#include <stdexcept>
#include <string>

namespace weakhash {

// Malformed or out-of-domain arguments: dimension mismatch, negative radius,
// non-positive epsilon, a radius sitting on an atom sphere, etc.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Brute-force routines refuse instances beyond their enumeration budget.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A user-supplied function returned NaN or infinity at an atom.
class EvaluationError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An iterative procedure exhausted its iteration budget.
class IterationCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace weakhash

#endif  // WEAKHASH_ERROR_HPP
