#pragma once

#include <stdexcept>
#include <string>

namespace invharm {

// Parameter combinations outside an operation's documented range.
class InvalidArguments : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input is well formed but lies outside the domain of a map.
class DomainViolation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ShapeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SizeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidMatrix : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotInImage : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The oracle refused a job above its configured size cap.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A construction produced an object violating an invariant that the
// combinatorics guarantees. Always indicates a bug or a misreading.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace invharm
