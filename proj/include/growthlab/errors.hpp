#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace growthlab {

/// Operands from different fields/groups, malformed literals, bad flags.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

/// A documented hypothesis of an operation does not hold for the input.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A size cap or work budget was exceeded. `partial_sizes` carries whatever
/// was computed before giving up (e.g. |A^1|, ..., |A^j|).
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what, std::vector<std::uint64_t> partial = {})
      : std::runtime_error(what), partial_sizes(std::move(partial)) {}

  std::vector<std::uint64_t> partial_sizes;
};

}  // namespace growthlab
