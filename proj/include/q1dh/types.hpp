#pragma once

#include <stdexcept>
#include <string>

namespace q1dh {

/// Principal quantum number n >= 1. Labels every bound state.
class QuantumNumber {
public:
  explicit QuantumNumber(int n) : n_(n) {
    if (n < 1)
      throw std::invalid_argument("principal quantum number must be >= 1, got " + std::to_string(n));
  }

  int value() const noexcept { return n_; }
  double as_double() const noexcept { return static_cast<double>(n_); }

  friend bool operator==(QuantumNumber, QuantumNumber) = default;

private:
  int n_;
};

enum class Parity { even, odd };

/// Thrown when an adaptive integration exhausts its evaluation budget
/// before meeting the requested tolerance.
class NonConvergence : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace q1dh
