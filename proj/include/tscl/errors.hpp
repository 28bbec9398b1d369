#pragma once

#include <stdexcept>

namespace tscl {

// Bad input text or file data. Reported by the CLI with exit code 2.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The rotation-number search ran past its mediant budget or denominator cap.
// Reported by the CLI with exit code 3.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Central-extension elements of different levels were combined.
// Reported by the CLI with exit code 4.
class LevelMismatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tscl
