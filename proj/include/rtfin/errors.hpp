#pragma once

#include <stdexcept>
#include <string>

namespace rtfin {

// Caller violated a documented precondition (bad level, color, index...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A quantum integer in a denominator vanishes at the chosen embedding.
class DivisionByZeroQuantumInteger : public std::domain_error {
 public:
  DivisionByZeroQuantumInteger(int n, int k, int p, std::string context = {});

  int index() const noexcept { return n_; }
  int embedding() const noexcept { return k_; }
  int level() const noexcept { return p_; }
  const std::string& context() const noexcept { return context_; }

 private:
  int n_;
  int k_;
  int p_;
  std::string context_;
};

// An internal consistency check failed.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace rtfin
