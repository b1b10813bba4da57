#pragma once

#include <stdexcept>
#include <string>

namespace qf {

// A fixed-width integer computation would have wrapped. Exactness is part of
// every contract here, so this is always thrown instead of wrapping silently.
class arithmetic_range_error : public std::runtime_error {
 public:
  explicit arithmetic_range_error(const std::string& msg)
      : std::runtime_error("arithmetic range: " + msg) {}
};

// Caller handed us something outside an operation's stated domain.
class invalid_input_error : public std::runtime_error {
 public:
  explicit invalid_input_error(const std::string& msg)
      : std::runtime_error("invalid input: " + msg) {}
};

// An exact re-verification of a produced result failed. This means a bug in
// the library (or a broken certificate), never bad user input.
class internal_consistency_error : public std::runtime_error {
 public:
  explicit internal_consistency_error(const std::string& msg)
      : std::runtime_error("internal consistency: " + msg) {}
};

}  // namespace qf
