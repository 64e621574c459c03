#pragma once

#include <stdexcept>
#include <string>

namespace depot_roster {

// Precondition violated by the caller (bad dimensions, bad parameters).
class contract_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Well-formed input that describes an inconsistent instance or solution.
class validation_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed file contents. The message names the offending field.
class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The exhaustive oracle refuses search spaces above its guard limit.
class search_space_error : public std::runtime_error {
 public:
  search_space_error(const std::string& what, double state_count)
      : std::runtime_error(what), state_count_(state_count) {}

  double state_count() const noexcept { return state_count_; }

 private:
  double state_count_;
};

}  // namespace depot_roster
