#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace stp {

// Malformed or out-of-contract input (unknown label, bad partition, ...).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Text that could not be parsed as an edge list or a system file.
class ParseError : public InputError {
 public:
  using InputError::InputError;
};

// The graph has no spanning tree.
class DisconnectedError : public InputError {
 public:
  using InputError::InputError;
};

// An enumeration would exceed its configured bound.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Some spanning tree violates an inequality that was claimed valid.
class ValidityError : public std::runtime_error {
 public:
  ValidityError(const std::string& what, std::vector<int> violating_tree)
      : std::runtime_error(what), violating_tree_(std::move(violating_tree)) {}

  const std::vector<int>& violating_tree() const { return violating_tree_; }

 private:
  std::vector<int> violating_tree_;
};

}  // namespace stp
