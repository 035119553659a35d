#pragma once

#include <stdexcept>
#include <string>

namespace structree {

/// Malformed or out-of-contract input (unknown vertex, empty cut side, ...).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A search or closure exceeded its configured budget.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& budget_name, std::size_t budget, const std::string& what)
      : std::runtime_error(what + " (budget " + budget_name + "=" + std::to_string(budget) + ")"),
        budget_name_(budget_name),
        budget_(budget) {}

  const std::string& budget_name() const { return budget_name_; }
  std::size_t budget() const { return budget_; }

 private:
  std::string budget_name_;
  std::size_t budget_;
};

/// An axiom that must hold after construction was found violated.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Some object is not contained in any cut of the tree set.
class CoverageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace structree
