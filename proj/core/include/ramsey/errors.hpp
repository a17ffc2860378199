#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ramsey {

using Index = std::uint32_t;

/// Malformed or out-of-contract input (bad indices, cycles, non-associative
/// tables, unsupported Coxeter types, ...).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured size limit was hit before a computation finished.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(const std::string& what, std::size_t reached)
      : std::runtime_error(what), reached_(reached) {}

  /// How far the computation got (elements found, candidates counted, ...).
  std::size_t reached() const noexcept { return reached_; }

 private:
  std::size_t reached_;
};

/// The cover relation handed to `FinitePoset::from_covers` contains a cycle.
class CycleError : public InputError {
 public:
  CycleError(const std::string& what, std::vector<Index> cycle)
      : InputError(what), cycle_(std::move(cycle)) {}

  const std::vector<Index>& cycle() const noexcept { return cycle_; }

 private:
  std::vector<Index> cycle_;
};

}  // namespace ramsey
