#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "tuhyper/ids.hpp"

namespace tuhyper {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed documents, dangling ids, invalid selections.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// Two proper (size >= 4) edges share a vertex.
class NotDisjoint : public InvalidInput {
 public:
  NotDisjoint(EdgeId first, EdgeId second, const std::string& what)
      : InvalidInput(what), first_(first), second_(second) {}
  [[nodiscard]] EdgeId first() const noexcept { return first_; }
  [[nodiscard]] EdgeId second() const noexcept { return second_; }

 private:
  EdgeId first_;
  EdgeId second_;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

// Desk-scale size guard (enumeration would be too large).
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

// Search node budget exhausted; never reported as "no witness".
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// A checked proof step failed. Carries the name of the step.
class InternalConsistencyError : public Error {
 public:
  InternalConsistencyError(std::string step, const std::string& detail)
      : Error(step + ": " + detail), step_(std::move(step)) {}
  [[nodiscard]] const std::string& step() const noexcept { return step_; }

 private:
  std::string step_;
};

}  // namespace tuhyper
