#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "davenport/group.hpp"

namespace davenport {

enum class ErrorKind {
  EmptyGroup,
  BadOrder,
  RankMismatch,
  BudgetExceeded,
  BadParams,
  PreconditionFailed,
  Overflow,
  ParseError,
  PGroup,
  PrimePower,
  NoAdmissibleEll,
  BadPartition,
  Internal,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Thrown when a search or table would exceed its configured limit. Searches
// attach the best lower bound established before giving up.
class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(const std::string& what)
      : Error(ErrorKind::BudgetExceeded, what) {}
  BudgetExceeded(const std::string& what, std::int64_t lower_bound,
                 GSequence witness)
      : Error(ErrorKind::BudgetExceeded, what),
        lower_bound_(lower_bound),
        witness_(std::move(witness)) {}

  std::optional<std::int64_t> lower_bound() const { return lower_bound_; }
  const std::optional<GSequence>& witness() const { return witness_; }

 private:
  std::optional<std::int64_t> lower_bound_;
  std::optional<GSequence> witness_;
};

}  // namespace davenport
