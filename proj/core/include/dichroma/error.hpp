#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace dichroma {

enum class Errc {
  LoopArc,
  DuplicateArc,
  IndexOutOfRange,
  InvalidPartition,
  Disconnected,
  PartialColouring,
  BudgetExceeded,
  NotDipolar,
  InvalidInput,
  BadK,
  MissingArc,
  PreconditionViolated,
  BadEmbeddingOrder,
  MissingDigon,
  UnsupportedK,
  ParityViolated,
  TooFewParts,
  BadVertex,
  SizeCapExceeded,
  NotStrong,
  NotOriented,
  EvenD,
  NotRegular,
  OddK,
  BadParameters,
  FallbackToExact,
  SyntaxError,
  SemanticError,
  UsageError,
  Internal,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);
  Errc code() const { return code_; }

 private:
  Errc code_;
};

// Raised by exponential searches that ran out of nodes. Bounds are on the
// quantity being optimised; upper is absent when no feasible solution was seen.
class BudgetExceededError : public Error {
 public:
  BudgetExceededError(const std::string& what, int lower, std::optional<int> upper);
  int lower() const { return lower_; }
  std::optional<int> upper() const { return upper_; }

 private:
  int lower_;
  std::optional<int> upper_;
};

// Node budget shared by the exponential routines. A limit of 0 means unlimited.
class Budget {
 public:
  Budget() = default;
  explicit Budget(std::uint64_t limit) : limit_(limit) {}
  static Budget unlimited() { return Budget(); }

  // Returns false once the limit has been reached.
  bool tick() {
    ++used_;
    return limit_ == 0 || used_ <= limit_;
  }
  bool exhausted() const { return limit_ != 0 && used_ > limit_; }
  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_ = 0;
  std::uint64_t used_ = 0;
};

}  // namespace dichroma
