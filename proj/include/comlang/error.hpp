#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace comlang {

enum class ErrorKind {
  StateBlowup,
  AlphabetMismatch,
  LetterNotInAlphabet,
  NotCommutative,
  EmptyProjectionAlphabet,
  HypothesisViolation,
  NotCoprime,
  PreconditionViolation,
  PartitionAlphabetMismatch,
  NotClosedUnderPartition,
  UnreachableState,
  LengthMismatch,
  NotDistinctPrimes,
  SyntaxError,
  UndeclaredLetter,
  InvalidAutomaton,
  InvalidFormat,
};

std::string_view to_string(ErrorKind kind);

/// Domain error raised by every library operation. The kind is stable and
/// machine readable; `value()` carries an optional number such as the
/// determinization guard or a source position.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<std::uint64_t> value = std::nullopt)
      : std::runtime_error(message), kind_(kind), value_(value) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::uint64_t> value() const noexcept { return value_; }

 private:
  ErrorKind kind_;
  std::optional<std::uint64_t> value_;
};

}  // namespace comlang
