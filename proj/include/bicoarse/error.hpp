#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bicoarse {

enum class ErrorKind {
  InvalidCharacter,
  RankExceeded,
  EmptyPattern,
  EmptyWord,
  OracleBoundExceeded,
  Unreached,
  BallTooLarge,
  InvalidPieceSet,
  InvalidBase,
  AsymmetricRule,
  InvalidRule,
  InfeasibleN,
  QContainsQ,
  NonPrimeInput,
  SampleNotClosed,
  InvalidInput,
};

std::string_view error_kind_name(ErrorKind kind) noexcept;

// Domain-level failure. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Parse failure carrying the offending character offset.
class InvalidCharacterError : public Error {
 public:
  InvalidCharacterError(std::size_t position, char c)
      : Error(ErrorKind::InvalidCharacter,
              "invalid character '" + std::string(1, c) + "' at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace bicoarse
