#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tower {

/// Failure categories reported by every module of the library.
enum class Errc {
  EmptyFamily,
  SizeLimit,
  NotAPair,
  NotANatural,
  CarrierMismatch,
  BadExponent,
  UnknownAtom,
  NotEquivalence,
  NotPreordering,
  NotOrdering,
  NotWellOrdering,
  NonTotalMap,
  Underflow,
  BadOrder,
  NegativeInput,
  EmptyList,
  NotBoundedAwayFromZero,
  EmptyBlock,
  EmptyCarrier,
  ParseError,
  SyntaxError,
  DivisionNearZero,
  PrecisionCap,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace tower
