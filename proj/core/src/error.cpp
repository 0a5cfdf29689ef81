#include "tower/error.hpp"

namespace tower {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::EmptyFamily: return "EmptyFamily";
    case Errc::SizeLimit: return "SizeLimit";
    case Errc::NotAPair: return "NotAPair";
    case Errc::NotANatural: return "NotANatural";
    case Errc::CarrierMismatch: return "CarrierMismatch";
    case Errc::BadExponent: return "BadExponent";
    case Errc::UnknownAtom: return "UnknownAtom";
    case Errc::NotEquivalence: return "NotEquivalence";
    case Errc::NotPreordering: return "NotPreordering";
    case Errc::NotOrdering: return "NotOrdering";
    case Errc::NotWellOrdering: return "NotWellOrdering";
    case Errc::NonTotalMap: return "NonTotalMap";
    case Errc::Underflow: return "Underflow";
    case Errc::BadOrder: return "BadOrder";
    case Errc::NegativeInput: return "NegativeInput";
    case Errc::EmptyList: return "EmptyList";
    case Errc::NotBoundedAwayFromZero: return "NotBoundedAwayFromZero";
    case Errc::EmptyBlock: return "EmptyBlock";
    case Errc::EmptyCarrier: return "EmptyCarrier";
    case Errc::ParseError: return "ParseError";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::DivisionNearZero: return "DivisionNearZero";
    case Errc::PrecisionCap: return "PrecisionCap";
  }
  return "Unknown";
}

}  // namespace tower
