#include "halfcircle/error.hpp"

namespace halfcircle {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotSimplyLacedFinite: return "NotSimplyLacedFinite";
    case Errc::NotADescent: return "NotADescent";
    case Errc::DifferentElements: return "DifferentElements";
    case Errc::TooLarge: return "TooLarge";
    case Errc::MixedSemifields: return "MixedSemifields";
    case Errc::NoPlusPart: return "NoPlusPart";
    case Errc::Unsupported: return "Unsupported";
    case Errc::NotPositive: return "NotPositive";
    case Errc::NotReduced: return "NotReduced";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::NotInPlusPart: return "NotInPlusPart";
    case Errc::InternalAssertion: return "InternalAssertion";
    case Errc::UnsupportedFixture: return "UnsupportedFixture";
    case Errc::SpecMismatch: return "SpecMismatch";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

std::string compose(Errc code, const std::string& detail) {
  std::string msg(errc_name(code));
  if (!detail.empty()) {
    msg += ": ";
    msg += detail;
  }
  return msg;
}

}  // namespace

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(compose(code, detail)), code_(code) {}

void raise(Errc code, const std::string& detail) { throw Error(code, detail); }

}  // namespace halfcircle
