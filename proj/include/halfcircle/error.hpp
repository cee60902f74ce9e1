#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace halfcircle {

enum class Errc {
  NotSimplyLacedFinite,
  NotADescent,
  DifferentElements,
  TooLarge,
  MixedSemifields,
  NoPlusPart,
  Unsupported,
  NotPositive,
  NotReduced,
  LengthMismatch,
  NotInPlusPart,
  InternalAssertion,
  UnsupportedFixture,
  SpecMismatch,
  ParseError,
};

std::string_view errc_name(Errc code) noexcept;

// Every failure raised by the library carries one of the codes above so
// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void raise(Errc code, const std::string& detail = {});

}  // namespace halfcircle
