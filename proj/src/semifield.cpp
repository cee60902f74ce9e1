#include "halfcircle/semifield.hpp"

#include <algorithm>

#include "halfcircle/error.hpp"

namespace halfcircle {

SemifieldSpec SemifieldSpec::parse(std::string_view name) {
  if (name == "trop-int") return SemifieldKind::TropInt;
  if (name == "trop-rat") return SemifieldKind::TropRat;
  if (name == "rat-pos") return SemifieldKind::RatPos;
  if (name == "trivial") return SemifieldKind::Trivial;
  raise(Errc::ParseError, "unknown semifield '" + std::string(name) + "'");
}

std::string_view SemifieldSpec::name() const {
  switch (kind_) {
    case SemifieldKind::TropInt: return "trop-int";
    case SemifieldKind::TropRat: return "trop-rat";
    case SemifieldKind::RatPos: return "rat-pos";
    case SemifieldKind::Trivial: return "trivial";
  }
  return "?";
}

Scalar Scalar::trop_int(const mpz_class& v) {
  Scalar s;
  s.kind_ = SemifieldKind::TropInt;
  s.value_ = v;
  return s;
}

Scalar Scalar::trop_rat(const mpq_class& v) {
  Scalar s;
  s.kind_ = SemifieldKind::TropRat;
  mpq_class c = v;
  c.canonicalize();
  s.value_ = std::move(c);
  return s;
}

Scalar Scalar::rat_pos(const mpq_class& v) {
  if (sgn(v) <= 0) raise(Errc::NotPositive, v.get_str() + " is not > 0");
  Scalar s;
  s.kind_ = SemifieldKind::RatPos;
  mpq_class c = v;
  c.canonicalize();
  s.value_ = std::move(c);
  return s;
}

Scalar Scalar::from_rational(SemifieldSpec spec, const mpq_class& v) {
  switch (spec.kind()) {
    case SemifieldKind::TropInt:
      if (v.get_den() != 1) raise(Errc::ParseError, v.get_str() + " is not an integer");
      return trop_int(v.get_num());
    case SemifieldKind::TropRat: return trop_rat(v);
    case SemifieldKind::RatPos: return rat_pos(v);
    case SemifieldKind::Trivial:
      if (v != 1) raise(Errc::ParseError, "the trivial semifield only contains 1");
      return unit();
  }
  return unit();
}

Scalar Scalar::parse(SemifieldSpec spec, std::string_view text_in) {
  std::string text(text_in);
  // Accept U+2212 MINUS SIGN as well as '-'.
  if (text.rfind("\xE2\x88\x92", 0) == 0) text = "-" + text.substr(3);
  if (text.empty() || text.find_first_of(" \t") != std::string::npos)
    raise(Errc::ParseError, "bad scalar '" + std::string(text_in) + "'");
  const auto slash = text.find('/');
  auto valid_int = [](std::string_view s) {
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  const bool ok = slash == std::string::npos
                      ? valid_int(text)
                      : valid_int(std::string_view(text).substr(0, slash)) &&
                            valid_int(std::string_view(text).substr(slash + 1)) &&
                            text[slash + 1] != '-' && text[slash + 1] != '+';
  if (!ok) raise(Errc::ParseError, "bad scalar '" + std::string(text_in) + "'");
  if (text[0] == '+') text.erase(0, 1);
  mpq_class v;
  if (v.set_str(text, 10) != 0) raise(Errc::ParseError, "bad scalar '" + std::string(text_in) + "'");
  if (v.get_den() == 0) raise(Errc::ParseError, "zero denominator in '" + std::string(text_in) + "'");
  v.canonicalize();
  if (spec.kind() == SemifieldKind::TropInt && slash != std::string::npos)
    raise(Errc::ParseError, "trop-int scalars are integers, got '" + std::string(text_in) + "'");
  return from_rational(spec, v);
}

mpq_class Scalar::real() const {
  switch (kind_) {
    case SemifieldKind::TropInt: return mpq_class(std::get<mpz_class>(value_));
    case SemifieldKind::TropRat:
    case SemifieldKind::RatPos: return std::get<mpq_class>(value_);
    case SemifieldKind::Trivial: return 1;
  }
  return 1;
}

std::string Scalar::str() const {
  switch (kind_) {
    case SemifieldKind::TropInt: return std::get<mpz_class>(value_).get_str();
    case SemifieldKind::TropRat:
    case SemifieldKind::RatPos: return std::get<mpq_class>(value_).get_str();
    case SemifieldKind::Trivial: return "1";
  }
  return "?";
}

bool Scalar::operator==(const Scalar& other) const {
  if (kind_ != other.kind_) return false;
  switch (kind_) {
    case SemifieldKind::TropInt: return std::get<mpz_class>(value_) == std::get<mpz_class>(other.value_);
    case SemifieldKind::TropRat:
    case SemifieldKind::RatPos: return std::get<mpq_class>(value_) == std::get<mpq_class>(other.value_);
    case SemifieldKind::Trivial: return true;
  }
  return false;
}

namespace {

void require_same(const Scalar& a, const Scalar& b) {
  if (a.kind() != b.kind())
    raise(Errc::MixedSemifields,
          std::string(a.spec().name()) + " with " + std::string(b.spec().name()));
}

}  // namespace

Scalar splus(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  switch (a.kind_) {
    case SemifieldKind::TropInt: {
      const auto& x = std::get<mpz_class>(a.value_);
      const auto& y = std::get<mpz_class>(b.value_);
      return x <= y ? a : b;
    }
    case SemifieldKind::TropRat: {
      const auto& x = std::get<mpq_class>(a.value_);
      const auto& y = std::get<mpq_class>(b.value_);
      return x <= y ? a : b;
    }
    case SemifieldKind::RatPos: {
      Scalar s = a;
      std::get<mpq_class>(s.value_) += std::get<mpq_class>(b.value_);
      return s;
    }
    case SemifieldKind::Trivial: return a;
  }
  return a;
}

Scalar sprod(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  Scalar s = a;
  switch (a.kind_) {
    case SemifieldKind::TropInt:
      std::get<mpz_class>(s.value_) += std::get<mpz_class>(b.value_);
      break;
    case SemifieldKind::TropRat:
      std::get<mpq_class>(s.value_) += std::get<mpq_class>(b.value_);
      break;
    case SemifieldKind::RatPos:
      std::get<mpq_class>(s.value_) *= std::get<mpq_class>(b.value_);
      break;
    case SemifieldKind::Trivial: break;
  }
  return s;
}

Scalar sinv(const Scalar& a) {
  Scalar s = a;
  switch (a.kind_) {
    case SemifieldKind::TropInt: {
      auto& v = std::get<mpz_class>(s.value_);
      v = -v;
      break;
    }
    case SemifieldKind::TropRat: {
      auto& v = std::get<mpq_class>(s.value_);
      v = -v;
      break;
    }
    case SemifieldKind::RatPos: {
      auto& v = std::get<mpq_class>(s.value_);
      v = 1 / v;
      break;
    }
    case SemifieldKind::Trivial: break;
  }
  return s;
}

Scalar sone(SemifieldSpec spec) {
  switch (spec.kind()) {
    case SemifieldKind::TropInt: return Scalar::trop_int(0L);
    case SemifieldKind::TropRat: return Scalar::trop_rat(0);
    case SemifieldKind::RatPos: return Scalar::rat_pos(1);
    case SemifieldKind::Trivial: return Scalar::unit();
  }
  return Scalar::unit();
}

bool in_plus_part(const Scalar& a) {
  if (!a.spec().has_plus_part())
    raise(Errc::NoPlusPart, std::string(a.spec().name()) + " has no plus part");
  return sgn(a.real()) >= 0;
}

Scalar halve(const Scalar& a) {
  if (!a.spec().supports_halving())
    raise(Errc::Unsupported, "halving is defined for rat-pos only");
  return Scalar::rat_pos(a.real() / 2);
}

Scalar to_trivial(const Scalar&) { return Scalar::unit(); }

}  // namespace halfcircle
