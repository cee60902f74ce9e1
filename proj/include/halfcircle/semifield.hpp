#pragma once

// Exact semifield scalars. Tropical kinds use min as sum and ordinary
// addition as product; rat-pos is the positive rationals under the usual
// operations; trivial is the one-point semifield.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace halfcircle {

enum class SemifieldKind : std::uint8_t { TropInt, TropRat, RatPos, Trivial };

class SemifieldSpec {
 public:
  constexpr SemifieldSpec(SemifieldKind kind = SemifieldKind::TropInt) : kind_(kind) {}

  static SemifieldSpec parse(std::string_view name);

  constexpr SemifieldKind kind() const { return kind_; }
  std::string_view name() const;
  constexpr bool is_tropical() const {
    return kind_ == SemifieldKind::TropInt || kind_ == SemifieldKind::TropRat;
  }
  constexpr bool has_plus_part() const { return is_tropical(); }
  constexpr bool supports_halving() const { return kind_ == SemifieldKind::RatPos; }

  constexpr bool operator==(const SemifieldSpec&) const = default;

 private:
  SemifieldKind kind_;
};

/// Tagged exact scalar: an integer for trop-int, a rational for trop-rat,
/// a strictly positive rational for rat-pos, nothing for trivial.
class Scalar {
 public:
  Scalar() = default;  // the trivial unit

  static Scalar trop_int(const mpz_class& v);
  static Scalar trop_int(long v) { return trop_int(mpz_class(v)); }
  static Scalar trop_rat(const mpq_class& v);
  static Scalar rat_pos(const mpq_class& v);  // throws NotPositive
  static Scalar unit() { return Scalar(); }
  /// Embeds an ordinary number; integrality is enforced for trop-int.
  static Scalar from_rational(SemifieldSpec spec, const mpq_class& v);
  static Scalar parse(SemifieldSpec spec, std::string_view text);

  SemifieldSpec spec() const { return SemifieldSpec(kind_); }
  SemifieldKind kind() const { return kind_; }

  /// The underlying number (1 for trivial).
  mpq_class real() const;
  std::string str() const;

  bool operator==(const Scalar& other) const;

 private:
  SemifieldKind kind_ = SemifieldKind::Trivial;
  std::variant<std::monostate, mpz_class, mpq_class> value_;

  friend Scalar splus(const Scalar&, const Scalar&);
  friend Scalar sprod(const Scalar&, const Scalar&);
  friend Scalar sinv(const Scalar&);
};

Scalar splus(const Scalar& a, const Scalar& b);
Scalar sprod(const Scalar& a, const Scalar& b);
Scalar sinv(const Scalar& a);
inline Scalar sdiv(const Scalar& a, const Scalar& b) { return sprod(a, sinv(b)); }
Scalar sone(SemifieldSpec spec);
inline bool is_one(const Scalar& a) { return a == sone(a.spec()); }

bool in_plus_part(const Scalar& a);  // throws NoPlusPart
Scalar halve(const Scalar& a);       // throws Unsupported
Scalar to_trivial(const Scalar& a);

}  // namespace halfcircle
