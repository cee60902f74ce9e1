#include <random>

#include "doctest.h"
#include "halfcircle/error.hpp"
#include "halfcircle/sampling.hpp"
#include "halfcircle/semifield.hpp"

using namespace halfcircle;

namespace {

const SemifieldSpec kTI = SemifieldKind::TropInt, kTR = SemifieldKind::TropRat,
                    kRP = SemifieldKind::RatPos, kTV = SemifieldKind::Trivial;

Scalar ti(long v) { return Scalar::trop_int(v); }
Scalar rp(long n, long d = 1) { return Scalar::rat_pos(mpq_class(n, d)); }
Scalar tr(long n, long d = 1) { return Scalar::trop_rat(mpq_class(n, d)); }

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return Errc::InternalAssertion;
}

}  // namespace

TEST_CASE("splus") {
  CHECK(splus(ti(2), ti(5)) == ti(2));
  CHECK(splus(rp(1), rp(1, 2)) == rp(3, 2));
  CHECK(splus(Scalar::unit(), Scalar::unit()) == Scalar::unit());
  CHECK(splus(tr(-1, 3), tr(1, 2)) == tr(-1, 3));
  CHECK(code_of([] { splus(ti(1), tr(1)); }) == Errc::MixedSemifields);
}

TEST_CASE("sprod, sinv, sone") {
  CHECK(sprod(ti(2), ti(5)) == ti(7));
  CHECK(sinv(ti(3)) == ti(-3));
  CHECK(sone(kTI) == ti(0));
  CHECK(sprod(rp(2, 3), rp(3, 4)) == rp(1, 2));
  CHECK(sinv(rp(2, 3)) == rp(3, 2));
  CHECK(sone(kRP) == rp(1));
  CHECK(sone(kTV) == Scalar::unit());
  for (const Scalar& a : {ti(-4), tr(7, 2), rp(5, 9), Scalar::unit()})
    CHECK(sprod(a, sone(a.spec())) == a);
  CHECK(code_of([] { sprod(rp(1), ti(1)); }) == Errc::MixedSemifields);
}

TEST_CASE("in_plus_part") {
  CHECK(in_plus_part(ti(0)));
  CHECK_FALSE(in_plus_part(ti(-1)));
  CHECK(in_plus_part(tr(7, 2)));
  CHECK_FALSE(in_plus_part(tr(-1, 5)));
  CHECK(code_of([] { in_plus_part(rp(1)); }) == Errc::NoPlusPart);
  CHECK(code_of([] { in_plus_part(Scalar::unit()); }) == Errc::NoPlusPart);
}

TEST_CASE("halve") {
  CHECK(halve(rp(1)) == rp(1, 2));
  CHECK(halve(rp(2, 3)) == rp(1, 3));
  const Scalar x = halve(rp(5, 7));
  CHECK(splus(x, x) == rp(5, 7));
  CHECK(code_of([] { halve(ti(4)); }) == Errc::Unsupported);
  CHECK(code_of([] { halve(tr(4)); }) == Errc::Unsupported);
}

TEST_CASE("to_trivial") {
  CHECK(to_trivial(ti(5)) == Scalar::unit());
  CHECK(to_trivial(rp(2, 3)) == Scalar::unit());
  CHECK(to_trivial(Scalar::unit()) == Scalar::unit());
}

TEST_CASE("construction and parsing") {
  CHECK(code_of([] { Scalar::rat_pos(0); }) == Errc::NotPositive);
  CHECK(code_of([] { Scalar::rat_pos(mpq_class(-1, 2)); }) == Errc::NotPositive);
  CHECK(Scalar::parse(kTI, "-3") == ti(-3));
  CHECK(Scalar::parse(kTI, "\xE2\x88\x92" "3") == ti(-3));  // U+2212
  CHECK(Scalar::parse(kTR, "7/2") == tr(7, 2));
  CHECK(Scalar::parse(kTR, "14/4") == tr(7, 2));
  CHECK(Scalar::parse(kRP, "3/8") == rp(3, 8));
  CHECK(Scalar::parse(kTR, "7/2").str() == "7/2");
  CHECK(Scalar::parse(kTR, "6/3").str() == "2");
  CHECK(code_of([] { Scalar::parse(kTI, "7/2"); }) == Errc::ParseError);
  CHECK(code_of([] { Scalar::parse(kTI, "x"); }) == Errc::ParseError);
  CHECK(code_of([] { Scalar::parse(kTR, "1/0"); }) == Errc::ParseError);
  CHECK(code_of([] { Scalar::parse(kTR, "1/-2"); }) == Errc::ParseError);
  CHECK(code_of([] { Scalar::parse(kTR, ""); }) == Errc::ParseError);
  CHECK(code_of([] { Scalar::parse(kRP, "0"); }) == Errc::NotPositive);
  CHECK(code_of([] { SemifieldSpec::parse("min-plus"); }) == Errc::ParseError);
  CHECK(Scalar::from_rational(kTI, 5) == ti(5));
  CHECK_THROWS_AS(Scalar::from_rational(kTI, mpq_class(1, 2)), Error);

  // Arbitrary precision.
  const Scalar big = Scalar::parse(kTI, "123456789012345678901234567890");
  CHECK(sprod(big, sinv(big)) == ti(0));
  CHECK(sprod(big, ti(1)).str() == "123456789012345678901234567891");
}

TEST_CASE("spec flags") {
  CHECK(kTI.is_tropical());
  CHECK(kTR.has_plus_part());
  CHECK_FALSE(kRP.has_plus_part());
  CHECK(kRP.supports_halving());
  CHECK_FALSE(kTV.is_tropical());
  for (const char* n : {"trop-int", "trop-rat", "rat-pos", "trivial"})
    CHECK(SemifieldSpec::parse(n).name() == n);
}

TEST_CASE("semifield axioms on random triples") {
  std::mt19937_64 rng(2024);
  for (SemifieldSpec spec : {kTI, kTR, kRP, kTV}) {
    for (int t = 0; t < 500; ++t) {
      const Scalar a = random_scalar(spec, rng, -100, 100), b = random_scalar(spec, rng, -100, 100),
                   c = random_scalar(spec, rng, -100, 100);
      CHECK(splus(splus(a, b), c) == splus(a, splus(b, c)));
      CHECK(splus(a, b) == splus(b, a));
      CHECK(sprod(sprod(a, b), c) == sprod(a, sprod(b, c)));
      CHECK(sprod(a, b) == sprod(b, a));
      CHECK(sprod(a, splus(b, c)) == splus(sprod(a, b), sprod(a, c)));
      CHECK(sprod(a, sinv(a)) == sone(spec));
      CHECK(to_trivial(splus(a, b)) == splus(to_trivial(a), to_trivial(b)));
      CHECK(to_trivial(sprod(a, b)) == sprod(to_trivial(a), to_trivial(b)));
      if (spec.is_tropical()) {
        // min and + on the underlying numbers.
        CHECK(splus(a, b).real() == std::min(a.real(), b.real()));
        CHECK(sprod(a, b).real() == a.real() + b.real());
      }
      if (spec.kind() == SemifieldKind::RatPos) {
        CHECK(splus(a, b).real() == a.real() + b.real());
        CHECK(sprod(a, b).real() == a.real() * b.real());
      }
    }
  }
}

TEST_CASE("plus part is closed under both operations") {
  std::mt19937_64 rng(99);
  for (SemifieldSpec spec : {kTI, kTR}) {
    for (int t = 0; t < 500; ++t) {
      const Scalar a = random_scalar(spec, rng, 0, 100), b = random_scalar(spec, rng, 0, 100);
      CHECK(in_plus_part(splus(a, b)));
      CHECK(in_plus_part(sprod(a, b)));
    }
  }
}
