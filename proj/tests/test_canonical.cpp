#include <random>

#include "doctest.h"
#include "halfcircle/canonical.hpp"
#include "halfcircle/error.hpp"
#include "halfcircle/io.hpp"
#include "halfcircle/sampling.hpp"

using namespace halfcircle;

namespace {

const SemifieldSpec kTI = SemifieldKind::TropInt, kTR = SemifieldKind::TropRat;

MonoidElement E(const std::string& line) { return parse_element(line); }
CanonicalCoords C(const std::string& line) { return parse_canonical(line); }

std::vector<Scalar> ints(std::initializer_list<long> xs) {
  std::vector<Scalar> out;
  for (long x : xs) out.push_back(Scalar::trop_int(x));
  return out;
}

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

TEST_CASE("peel examples") {
  auto a2 = build_graph("A2");
  const Word ii = parse_word(*a2, "1 2 1");
  const PeelTrace t = peel(ii, E("A2 | trop-int | 1 2 1 | 2 5 3"));
  CHECK(t.c == ints({2, 8, 5}));
  CHECK(t.nodes.size() == 4);
  CHECK(t.nodes.back() == base_point(a2, kTI));
  for (std::size_t k = 0; k < 3; ++k)
    CHECK(t.nodes[k + 1] == shift(ii[k], sinv(t.c[k]), t.nodes[k]));

  CHECK(peel(ii, base_point(a2, kTI)).c == ints({0, 0, 0}));
  CHECK(peel(ii, E("A2 | trop-int | 1 2 1 | 1 1 0")).c == ints({1, 1, 1}));
  auto d4 = build_graph("D4");
  CHECK(peel(d4->longest_element().reference_word(), base_point(d4, kTR)).c ==
        std::vector<Scalar>(12, Scalar::trop_rat(0)));
}

TEST_CASE("peel preconditions") {
  auto a2 = build_graph("A2");
  const Word ii = parse_word(*a2, "1 2 1");
  CHECK(code_of([&] { peel(ii, E("A2 | trop-int | 1 2 1 | -1 0 0")); }) == Errc::NotInPlusPart);
  CHECK(code_of([&] { peel(ii, E("A2 | rat-pos | 1 2 1 | 1 1 1")); }) == Errc::NoPlusPart);
  CHECK(code_of([&] { peel(parse_word(*a2, "1 2"), E("A2 | trop-int | 1 2 1 | 0 0 0")); }) ==
        Errc::DifferentElements);
  CHECK(code_of([&] { peel(ii, E("A2 | trop-int | 1 2 | 0 0")); }) == Errc::DifferentElements);
  CHECK(code_of([&] { peel(parse_word(*a2, "1 1 2"), E("A2 | trop-int | 1 2 1 | 0 0 0")); }) ==
        Errc::NotReduced);
}

TEST_CASE("reconstruct examples") {
  CHECK(reconstruct(C("A2 | trop-int | ii: 1 2 1 | c: 1 1 1")) == E("A2 | trop-int | 1 2 1 | 1 1 0"));
  CHECK(reconstruct(C("A2 | trop-int | ii: 1 2 1 | c: 0 0 0")) ==
        base_point(build_graph("A2"), kTI));

  const MonoidElement input = E("A3 | trop-int | 2 3 1 2 3 1 | 1 4 2 3 5 7");
  // Peeling over (j,k,i,j,k,i) gives (1,12,6,9,2,4); the tuple
  // (1,6,12,9,4,2) obtained from the printed closed form is a different
  // point of the image.
  CHECK(reconstruct(C("A3 | trop-int | ii: 2 3 1 2 3 1 | c: 1 12 6 9 2 4")) == input);
  CHECK_FALSE(reconstruct(C("A3 | trop-int | ii: 2 3 1 2 3 1 | c: 1 6 12 9 4 2")) == input);
  CHECK(in_image(C("A3 | trop-int | ii: 2 3 1 2 3 1 | c: 1 6 12 9 4 2")));

  CHECK(code_of([] { reconstruct(C("A2 | trop-int | ii: 1 2 1 | c: 1 -1 1")); }) ==
        Errc::NotInPlusPart);
  CHECK(code_of([] { C("A2 | trop-int | ii: 1 2 1 | c: 1 1"); }) == Errc::LengthMismatch);
}

TEST_CASE("member") {
  CHECK(in_image(C("A2 | trop-int | ii: 1 2 1 | c: 2 8 5")));
  CHECK_FALSE(in_image(C("A2 | trop-int | ii: 1 2 1 | c: 0 1 2")));
  CHECK(peel(parse_word(*build_graph("A2"), "1 2 1"),
             reconstruct(C("A2 | trop-int | ii: 1 2 1 | c: 0 1 2"))).c == ints({1, 1, 1}));
  CHECK(in_image(C("A3 | trop-rat | ii: 1 2 1 3 2 1 | c: 0 0 0 0 0 0")));
  CHECK_FALSE(in_image(C("A2 | trop-int | ii: 1 2 1 | c: 2 -8 5")));
}

TEST_CASE("closed forms at the worked instances") {
  auto ti = [](long v) { return Scalar::trop_int(v); };
  CHECK(closed_form_a2(ti(2), ti(5), ti(3)).c == ints({2, 8, 5}));
  CHECK(closed_form_a3_w1(ti(1), ti(4), ti(2), ti(3), ti(5), ti(7)).c == ints({1, 6, 12, 9, 4, 2}));
  CHECK(closed_form_a3_w2(ti(1), ti(4), ti(2), ti(3), ti(5), ti(7)).c == ints({1, 6, 4, 15, 8, 3}));
  CHECK(code_of([&] { closed_form_a2(ti(-1), ti(0), ti(0)); }) == Errc::NotInPlusPart);
  CHECK(code_of([&] { closed_form_a2(ti(1), Scalar::trop_rat(0), ti(0)); }) ==
        Errc::MixedSemifields);
}

TEST_CASE("fixture words") {
  CHECK(format_word(*fixture_graph(Fixture::A2), fixture_word(Fixture::A2)) == "1 2 1");
  CHECK(format_word(*fixture_graph(Fixture::A3Middle), fixture_word(Fixture::A3Middle)) ==
        "2 3 1 2 3 1");
  CHECK(format_word(*fixture_graph(Fixture::A3End), fixture_word(Fixture::A3End)) == "1 2 1 3 2 1");
}

TEST_CASE("image inequalities") {
  CHECK(image_inequalities(Fixture::A2, C("A2 | trop-int | ii: 1 2 1 | c: 2 8 5")));
  CHECK(image_inequalities(Fixture::A3Middle,
                           C("A3 | trop-int | ii: 2 3 1 2 3 1 | c: 1 6 12 9 4 2")));
  const CanonicalCoords end = C("A3 | trop-int | ii: 1 2 1 3 2 1 | c: 1 6 4 15 8 3");
  CHECK(image_inequalities(Fixture::A3End, end));
  // The condition epsilon >= gamma would reject this image point.
  CHECK(end.c[1].real() < end.c[3].real());
  CHECK(in_image(end));
  CHECK(code_of([] {
          image_inequalities(Fixture::A2, C("A3 | trop-int | ii: 1 2 1 3 2 1 | c: 0 0 0 0 0 0"));
        }) == Errc::UnsupportedFixture);
  CHECK(code_of([] {
          image_inequalities(Fixture::A3End, C("A3 | trop-int | ii: 2 3 1 2 3 1 | c: 0 0 0 0 0 0"));
        }) == Errc::UnsupportedFixture);
}

TEST_CASE("fixtures agree with peeling on random inputs") {
  std::mt19937_64 rng(15);
  for (int t = 0; t < 300; ++t) {
    const SemifieldSpec spec = t % 2 ? kTI : kTR;
    std::vector<Scalar> x;
    for (int k = 0; k < 6; ++k) x.push_back(random_scalar(spec, rng, 0, 100));
    auto element = [&](Fixture f, std::size_t n) {
      return from_word(fixture_graph(f), spec, fixture_word(f),
                       std::vector<Scalar>(x.begin(), x.begin() + static_cast<long>(n)));
    };
    const auto a2 = peel(fixture_word(Fixture::A2), element(Fixture::A2, 3)).coords();
    CHECK(a2 == closed_form_a2(x[0], x[1], x[2]));
    CHECK(image_inequalities(Fixture::A2, a2));

    const auto end = peel(fixture_word(Fixture::A3End), element(Fixture::A3End, 6)).coords();
    CHECK(end == closed_form_a3_w2(x[0], x[1], x[2], x[3], x[4], x[5]));
    CHECK(image_inequalities(Fixture::A3End, end));

    const auto mid = peel(fixture_word(Fixture::A3Middle), element(Fixture::A3Middle, 6)).coords();
    std::vector<Scalar> swapped = closed_form_a3_w1(x[0], x[1], x[2], x[3], x[4], x[5]).c;
    std::swap(swapped[1], swapped[2]);
    std::swap(swapped[4], swapped[5]);
    CHECK(mid.c == swapped);
    CHECK(image_inequalities(Fixture::A3Middle, mid));
  }
}

TEST_CASE("image inequalities agree with membership") {
  std::mt19937_64 rng(16);
  int inside = 0, outside = 0;
  for (int t = 0; t < 400; ++t) {
    for (Fixture f : {Fixture::A2, Fixture::A3Middle, Fixture::A3End}) {
      CanonicalCoords cc{fixture_graph(f), t % 2 ? kTI : kTR, fixture_word(f), {}};
      for (std::size_t k = 0; k < cc.ii.size(); ++k)
        cc.c.push_back(random_scalar(cc.spec, rng, 0, 8));
      const bool member = in_image(cc);
      (member ? inside : outside) += 1;
      INFO(describe(cc));
      CHECK(image_inequalities(f, cc) == member);
    }
  }
  CHECK(inside > 50);
  CHECK(outside > 50);
}

TEST_CASE("round trip on A2, exhaustive over a small grid") {
  auto a2 = build_graph("A2");
  const auto charts = enumerate_reduced_words(a2->longest_element());
  for (const Word& chart : charts) {
    for (const Word& ii : charts) {
      for (long a = 0; a <= 2; ++a)
        for (long b = 0; b <= 2; ++b)
          for (long c = 0; c <= 2; ++c) {
            const MonoidElement H = from_word(a2, kTI, chart, ints({a, b, c}));
            const PeelTrace t = peel(ii, H);
            CHECK(reconstruct(t.coords()) == H);
          }
    }
  }
}

TEST_CASE("round trip, strict positivity and injectivity on A3 and D4") {
  std::mt19937_64 rng(17);
  for (const char* type : {"A3", "D4"}) {
    auto g = build_graph(type);
    const WeylElement& w0 = g->longest_element();
    for (int t = 0; t < 150; ++t) {
      const SemifieldSpec spec = t % 2 ? kTI : kTR;
      const Word ii = random_reduced_word(w0, rng);
      const MonoidElement H = random_plus_point(g, spec, rng, 20, 0.3);
      const PeelTrace tr = peel(ii, H);
      CHECK(reconstruct(tr.coords()) == H);
      CHECK(in_image(tr.coords()));

      const MonoidElement P = random_element(g, spec, w0, rng, 1, 20);
      REQUIRE(zero_pattern(P) == g->identity());
      for (const Scalar& c : peel(ii, P).c) CHECK(sgn(c.real()) > 0);

      const MonoidElement a = random_plus_point(g, kTI, rng, 1, 0.4);
      const MonoidElement b = random_plus_point(g, kTI, rng, 1, 0.4);
      CHECK((a == b) == (peel(ii, a).c == peel(ii, b).c));
    }
  }
}

TEST_CASE("canonical coordinates text form") {
  const CanonicalCoords cc = C("A3 | trop-int | ii: 2 3 1 2 3 1 | c: 1 6 12 9 4 2");
  CHECK(describe(cc) == "A3 | trop-int | ii: 2 3 1 2 3 1 | c: 1 6 12 9 4 2");
}
