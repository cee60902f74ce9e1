#include <random>

#include "doctest.h"
#include "halfcircle/error.hpp"
#include "halfcircle/io.hpp"
#include "halfcircle/sampling.hpp"

using namespace halfcircle;

namespace {

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

TEST_CASE("element text form") {
  const MonoidElement e = parse_element("  A3 | trop-int | 2 3 1 2 3 1 | 1 4 2 3 5 7 \r");
  CHECK(format_element(e) == "A3 | trop-int | 2 3 1 2 3 1 | 1 4 2 3 5 7");
  CHECK(format_element(parse_element("A2 | trop-rat | 1 2 | -1/2 \xE2\x88\x92" "3")) ==
        "A2 | trop-rat | 1 2 | -1/2 -3");
  CHECK(format_element(parse_element("A2 | trop-int |  | ")) == "A2 | trop-int |  |");
  const MonoidElement x = parse_element("letters: a b c; edges: a-b, b-c | rat-pos | b a | 1/2 3");
  CHECK(x.graph().rank() == 3);
  CHECK(parse_element(format_element(x)) == x);
}

TEST_CASE("element parse errors") {
  CHECK(code_of([] { parse_element("A3 | trop-int | 1 2"); }) == Errc::ParseError);
  CHECK(code_of([] { parse_element("A3 | trop-int | 1 9 | 0 0"); }) == Errc::ParseError);
  CHECK(code_of([] { parse_element("A3 | tropical | 1 | 0"); }) == Errc::ParseError);
  CHECK(code_of([] { parse_element("Z3 | trop-int | 1 | 0"); }) == Errc::ParseError);
  CHECK(code_of([] { parse_element("A3 | trop-int | 1 | 1/2"); }) == Errc::ParseError);
  CHECK(code_of([] { parse_element("{\"type\": \"A2\""); }) == Errc::ParseError);
  CHECK(code_of([] { parse_element(R"({"type":"A2","semifield":"trop-int","word":["1"]})"); }) ==
        Errc::ParseError);
  CHECK(code_of([] { parse_element("A3 | trop-int | 1 1 | 0 0"); }) == Errc::NotReduced);
  CHECK(code_of([] { parse_element("A3 | trop-int | 1 2 | 0"); }) == Errc::LengthMismatch);
}

TEST_CASE("element JSON form") {
  const MonoidElement e = parse_element(
      R"({"type":"A3","semifield":"trop-int","word":[2,3,1,2,3,1],"coords":[1,4,2,3,5,7]})");
  CHECK(format_element(e) == "A3 | trop-int | 2 3 1 2 3 1 | 1 4 2 3 5 7");
  const auto j = element_to_json(e);
  CHECK(j.dump() ==
        R"({"coords":["1","4","2","3","5","7"],"semifield":"trop-int","type":"A3","word":["2","3","1","2","3","1"]})");
  CHECK(element_from_json(j) == e);
}

TEST_CASE("text and JSON round trip bit-exactly") {
  std::mt19937_64 rng(3);
  for (const char* t : {"A2", "A4", "D4", "E6"}) {
    auto g = build_graph(t);
    for (SemifieldSpec spec : {SemifieldSpec(SemifieldKind::TropInt), SemifieldSpec(SemifieldKind::TropRat),
                               SemifieldSpec(SemifieldKind::RatPos)}) {
      for (int k = 0; k < 10; ++k) {
        const MonoidElement e = random_element(g, spec, random_weyl(*g, rng, 20), rng, -99, 99);
        const std::string text = format_element(e);
        CHECK(format_element(parse_element(text)) == text);
        const std::string js = element_to_json(e).dump();
        CHECK(element_to_json(parse_element(js)).dump() == js);
        CHECK(parse_element(js) == e);
      }
    }
  }
}

TEST_CASE("canonical coordinates forms") {
  const CanonicalCoords cc = parse_canonical("A3 | trop-int | ii: 2 3 1 2 3 1 | c: 1 6 12 9 4 2");
  CHECK(format_canonical(cc) == "A3 | trop-int | ii: 2 3 1 2 3 1 | c: 1 6 12 9 4 2");
  CHECK(canonical_from_json(canonical_to_json(cc)) == cc);
  CHECK(parse_canonical(canonical_to_json(cc).dump()) == cc);
  CHECK(code_of([] { parse_canonical("A3 | trop-int | 2 3 1 2 3 1 | c: 1 6 12 9 4 2"); }) ==
        Errc::ParseError);
  CHECK(code_of([] { parse_canonical("A3 | trop-int | ii: 2 3 1 | c: 1 6"); }) ==
        Errc::LengthMismatch);
}

TEST_CASE("path text form") {
  auto a2 = build_graph("A2");
  const MonoidElement H = base_point(a2, SemifieldKind::TropInt);
  const MonoidElement Ht = parse_element("A2 | trop-int | 1 2 1 | 1 1 0");
  const TropicalPath tp = path_tropical(H, Ht, parse_word(*a2, "1 2 1"));
  const PathReport r = validate_path(tp.path, &H, &Ht);
  const std::string text = format_path(tp.path, r, distance_bound(*a2));
  CHECK(text ==
        "A2 | trop-int | 1 2 1 | 0 0 0\n"
        "edge 1 0\n"
        "A2 | trop-int | 1 2 1 | 0 0 0\n"
        "edge 2 0\n"
        "A2 | trop-int | 1 2 1 | 0 0 0\n"
        "edge 1 1\n"
        "A2 | trop-int | 1 2 1 | 1 0 0\n"
        "edge 2 1\n"
        "A2 | trop-int | 1 2 1 | 0 1 0\n"
        "edge 1 1\n"
        "A2 | trop-int | 1 2 1 | 1 1 0\n"
        "edges=5 nontrivial=3 bound=5 ok=true\n");
  const std::string in_chart = format_path(tp.path, r, 5, parse_word(*a2, "2 1 2"));
  CHECK(in_chart.rfind("A2 | trop-int | 2 1 2 | 0 0 0\n", 0) == 0);

  const auto j = path_to_json(tp.path, r, 5);
  CHECK(j["summary"]["nontrivial"] == 3);
  CHECK(j["summary"]["ok"] == true);
  CHECK(j["nodes"].size() == 6);
  CHECK(j["edges"][2]["a"] == "1");
  CHECK(parse_element(j["nodes"][5].dump()) == Ht);
}
