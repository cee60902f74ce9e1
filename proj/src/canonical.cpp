#include "halfcircle/canonical.hpp"

#include "halfcircle/error.hpp"

namespace halfcircle {

bool CanonicalCoords::operator==(const CanonicalCoords& other) const {
  return same_graph(*graph, *other.graph) && spec == other.spec && ii == other.ii && c == other.c;
}

CanonicalCoords PeelTrace::coords() const {
  const MonoidElement& first = nodes.front();
  return {first.graph_ptr(), first.spec(), ii, c};
}

namespace {

void require_longest_word(const CoxeterGraph& g, const Word& ii) {
  if (!g.is_reduced(ii)) raise(Errc::NotReduced, format_word(g, ii));
  if (static_cast<int>(ii.size()) != g.nu() || !(g.element(ii) == g.longest_element()))
    raise(Errc::DifferentElements, format_word(g, ii) + " is not a reduced word of w0");
}

void check(bool ok, const std::string& what) {
  if (!ok) raise(Errc::InternalAssertion, what);
}

}  // namespace

PeelTrace peel(const Word& ii, const MonoidElement& H) {
  const CoxeterGraph& g = H.graph();
  if (!H.spec().is_tropical())
    raise(Errc::NoPlusPart, "peeling needs a tropical semifield");
  require_longest_word(g, ii);
  if (!(H.weyl() == g.longest_element()))
    raise(Errc::DifferentElements, "peeling needs an element over w0");
  if (!is_plus_in_chart(H)) raise(Errc::NotInPlusPart, describe(H));

  const bool strictly_inside = zero_pattern(H).length() == 0;

  PeelTrace trace;
  trace.ii = ii;
  trace.nodes.reserve(ii.size() + 1);
  trace.c.reserve(ii.size());
  trace.nodes.push_back(H);
  for (Letter i : ii) {
    MonoidElement current = trace.nodes.back();
    current.pull_front(i);
    Scalar ck = current.coords().front();
    check(in_plus_part(ck), "peeled coordinate left the plus part");
    if (strictly_inside) check(sgn(ck.real()) > 0, "peeled coordinate is 0 for an interior point");
    MonoidElement next = shift(i, sinv(ck), current);
    // The plus part is chart independent, so the current chart suffices.
    check(is_plus_in_chart(next), "peel step left the plus part");
    trace.c.push_back(std::move(ck));
    trace.nodes.push_back(std::move(next));
  }
  check(trace.nodes.back() == base_point(H.graph_ptr(), H.spec()),
        "peel did not terminate at the base point");
  return trace;
}

MonoidElement reconstruct(const CanonicalCoords& cc) {
  require_longest_word(*cc.graph, cc.ii);
  if (cc.c.size() != cc.ii.size()) raise(Errc::LengthMismatch, "coordinate count differs from nu");
  MonoidElement H = base_point(cc.graph, cc.spec);
  H = rewrite(H, cc.ii);
  for (std::size_t k = cc.ii.size(); k-- > 0;) {
    if (!in_plus_part(cc.c[k])) raise(Errc::NotInPlusPart, describe(cc));
    H = shift(cc.ii[k], cc.c[k], H);
  }
  return H;
}

bool in_image(const CanonicalCoords& cc) {
  for (const Scalar& x : cc.c)
    if (!in_plus_part(x)) return false;
  return peel(cc.ii, reconstruct(cc)).c == cc.c;
}

GraphPtr fixture_graph(Fixture f) { return build_graph(f == Fixture::A2 ? "A2" : "A3"); }

Word fixture_word(Fixture f) {
  constexpr Letter i = 0, j = 1, k = 2;
  switch (f) {
    case Fixture::A2: return {i, j, i};
    case Fixture::A3Middle: return {j, k, i, j, k, i};
    case Fixture::A3End: return {i, j, i, k, j, i};
  }
  return {};
}

namespace {

void require_tropical_plus(std::initializer_list<const Scalar*> xs) {
  const SemifieldSpec spec = (*xs.begin())->spec();
  if (!spec.is_tropical()) raise(Errc::NoPlusPart, "closed forms are tropical");
  for (const Scalar* x : xs) {
    if (x->spec() != spec) raise(Errc::MixedSemifields, "closed-form inputs disagree");
    if (!in_plus_part(*x)) raise(Errc::NotInPlusPart, x->str());
  }
}

mpq_class min(const mpq_class& a, const mpq_class& b) { return a <= b ? a : b; }

CanonicalCoords make(Fixture f, SemifieldSpec spec, std::initializer_list<mpq_class> values) {
  CanonicalCoords cc{fixture_graph(f), spec, fixture_word(f), {}};
  for (const auto& v : values) cc.c.push_back(Scalar::from_rational(spec, v));
  return cc;
}

}  // namespace

CanonicalCoords closed_form_a2(const Scalar& C, const Scalar& B, const Scalar& A) {
  require_tropical_plus({&C, &B, &A});
  return make(Fixture::A2, C.spec(), {C.real(), B.real() + A.real(), B.real()});
}

CanonicalCoords closed_form_a3_w1(const Scalar& F, const Scalar& E, const Scalar& D,
                                  const Scalar& C, const Scalar& B, const Scalar& A) {
  require_tropical_plus({&F, &E, &D, &C, &B, &A});
  const mpq_class f = F.real(), e = E.real(), d = D.real(), c = C.real(), b = B.real(),
                  a = A.real();
  return make(Fixture::A3Middle, F.spec(),
              {f, b - min(b, e) + d + c, a - min(a, d) + e + c, d + e + c, min(b, e), min(a, d)});
}

CanonicalCoords closed_form_a3_w2(const Scalar& F, const Scalar& E, const Scalar& D,
                                  const Scalar& C, const Scalar& B, const Scalar& A) {
  require_tropical_plus({&F, &E, &D, &C, &B, &A});
  const mpq_class f = F.real(), e = E.real(), d = D.real(), c = C.real(), b = B.real(),
                  a = A.real();
  return make(Fixture::A3End, F.spec(), {f, e + d, e, a + b + c, b + c, c});
}

bool image_inequalities(Fixture f, const CanonicalCoords& cc) {
  if (!cc.spec.is_tropical()) raise(Errc::UnsupportedFixture, "fixtures are tropical");
  const GraphPtr g = fixture_graph(f);
  if (!same_graph(*g, *cc.graph) || cc.ii != fixture_word(f))
    raise(Errc::UnsupportedFixture, "coordinates are not relative to the fixture word");
  std::vector<mpq_class> x;
  for (const Scalar& s : cc.c) {
    if (!in_plus_part(s)) return false;
    x.push_back(s.real());
  }
  switch (f) {
    case Fixture::A2: {
      const auto& beta = x[1];
      const auto& alpha = x[2];
      return beta >= alpha;
    }
    case Fixture::A3Middle: {
      const auto &eps = x[1], &delta = x[2], &gamma = x[3], &beta = x[4], &alpha = x[5];
      return eps + delta >= gamma && gamma >= alpha + beta && delta >= beta && eps >= alpha;
    }
    case Fixture::A3End: {
      const auto &eps = x[1], &delta = x[2], &gamma = x[3], &beta = x[4], &alpha = x[5];
      return eps >= delta && gamma >= beta && beta >= alpha;
    }
  }
  raise(Errc::UnsupportedFixture, "unknown fixture");
}

std::string describe(const CanonicalCoords& cc) {
  std::string out = cc.graph->name() + " | " + std::string(cc.spec.name()) +
                    " | ii: " + format_word(*cc.graph, cc.ii) + " | c:";
  for (const Scalar& x : cc.c) out += " " + x.str();
  return out;
}

}  // namespace halfcircle
