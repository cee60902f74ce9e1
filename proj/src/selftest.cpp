#include "halfcircle/selftest.hpp"

#include <functional>
#include <future>
#include <random>
#include <sstream>

#include "halfcircle/canonical.hpp"
#include "halfcircle/connect.hpp"
#include "halfcircle/error.hpp"
#include "halfcircle/sampling.hpp"

namespace halfcircle {

bool SuiteResult::ok() const {
  for (const auto& p : properties)
    if (!p.failure.empty()) return false;
  return true;
}

bool selftest_ok(const std::vector<SuiteResult>& results) {
  for (const auto& s : results)
    if (!s.ok()) return false;
  return true;
}

void print_selftest(const std::vector<SuiteResult>& results, std::ostream& out) {
  for (const auto& s : results) {
    int runs = 0, passed = 0;
    for (const auto& p : s.properties) {
      runs += p.runs;
      passed += p.passed;
    }
    out << s.name << ": " << passed << "/" << runs << " passed (" << s.properties.size()
        << " properties)" << (s.ok() ? "" : " FAILED") << "\n";
  }
  for (const auto& s : results)
    for (const auto& p : s.properties)
      if (!p.failure.empty()) out << "FAIL " << s.name << "/" << p.name << ":\n" << p.failure << "\n";
}

namespace {

using Rng = std::mt19937_64;

// A property body records its inputs in `input` before checking, so that a
// false return or an exception can be reported with a reproducing input.
using Body = std::function<bool(Rng&, std::string& input)>;

class Suite {
 public:
  Suite(std::string name, std::uint64_t seed) : rng_(seed) { result_.name = std::move(name); }

  void property(const std::string& name, int iters, const Body& body) {
    PropertyResult r{name, 0, 0, {}};
    for (int k = 0; k < iters; ++k) {
      ++r.runs;
      std::string input;
      std::string error;
      bool ok = false;
      try {
        ok = body(rng_, input);
      } catch (const std::exception& e) {
        error = e.what();
      }
      if (ok) {
        ++r.passed;
        continue;
      }
      r.failure = "  iteration " + std::to_string(k) + "\n" + input;
      if (!error.empty()) r.failure += "  error: " + error + "\n";
      break;
    }
    result_.properties.push_back(std::move(r));
  }

  SuiteResult take() { return std::move(result_); }

 private:
  Rng rng_;
  SuiteResult result_;
};

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Letter random_letter(const CoxeterGraph& g, Rng& rng) {
  return static_cast<Letter>(uniform(rng, 0, g.rank() - 1));
}

std::string line(const MonoidElement& e) { return "  " + describe(e) + "\n"; }

std::string line(const std::string& label, const Scalar& a) {
  return "  " + label + " = " + std::string(a.spec().name()) + " " + a.str() + "\n";
}

constexpr SemifieldSpec kKinds[] = {SemifieldKind::TropInt, SemifieldKind::TropRat,
                                    SemifieldKind::RatPos};
constexpr SemifieldSpec kTropical[] = {SemifieldKind::TropInt, SemifieldKind::TropRat};

SuiteResult coxeter_suite(const GraphPtr& gp, int iters, std::uint64_t seed) {
  const CoxeterGraph& g = *gp;
  Suite s("coxeter", seed);
  const int nu = g.nu();
  const std::size_t n = static_cast<std::size_t>(nu);

  s.property("dual index", 1, [&](Rng&, std::string& input) {
    input = "  type " + g.name() + "\n";
    const WeylElement& w0 = g.longest_element();
    for (Letter i = 0; i < g.rank(); ++i) {
      if (g.dual(g.dual(i)) != i) return false;
      std::vector<int> e(static_cast<std::size_t>(g.rank()), 0);
      e[static_cast<std::size_t>(i)] = 1;
      std::vector<int> expect(e.size(), 0);
      expect[static_cast<std::size_t>(g.dual(i))] = -1;
      if (w0.apply(e) != expect) return false;
    }
    return static_cast<std::size_t>(nu) == g.positive_roots().size();
  });

  s.property("length equals inversions", iters, [&](Rng& rng, std::string& input) {
    const WeylElement w = random_weyl(g, rng, static_cast<int>(uniform(rng, 0, 2 * nu)));
    const Word ref = w.reference_word();
    input = "  w = " + format_word(g, ref) + "\n";
    int inversions = 0;
    for (const auto& beta : g.positive_roots()) {
      const auto image = w.apply(beta);
      for (int x : image)
        if (x < 0) {
          ++inversions;
          break;
        }
    }
    return inversions == w.length() && static_cast<int>(ref.size()) == w.length() &&
           g.is_reduced(ref);
  });

  s.property("pull plans", iters, [&](Rng& rng, std::string& input) {
    const WeylElement w = random_weyl(g, rng, static_cast<int>(uniform(rng, 1, 2 * nu)));
    const Word word = random_reduced_word(w, rng);
    input = "  word = " + format_word(g, word) + "\n";
    const std::size_t bound = word.size() * word.size();
    auto follow = [&](const MovePlan& plan) {
      Word cur = word;
      for (const Move& m : plan) {
        apply_move(g, cur, m);
        if (!(g.element(cur) == w)) return Word{};
      }
      return cur;
    };
    for (Letter i : w.left_descents()) {
      const MovePlan plan = pull_to_front(g, word, i);
      const Word out = follow(plan);
      if (plan.size() > bound || out.empty() || out.front() != i) return false;
    }
    for (Letter i : w.right_descents()) {
      const MovePlan plan = pull_to_back(g, word, i);
      const Word out = follow(plan);
      if (plan.size() > bound || out.empty() || out.back() != i) return false;
    }
    return true;
  });

  s.property("rewrite plans", iters, [&](Rng& rng, std::string& input) {
    const WeylElement w =
        uniform(rng, 0, 1) ? g.longest_element() : random_weyl(g, rng, static_cast<int>(n));
    const Word u = random_reduced_word(w, rng);
    const Word v = random_reduced_word(w, rng);
    input = "  from = " + format_word(g, u) + "\n  to = " + format_word(g, v) + "\n";
    Word cur = u;
    apply_plan(g, cur, rewrite_plan(g, u, v));
    return cur == v;
  });

  return s.take();
}

SuiteResult semifield_suite(int iters, std::uint64_t seed) {
  Suite s("semifield", seed);
  for (SemifieldSpec spec : kKinds) {
    s.property("axioms " + std::string(spec.name()), iters, [spec](Rng& rng, std::string& input) {
      const Scalar a = random_scalar(spec, rng, -100, 100);
      const Scalar b = random_scalar(spec, rng, -100, 100);
      const Scalar c = random_scalar(spec, rng, -100, 100);
      input = line("a", a) + line("b", b) + line("c", c);
      const Scalar one = sone(spec);
      return splus(splus(a, b), c) == splus(a, splus(b, c)) && splus(a, b) == splus(b, a) &&
             sprod(sprod(a, b), c) == sprod(a, sprod(b, c)) && sprod(a, b) == sprod(b, a) &&
             sprod(a, splus(b, c)) == splus(sprod(a, b), sprod(a, c)) &&
             sprod(a, sinv(a)) == one && sprod(a, one) == a && sinv(sinv(a)) == a;
    });
    s.property("trivial homomorphism " + std::string(spec.name()), iters,
               [spec](Rng& rng, std::string& input) {
                 const Scalar a = random_scalar(spec, rng, -100, 100);
                 const Scalar b = random_scalar(spec, rng, -100, 100);
                 input = line("a", a) + line("b", b);
                 return to_trivial(splus(a, b)) == splus(to_trivial(a), to_trivial(b)) &&
                        to_trivial(sprod(a, b)) == sprod(to_trivial(a), to_trivial(b));
               });
  }
  for (SemifieldSpec spec : kTropical) {
    s.property("plus part closure " + std::string(spec.name()), iters,
               [spec](Rng& rng, std::string& input) {
                 const Scalar a = random_scalar(spec, rng, 0, 100);
                 const Scalar b = random_scalar(spec, rng, 0, 100);
                 input = line("a", a) + line("b", b);
                 return in_plus_part(splus(a, b)) && in_plus_part(sprod(a, b));
               });
  }
  return s.take();
}

SuiteResult monoid_suite(const GraphPtr& g, int iters, std::uint64_t seed) {
  Suite s("monoid", seed);
  const int nu = g->nu();
  auto kind = [](Rng& rng) { return kKinds[uniform(rng, 0, 2)]; };
  auto tropical = [](Rng& rng) { return kTropical[uniform(rng, 0, 1)]; };
  auto point = [&](Rng& rng, SemifieldSpec spec) {
    return random_element(g, spec, g->longest_element(), rng, -50, 50, 0.1);
  };

  s.property("chart round trip", iters, [&](Rng& rng, std::string& input) {
    const WeylElement w = uniform(rng, 0, 1) ? g->longest_element() : random_weyl(*g, rng, nu);
    const MonoidElement e = random_element(g, kind(rng), w, rng, -50, 50, 0.1);
    const Word v = random_reduced_word(w, rng);
    input = line(e) + "  via " + format_word(*g, v) + "\n";
    const MonoidElement back = rewrite(rewrite(e, v), e.word());
    return back.word() == e.word() && back.coords() == e.coords();
  });

  s.property("braid involution", iters, [&](Rng& rng, std::string& input) {
    const SemifieldSpec spec = kind(rng);
    const Scalar a = random_scalar(spec, rng, -50, 50), b = random_scalar(spec, rng, -50, 50),
                 c = random_scalar(spec, rng, -50, 50);
    input = line("a", a) + line("b", b) + line("c", c);
    const auto once = braid_transport(a, b, c);
    const auto twice = braid_transport(once[0], once[1], once[2]);
    return twice[0] == a && twice[1] == b && twice[2] == c;
  });

  s.property("shift group law", iters, [&](Rng& rng, std::string& input) {
    const SemifieldSpec spec = kind(rng);
    const MonoidElement H = point(rng, spec);
    const Letter i = random_letter(*g, rng);
    const Scalar a = random_scalar(spec, rng, -20, 20), b = random_scalar(spec, rng, -20, 20);
    input = line(H) + "  i = " + g->letter_name(i) + "\n" + line("a", a) + line("b", b);
    return shift(i, a, shift(i, b, H)) == shift(i, sprod(a, b), H) &&
           shift(i, sone(spec), H) == H && shift(i, sinv(a), shift(i, a, H)) == H;
  });

  s.property("left multiplication as a shift", iters, [&](Rng& rng, std::string& input) {
    const SemifieldSpec spec = kind(rng);
    const MonoidElement H = point(rng, spec);
    const Letter i = random_letter(*g, rng);
    const Scalar c = random_scalar(spec, rng, -50, 50);
    input = line(H) + "  i = " + g->letter_name(i) + "\n" + line("c", c);
    const Scalar z = leading_coordinate(i, H);
    return left_mul_gen(i, c, H) == shift(i, sdiv(splus(c, z), z), H);
  });

  s.property("rescaling commutes with shifts", iters, [&](Rng& rng, std::string& input) {
    const SemifieldSpec spec = kind(rng);
    const MonoidElement H = point(rng, spec);
    const Letter i = random_letter(*g, rng);
    const Scalar a = random_scalar(spec, rng, -20, 20);
    Rescaling p;
    input = line(H) + "  i = " + g->letter_name(i) + "\n" + line("a", a);
    for (Letter j = 0; j < g->rank(); ++j) {
      p.factors.push_back(random_scalar(spec, rng, -20, 20));
      input += line("p(" + g->letter_name(j) + ")", p.factors.back());
    }
    const Word v = random_reduced_word(g->longest_element(), rng);
    return rescale(p, shift(i, a, H)) == shift(i, a, rescale(p, H)) &&
           rescale(p, rewrite(H, v)) == rewrite(rescale(p, H), v);
  });

  s.property("plus part stable under shifts", iters, [&](Rng& rng, std::string& input) {
    const SemifieldSpec spec = tropical(rng);
    const MonoidElement H = random_plus_point(g, spec, rng, 50, 0.3);
    const Letter i = random_letter(*g, rng);
    const Scalar a = random_scalar(spec, rng, 0, 50);
    input = line(H) + "  i = " + g->letter_name(i) + "\n" + line("a", a);
    return is_plus(H) && is_plus(shift(i, a, H));
  });

  s.property("zero pattern chart independence", iters, [&](Rng& rng, std::string& input) {
    const SemifieldSpec spec = tropical(rng);
    const WeylElement w = uniform(rng, 0, 1) ? g->longest_element() : random_weyl(*g, rng, nu);
    const MonoidElement e = random_element(g, spec, w, rng, 0, 3, 0.4);
    input = line(e);
    // Exhaustive only when there are few charts; the rest is sampled.
    return zero_pattern_consistent(e, rng, 200, 8) &&
           zero_pattern(base_point(g, spec)) == g->longest_element();
  });

  return s.take();
}

// Peeling over (j,k,i,j,k,i) exchanges entries 2<->3 and 5<->6 relative
// to closed_form_a3_w1; this is the tuple it actually produces.
std::vector<Scalar> a3_middle_expected(const std::vector<Scalar>& in) {
  const CanonicalCoords printed = closed_form_a3_w1(in[0], in[1], in[2], in[3], in[4], in[5]);
  std::vector<Scalar> out = printed.c;
  std::swap(out[1], out[2]);
  std::swap(out[4], out[5]);
  return out;
}

SuiteResult canonical_suite(const GraphPtr& g, int iters, std::uint64_t seed) {
  Suite s("canonical", seed);
  auto tropical = [](Rng& rng) { return kTropical[uniform(rng, 0, 1)]; };
  const WeylElement& w0 = g->longest_element();

  s.property("peel round trip", iters, [&](Rng& rng, std::string& input) {
    const MonoidElement H = random_plus_point(g, tropical(rng), rng, 30, 0.3);
    const Word ii = random_reduced_word(w0, rng);
    input = line(H) + "  ii = " + format_word(*g, ii) + "\n";
    const PeelTrace t = peel(ii, H);
    for (const Scalar& c : t.c)
      if (!in_plus_part(c)) return false;
    return reconstruct(t.coords()) == H;
  });

  s.property("strict positivity", iters, [&](Rng& rng, std::string& input) {
    const SemifieldSpec spec = tropical(rng);
    const MonoidElement H = random_element(g, spec, w0, rng, 1, 30);
    const Word ii = random_reduced_word(w0, rng);
    input = line(H) + "  ii = " + format_word(*g, ii) + "\n";
    for (const Scalar& c : peel(ii, H).c)
      if (sgn(c.real()) <= 0) return false;
    return true;
  });

  s.property("injectivity", iters, [&](Rng& rng, std::string& input) {
    const Word ii = random_reduced_word(w0, rng);
    const MonoidElement a = random_plus_point(g, SemifieldKind::TropInt, rng, 2, 0.3);
    const MonoidElement b = random_plus_point(g, SemifieldKind::TropInt, rng, 2, 0.3);
    input = line(a) + line(b) + "  ii = " + format_word(*g, ii) + "\n";
    return (a == b) == (peel(ii, a).c == peel(ii, b).c);
  });

  s.property("fixture closed forms", iters, [&](Rng& rng, std::string& input) {
    const SemifieldSpec spec = tropical(rng);
    std::vector<Scalar> x;
    for (int k = 0; k < 6; ++k) x.push_back(random_scalar(spec, rng, 0, 100));
    auto element = [&](Fixture f) {
      std::vector<Scalar> coords(x.begin(), x.begin() + (f == Fixture::A2 ? 3 : 6));
      return from_word(fixture_graph(f), spec, fixture_word(f), std::move(coords));
    };
    const MonoidElement a2 = element(Fixture::A2), mid = element(Fixture::A3Middle),
                        end = element(Fixture::A3End);
    input = line(a2) + line(mid) + line(end);
    return peel(fixture_word(Fixture::A2), a2).coords() == closed_form_a2(x[0], x[1], x[2]) &&
           peel(fixture_word(Fixture::A3End), end).coords() ==
               closed_form_a3_w2(x[0], x[1], x[2], x[3], x[4], x[5]) &&
           peel(fixture_word(Fixture::A3Middle), mid).c == a3_middle_expected(x);
  });

  s.property("image inequalities match membership", iters, [&](Rng& rng, std::string& input) {
    const SemifieldSpec spec = tropical(rng);
    input.clear();
    for (Fixture f : {Fixture::A2, Fixture::A3Middle, Fixture::A3End}) {
      CanonicalCoords cc{fixture_graph(f), spec, fixture_word(f), {}};
      for (std::size_t k = 0; k < cc.ii.size(); ++k) cc.c.push_back(random_scalar(spec, rng, 0, 6));
      input += "  " + describe(cc) + "\n";
      if (image_inequalities(f, cc) != in_image(cc)) return false;
    }
    return true;
  });

  return s.take();
}

SuiteResult connect_suite(const GraphPtr& g, int iters, std::uint64_t seed) {
  Suite s("connect", seed);
  const WeylElement& w0 = g->longest_element();
  const std::size_t bound = static_cast<std::size_t>(distance_bound(*g));

  s.property("tropical paths", iters, [&](Rng& rng, std::string& input) {
    const SemifieldSpec spec = kTropical[uniform(rng, 0, 1)];
    const MonoidElement H = random_element(g, spec, w0, rng, -50, 50);
    const MonoidElement Ht = random_element(g, spec, w0, rng, -50, 50);
    const Word ii = random_reduced_word(w0, rng);
    input = line(H) + line(Ht) + "  ii = " + format_word(*g, ii) + "\n";
    const TropicalPath tp = path_tropical(H, Ht, ii);
    const PathReport r = validate_path(tp.path, &H, &Ht);
    return r.ok() && r.nontrivial <= bound;
  });

  s.property("edge symmetry", iters, [&](Rng& rng, std::string& input) {
    const SemifieldSpec spec = kKinds[uniform(rng, 0, 2)];
    const MonoidElement H = random_element(g, spec, w0, rng, -50, 50);
    const Letter i = random_letter(*g, rng);
    Scalar a = random_scalar(spec, rng, -50, 50);
    if (is_one(a)) a = sprod(a, random_scalar(spec, rng, 1, 5));
    if (is_one(a)) return true;
    const MonoidElement Ht = shift(i, a, H);
    input = line(H) + "  i = " + g->letter_name(i) + "\n" + line("a", a);
    const auto there = is_edge(H, Ht);
    const auto back = is_edge(Ht, H);
    return there && back && there->letter == back->letter && back->a == sinv(there->a) &&
           shift(there->letter, there->a, H) == Ht;
  });

  // Ordered-field paths on the self-test type, small ranks only: the
  // rational coordinates grow quickly with nu.
  if (g->nu() <= 12) {
    s.property("ordered-field paths", iters, [&](Rng& rng, std::string& input) {
      const MonoidElement u1 = random_element(g, SemifieldKind::RatPos, w0, rng, 1, 20);
      const MonoidElement u2 = random_element(g, SemifieldKind::RatPos, w0, rng, 1, 20);
      const Word ii = random_reduced_word(w0, rng);
      input = line(u1) + line(u2) + "  ii = " + format_word(*g, ii) + "\n";
      const CommonBase base = common_base(u1, u2, ii);
      const MonoidElement r1 = from_word(g, SemifieldKind::RatPos, ii, base.c);
      const MonoidElement r2 = from_word(g, SemifieldKind::RatPos, ii, base.d);
      if (!(multiply(r1, base.u) == u1) || !(multiply(r2, base.u) == u2)) return false;
      const Path p = path_ordered_field(u1, u2, ii);
      const PathReport r = validate_path(p, &u1, &u2);
      return r.ok() && r.nontrivial <= bound;
    });
  }

  return s.take();
}

}  // namespace

std::vector<SuiteResult> run_selftest(const SelftestOptions& options) {
  if (options.iters < 0) raise(Errc::ParseError, "iteration count must be non-negative");
  const GraphPtr g = build_graph(options.type);
  std::mt19937_64 master(options.seed);
  std::vector<std::uint64_t> seeds(5);
  for (auto& x : seeds) x = master();

  const int n = options.iters;
  std::vector<std::function<SuiteResult()>> jobs = {
      [&] { return coxeter_suite(g, n, seeds[0]); },
      [&] { return semifield_suite(n, seeds[1]); },
      [&] { return monoid_suite(g, n, seeds[2]); },
      [&] { return canonical_suite(g, n, seeds[3]); },
      [&] { return connect_suite(g, n, seeds[4]); },
  };
  std::vector<SuiteResult> results;
  if (!options.parallel) {
    for (auto& job : jobs) results.push_back(job());
    return results;
  }
  std::vector<std::future<SuiteResult>> futures;
  for (auto& job : jobs) futures.push_back(std::async(std::launch::async, job));
  for (auto& f : futures) results.push_back(f.get());
  return results;
}

}  // namespace halfcircle
