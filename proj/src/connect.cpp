#include "halfcircle/connect.hpp"

#include <deque>
#include <map>

#include "halfcircle/canonical.hpp"
#include "halfcircle/error.hpp"

namespace halfcircle {

int distance_bound(const CoxeterGraph& g) { return 2 * g.nu() - 1; }

namespace {

void require_longest(const MonoidElement& e) {
  if (!(e.weyl() == e.graph().longest_element()))
    raise(Errc::DifferentElements, "expected an element over w0: " + describe(e));
}

void require_pair(const MonoidElement& a, const MonoidElement& b) {
  if (!same_graph(a.graph(), b.graph())) raise(Errc::SpecMismatch, "different Cartan data");
  if (a.spec() != b.spec())
    raise(Errc::SpecMismatch,
          std::string(a.spec().name()) + " vs " + std::string(b.spec().name()));
  require_longest(a);
  require_longest(b);
}

void require_longest_word(const CoxeterGraph& g, const Word& ii) {
  if (!g.is_reduced(ii)) raise(Errc::NotReduced, format_word(g, ii));
  if (!(g.element(ii) == g.longest_element()))
    raise(Errc::DifferentElements, format_word(g, ii) + " is not a reduced word of w0");
}

Word reference_chart_starting_with(const CoxeterGraph& g, Letter i) {
  Word word{i};
  const Word tail = g.longest_element().left_mul(i).reference_word();
  word.insert(word.end(), tail.begin(), tail.end());
  return word;
}

}  // namespace

std::optional<EdgeLabel> is_edge(const MonoidElement& H, const MonoidElement& Ht) {
  require_pair(H, Ht);
  if (H == Ht) return std::nullopt;
  const CoxeterGraph& g = H.graph();
  for (Letter i = 0; i < g.rank(); ++i) {
    const Word chart = reference_chart_starting_with(g, i);
    const MonoidElement a = rewrite(H, chart);
    const MonoidElement b = rewrite(Ht, chart);
    if (std::equal(a.coords().begin() + 1, a.coords().end(), b.coords().begin() + 1))
      return EdgeLabel{i, sdiv(b.coords().front(), a.coords().front())};
  }
  return std::nullopt;
}

Rescaling plus_rescaling(const MonoidElement& H, const MonoidElement& Ht, const Word& ii) {
  const CoxeterGraph& g = H.graph();
  std::vector<std::optional<mpq_class>> lowest(static_cast<std::size_t>(g.rank()));
  for (const MonoidElement* e : {&H, &Ht}) {
    const MonoidElement chart = rewrite(*e, ii);
    for (std::size_t m = 0; m < ii.size(); ++m) {
      auto& slot = lowest[static_cast<std::size_t>(ii[m])];
      const mpq_class v = chart.coords()[m].real();
      if (!slot || v < *slot) slot = v;
    }
  }
  Rescaling p;
  for (const auto& m : lowest) {
    mpq_class f = 0;
    if (m && *m < 0) f = -*m;
    p.factors.push_back(Scalar::from_rational(H.spec(), f));
  }
  return p;
}

TropicalPath path_tropical(const MonoidElement& H, const MonoidElement& Ht, const Word& ii) {
  require_pair(H, Ht);
  if (!H.spec().is_tropical()) raise(Errc::SpecMismatch, "tropical paths need a tropical semifield");
  const CoxeterGraph& g = H.graph();
  require_longest_word(g, ii);

  TropicalPath out;
  out.shift_to_plus = plus_rescaling(H, Ht, ii);
  out.c = peel(ii, rescale(out.shift_to_plus, H)).c;
  out.d = peel(ii, rescale(out.shift_to_plus, Ht)).c;

  const std::size_t nu = ii.size();
  auto& labels = out.path.labels;
  for (std::size_t k = 0; k + 1 < nu; ++k) labels.push_back({ii[k], sinv(out.c[k])});
  labels.push_back({ii[nu - 1], sdiv(out.d[nu - 1], out.c[nu - 1])});
  for (std::size_t j = 1; j < nu; ++j) labels.push_back({ii[nu - 1 - j], out.d[nu - 1 - j]});

  auto& nodes = out.path.nodes;
  nodes.push_back(H);
  for (const EdgeLabel& l : labels) nodes.push_back(shift(l.letter, l.a, nodes.back()));
  if (!(nodes.back() == Ht)) raise(Errc::InternalAssertion, "tropical path missed its target");
  return out;
}

CommonBase common_base(const MonoidElement& u1, const MonoidElement& u2, const Word& ii) {
  require_pair(u1, u2);
  if (u1.spec().kind() != SemifieldKind::RatPos)
    raise(Errc::SpecMismatch, "common_base needs rat-pos elements");
  const CoxeterGraph& g = u1.graph();
  require_longest_word(g, ii);

  const std::size_t nu = ii.size();
  std::vector<Scalar> steps(nu);
  MonoidElement r1 = u1, r2 = u2;
  auto drop_last = [](const MonoidElement& e, const Scalar& amount) {
    std::vector<Scalar> coords = e.coords();
    // Field subtraction; rat_pos rejects a non-positive result.
    coords.back() = Scalar::rat_pos(coords.back().real() - amount.real());
    return from_word(e.graph_ptr(), e.spec(), e.word(), std::move(coords));
  };
  for (std::size_t k = nu; k-- > 0;) {
    r1.pull_back(ii[k]);
    r2.pull_back(ii[k]);
    const Scalar& a = r1.coords().back();
    const Scalar& b = r2.coords().back();
    steps[k] = halve(a.real() <= b.real() ? a : b);
    r1 = drop_last(r1, steps[k]);
    r2 = drop_last(r2, steps[k]);
  }

  CommonBase out{from_word(u1.graph_ptr(), u1.spec(), ii, steps), steps, {}, {}};
  r1 = rewrite(r1, ii);
  r2 = rewrite(r2, ii);
  if (!(multiply(r1, out.u) == u1) || !(multiply(r2, out.u) == u2))
    raise(Errc::InternalAssertion, "residues times u do not restore the inputs");
  out.c = r1.coords();
  out.d = r2.coords();
  return out;
}

Path path_ordered_field(const MonoidElement& u1, const MonoidElement& u2, const Word& ii) {
  const CommonBase base = common_base(u1, u2, ii);
  const std::size_t nu = ii.size();

  // side[k-1] = i_{nu-k+1}^{x_{nu-k+1}} ... i_nu^{x_nu} u
  auto climb = [&](const std::vector<Scalar>& x) {
    std::vector<MonoidElement> side;
    MonoidElement cur = base.u;
    for (std::size_t k = nu; k-- > 0;) {
      cur = left_mul_gen(ii[k], x[k], cur);
      side.push_back(cur);
    }
    return side;
  };
  const auto left = climb(base.c);
  const auto right = climb(base.d);
  if (!(left.back() == u1) || !(right.back() == u2))
    raise(Errc::InternalAssertion, "ordered-field path endpoints disagree with the inputs");

  Path path;
  for (std::size_t k = nu; k-- > 0;) path.nodes.push_back(left[k]);
  for (std::size_t k = 0; k < nu; ++k) path.nodes.push_back(right[k]);

  // Consecutive nodes differ by a left factor i^x, hence by a shift along i.
  auto letter_between = [&](std::size_t n) -> Letter {
    // Nodes n and n+1 in the 2nu-sequence.
    if (n + 1 < nu) return ii[n];           // left[nu-1-n] -> left[nu-2-n]
    if (n + 1 == nu) return ii[nu - 1];     // left[0] -> right[0]
    return ii[2 * nu - 2 - n];              // right[j] -> right[j+1]
  };
  for (std::size_t n = 0; n + 1 < path.nodes.size(); ++n) {
    const Letter i = letter_between(n);
    path.labels.push_back({i, sdiv(leading_coordinate(i, path.nodes[n + 1]),
                                   leading_coordinate(i, path.nodes[n]))});
  }
  return path;
}

PathReport validate_path(const Path& path, const MonoidElement* from, const MonoidElement* to) {
  PathReport report;
  report.edges = path.labels.size();
  if (path.nodes.empty()) {
    report.failures.emplace_back(0, "path has no nodes");
    return report;
  }
  if (path.nodes.size() != path.labels.size() + 1) {
    report.failures.emplace_back(0, "node and label counts disagree");
    return report;
  }
  const MonoidElement& head = path.nodes.front();
  for (std::size_t k = 0; k < path.nodes.size(); ++k) {
    const MonoidElement& n = path.nodes[k];
    if (!same_graph(n.graph(), head.graph()) || n.spec() != head.spec() ||
        !(n.weyl() == head.graph().longest_element())) {
      report.failures.emplace_back(k, "node is not a longest-element point of the common type");
      return report;
    }
  }
  for (std::size_t k = 0; k < path.labels.size(); ++k) {
    const EdgeLabel& l = path.labels[k];
    try {
      if (!(shift(l.letter, l.a, path.nodes[k]) == path.nodes[k + 1])) {
        report.failures.emplace_back(k, "next node is not the shift of the current one");
        continue;
      }
      if (l.degenerate()) continue;
      ++report.nontrivial;
      auto found = is_edge(path.nodes[k], path.nodes[k + 1]);
      if (!found) {
        report.failures.emplace_back(k, "independent edge test found no edge");
      } else if (!(shift(found->letter, found->a, path.nodes[k]) == path.nodes[k + 1])) {
        report.failures.emplace_back(k, "independent edge label does not reproduce the step");
      }
    } catch (const Error& e) {
      report.failures.emplace_back(k, e.what());
    }
  }
  if (from) report.endpoints_ok = report.endpoints_ok && path.nodes.front() == *from;
  if (to) report.endpoints_ok = report.endpoints_ok && path.nodes.back() == *to;
  return report;
}

std::optional<int> box_distance_a2(const MonoidElement& H, const MonoidElement& Ht, long lo,
                                   long hi) {
  require_pair(H, Ht);
  if (H.graph().name() != "A2" || H.spec().kind() != SemifieldKind::TropInt)
    raise(Errc::Unsupported, "box exploration is limited to A2 over trop-int");
  const Word ref = H.graph().longest_element().reference_word();
  auto key = [&](const MonoidElement& e) {
    std::vector<long> k;
    const MonoidElement r = rewrite(e, ref);
    for (const Scalar& x : r.coords()) k.push_back(x.real().get_num().get_si());
    return k;
  };
  auto inside = [&](const std::vector<long>& k) {
    for (long v : k)
      if (v < lo || v > hi) return false;
    return true;
  };
  const auto target = key(Ht);
  const auto start = key(H);
  if (!inside(start) || !inside(target)) return std::nullopt;

  std::map<std::vector<long>, int> dist{{start, 0}};
  std::deque<MonoidElement> queue{H};
  while (!queue.empty()) {
    MonoidElement cur = std::move(queue.front());
    queue.pop_front();
    const auto ck = key(cur);
    const int d = dist[ck];
    if (ck == target) return d;
    for (Letter i = 0; i < 2; ++i) {
      for (long a = lo - hi; a <= hi - lo; ++a) {
        if (a == 0) continue;
        MonoidElement next = shift(i, Scalar::trop_int(a), cur);
        auto nk = key(next);
        if (!inside(nk) || dist.count(nk)) continue;
        dist.emplace(nk, d + 1);
        queue.push_back(std::move(next));
      }
    }
  }
  return std::nullopt;
}

}  // namespace halfcircle
