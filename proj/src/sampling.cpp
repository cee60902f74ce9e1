#include "halfcircle/sampling.hpp"

#include <algorithm>

namespace halfcircle {

namespace {

long uniform(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

}  // namespace

Scalar random_scalar(SemifieldSpec spec, std::mt19937_64& rng, long lo, long hi) {
  switch (spec.kind()) {
    case SemifieldKind::TropInt:
      return Scalar::trop_int(uniform(rng, lo, hi));
    case SemifieldKind::TropRat: {
      const long den = uniform(rng, 1, 6);
      return Scalar::trop_rat(mpq_class(uniform(rng, lo * den, hi * den), den));
    }
    case SemifieldKind::RatPos: {
      const long den = uniform(rng, 1, 6);
      mpq_class v(uniform(rng, 1, std::max(hi, 1L) * den), den);
      v.canonicalize();
      return Scalar::rat_pos(v);
    }
    case SemifieldKind::Trivial:
      break;
  }
  return Scalar::unit();
}

WeylElement random_weyl(const CoxeterGraph& g, std::mt19937_64& rng, int steps) {
  WeylElement w = g.identity();
  for (int s = 0; s < steps; ++s) w = w.right_mul(static_cast<Letter>(uniform(rng, 0, g.rank() - 1)));
  return w;
}

MonoidElement random_element(const GraphPtr& g, SemifieldSpec spec, const WeylElement& w,
                             std::mt19937_64& rng, long lo, long hi, double unit_prob) {
  Word word = random_reduced_word(w, rng);
  std::bernoulli_distribution unit(unit_prob);
  std::vector<Scalar> coords;
  coords.reserve(word.size());
  for (std::size_t m = 0; m < word.size(); ++m)
    coords.push_back(unit(rng) ? sone(spec) : random_scalar(spec, rng, lo, hi));
  return from_word(g, spec, std::move(word), std::move(coords));
}

MonoidElement random_plus_point(const GraphPtr& g, SemifieldSpec spec, std::mt19937_64& rng,
                                long hi, double unit_prob) {
  return random_element(g, spec, g->longest_element(), rng, 0, hi, unit_prob);
}

}  // namespace halfcircle
