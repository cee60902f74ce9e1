#pragma once

// Seeded random inputs shared by the self test, the unit tests and the
// acceptance runner.

#include <random>

#include "halfcircle/monoid.hpp"

namespace halfcircle {

/// Tropical kinds: a value in [lo, hi] (denominators up to 6 for trop-rat).
/// rat-pos: a positive rational at most max(hi, 1). Trivial: the unit.
Scalar random_scalar(SemifieldSpec spec, std::mt19937_64& rng, long lo, long hi);

/// A Weyl element built from `steps` random generators.
WeylElement random_weyl(const CoxeterGraph& g, std::mt19937_64& rng, int steps);

/// Element over w in a random chart; each coordinate is the unit with
/// probability `unit_prob`.
MonoidElement random_element(const GraphPtr& g, SemifieldSpec spec, const WeylElement& w,
                             std::mt19937_64& rng, long lo, long hi, double unit_prob = 0.0);

/// Element over w0 with coordinates in [0, hi] (tropical) in a random chart.
MonoidElement random_plus_point(const GraphPtr& g, SemifieldSpec spec, std::mt19937_64& rng,
                                long hi, double unit_prob = 0.2);

}  // namespace halfcircle
