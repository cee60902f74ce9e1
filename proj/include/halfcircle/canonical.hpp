#pragma once

// Canonical coordinates on the non-negative part of the longest-element
// piece: every H decomposes uniquely as shift(i_1,c_1) ... shift(i_nu,c_nu)
// applied to the base point, for a fixed reduced word (i_1..i_nu) of w0.

#include <vector>

#include "halfcircle/monoid.hpp"

namespace halfcircle {

struct CanonicalCoords {
  GraphPtr graph;
  SemifieldSpec spec;
  Word ii;
  std::vector<Scalar> c;

  bool operator==(const CanonicalCoords& other) const;
};

/// Certificate of a peel: nodes[0] is the input, nodes[k+1] is nodes[k]
/// with shift(ii[k], c[k]^-1) applied, and nodes.back() is the base point.
struct PeelTrace {
  Word ii;
  std::vector<MonoidElement> nodes;
  std::vector<Scalar> c;

  CanonicalCoords coords() const;
};

/// Requires ii to be a reduced word of w0 and H non-negative (tropical).
/// Throws NotInPlusPart for inputs outside the plus part and
/// InternalAssertion if a postcondition fails.
PeelTrace peel(const Word& ii, const MonoidElement& H);

MonoidElement reconstruct(const CanonicalCoords& cc);

/// Membership of cc in the image of the peel map, decided by round trip.
bool in_image(const CanonicalCoords& cc);

enum class Fixture {
  A2,        // ii = (i,j,i)
  A3Middle,  // ii = (j,k,i,j,k,i), j the middle node
  A3End,     // ii = (i,j,i,k,j,i)
};

/// A2 with i=1, j=2, or A3 with i=1, j=2, k=3.
GraphPtr fixture_graph(Fixture f);
Word fixture_word(Fixture f);

/// Closed forms for peeling i^C j^B i^A (A2) and the six-letter inputs
/// listed in the fixture chart (A3). Inputs must be tropical and >= 0.
CanonicalCoords closed_form_a2(const Scalar& C, const Scalar& B, const Scalar& A);
/// The printed A3 closed form (F, B-min(B,E)+D+C, A-min(A,D)+E+C, D+E+C,
/// min(B,E), min(A,D)). Peeling over the fixture word actually yields this
/// tuple with entries 2<->3 and 5<->6 exchanged; see the acceptance suite.
CanonicalCoords closed_form_a3_w1(const Scalar& F, const Scalar& E, const Scalar& D,
                                  const Scalar& C, const Scalar& B, const Scalar& A);
CanonicalCoords closed_form_a3_w2(const Scalar& F, const Scalar& E, const Scalar& D,
                                  const Scalar& C, const Scalar& B, const Scalar& A);

/// Closed-form image test for the three fixtures (tropical product is +,
/// comparisons are between real values).
///   A2:       b >= a
///   A3Middle: e+d >= g >= a+b, d >= b, e >= a
///   A3End:    e >= d, g >= b >= a
bool image_inequalities(Fixture f, const CanonicalCoords& cc);

std::string describe(const CanonicalCoords& cc);

}  // namespace halfcircle
