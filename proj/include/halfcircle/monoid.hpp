#pragma once

// Elements of the monoid generated by symbols i^a (i a letter, a a semifield
// scalar) subject to the commutation, braid and i^a i^b = i^{a+b} relations.
// An element is stored in a chart: a reduced word of its Weyl group image
// together with one coordinate per letter.

#include <array>
#include <random>
#include <vector>

#include "halfcircle/coxeter.hpp"
#include "halfcircle/semifield.hpp"

namespace halfcircle {

class MonoidElement {
 public:
  /// Validating constructor: the word must be reduced, coordinates must
  /// match it in number and all belong to `spec`.
  MonoidElement(GraphPtr graph, SemifieldSpec spec, Word word, std::vector<Scalar> coords);

  static MonoidElement identity(GraphPtr graph, SemifieldSpec spec);

  const CoxeterGraph& graph() const { return *graph_; }
  const GraphPtr& graph_ptr() const { return graph_; }
  SemifieldSpec spec() const { return spec_; }
  const WeylElement& weyl() const { return w_; }
  const Word& word() const { return word_; }
  const std::vector<Scalar>& coords() const { return coords_; }
  std::size_t size() const { return word_.size(); }

  /// Moves to another chart of the same element, transporting coordinates.
  void transport(const MovePlan& plan);
  void pull_front(Letter i);
  void pull_back(Letter i);

  /// Chart-independent equality; different Weyl images compare unequal.
  bool operator==(const MonoidElement& other) const;

 private:
  GraphPtr graph_;
  SemifieldSpec spec_;
  WeylElement w_;
  Word word_;
  std::vector<Scalar> coords_;

  friend MonoidElement right_mul_gen(const MonoidElement&, Letter, const Scalar&);
  friend MonoidElement left_mul_gen(Letter, const Scalar&, const MonoidElement&);
  friend MonoidElement shift(Letter, const Scalar&, const MonoidElement&);
};

/// Per-letter factors; factors[i] scales every coordinate carried by i.
struct Rescaling {
  std::vector<Scalar> factors;
};

MonoidElement from_word(GraphPtr graph, SemifieldSpec spec, Word word, std::vector<Scalar> coords);
MonoidElement rewrite(const MonoidElement& e, const Word& to);
bool equals(const MonoidElement& a, const MonoidElement& b);

/// Coordinate change for (i,j,i) -> (j,i,j) with i.j = -1:
/// b' = a+c, c' = ab/(a+c), a' = bc/(a+c), all in semifield operations.
std::array<Scalar, 3> braid_transport(const Scalar& a, const Scalar& b, const Scalar& c);

MonoidElement right_mul_gen(const MonoidElement& e, Letter i, const Scalar& a);
MonoidElement left_mul_gen(Letter i, const Scalar& a, const MonoidElement& e);
MonoidElement multiply(const MonoidElement& a, const MonoidElement& b);

/// Multiplies the leading coordinate of a chart starting with i by a.
/// Requires i to be a left descent.
MonoidElement shift(Letter i, const Scalar& a, const MonoidElement& e);
/// Leading coordinate of a chart starting with i.
Scalar leading_coordinate(Letter i, const MonoidElement& e);

MonoidElement rescale(const Rescaling& p, const MonoidElement& e);

/// Demazure product of the letters whose coordinate is 0 in the current
/// chart. Coordinates must be tropical and non-negative.
WeylElement zero_pattern(const MonoidElement& e);
/// Recomputes zero_pattern in every chart (when there are at most
/// `exhaustive_limit` of them) or in `samples` random charts. Returns
/// false on any disagreement.
bool zero_pattern_consistent(const MonoidElement& e, std::mt19937_64& rng,
                             std::size_t exhaustive_limit = 20000, int samples = 8);

/// The longest-element point with every coordinate equal to the unit.
MonoidElement base_point(GraphPtr graph, SemifieldSpec spec);

/// True iff every coordinate is >= 0 in the reference chart.
bool is_plus(const MonoidElement& e);
/// Same test in the current chart only.
bool is_plus_in_chart(const MonoidElement& e);

std::string describe(const MonoidElement& e);

namespace fault_injection {
// Swaps a' and c' in braid_transport. Only for exercising the self test's
// failure path.
void corrupt_braid(bool on);
bool braid_corrupted();
}  // namespace fault_injection

}  // namespace halfcircle
