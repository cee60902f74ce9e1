#pragma once

// The graph on longest-element points: H and H' are adjacent when
// H' = shift(i, a, H) for some letter i and scalar a != 1. Explicit paths
// of length at most 2*nu - 1 between any two points, for tropical
// semifields and for the positive rationals.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "halfcircle/monoid.hpp"

namespace halfcircle {

struct EdgeLabel {
  Letter letter = 0;
  Scalar a;

  bool degenerate() const { return is_one(a); }
  bool operator==(const EdgeLabel&) const = default;
};

/// nodes[k+1] = shift(labels[k].letter, labels[k].a, nodes[k]).
struct Path {
  std::vector<MonoidElement> nodes;
  std::vector<EdgeLabel> labels;
};

struct PathReport {
  std::size_t edges = 0;       // labels emitted
  std::size_t nontrivial = 0;  // labels with a != 1
  bool endpoints_ok = true;
  std::vector<std::pair<std::size_t, std::string>> failures;  // (edge index, reason)

  bool ok() const { return failures.empty() && endpoints_ok; }
};

/// 2*nu - 1.
int distance_bound(const CoxeterGraph& g);

/// Returns the label of an edge from H to Ht, trying letters in order;
/// nullopt when H == Ht or the two are not adjacent.
std::optional<EdgeLabel> is_edge(const MonoidElement& H, const MonoidElement& Ht);

struct TropicalPath {
  Path path;
  Rescaling shift_to_plus;  // p with rescale(p, .) landing both ends in the plus part
  std::vector<Scalar> c;    // canonical coordinates of the rescaled source
  std::vector<Scalar> d;    // canonical coordinates of the rescaled target
};

/// Per-letter p(i) = max(0, -m_i), m_i the smallest coordinate carried by
/// i in chart ii across both elements.
Rescaling plus_rescaling(const MonoidElement& H, const MonoidElement& Ht, const Word& ii);

TropicalPath path_tropical(const MonoidElement& H, const MonoidElement& Ht, const Word& ii);

struct CommonBase {
  MonoidElement u;               // chart ii, coordinates `steps`
  std::vector<Scalar> steps;     // the values peeled off, indexed like ii
  std::vector<Scalar> c;         // u' u^-1 in chart ii
  std::vector<Scalar> d;         // u'' u^-1 in chart ii
};

/// For two rat-pos points finds u with u' u^-1 and u'' u^-1 both positive.
CommonBase common_base(const MonoidElement& u1, const MonoidElement& u2, const Word& ii);

Path path_ordered_field(const MonoidElement& u1, const MonoidElement& u2, const Word& ii);

PathReport validate_path(const Path& path, const MonoidElement* from = nullptr,
                         const MonoidElement* to = nullptr);

/// Breadth-first distance inside the finite subgraph of A2 trop-int points
/// whose reference-chart coordinates lie in [lo, hi]. Only an upper bound
/// on the true distance; nullopt if Ht is unreachable inside the box.
std::optional<int> box_distance_a2(const MonoidElement& H, const MonoidElement& Ht, long lo,
                                   long hi);

}  // namespace halfcircle
