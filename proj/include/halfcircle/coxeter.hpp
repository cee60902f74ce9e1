#pragma once

// Simply-laced Weyl groups: Cartan data, elements acting on the root
// lattice, reduced words and the commutation/braid moves between them.

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <shared_mutex>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace halfcircle {

/// Index of a generator in CoxeterGraph::letters().
using Letter = int;
using Word = std::vector<Letter>;

enum class MoveKind : std::uint8_t { Commute, Braid };

/// One elementary move on a word. A commute move swaps positions pos and
/// pos+1; a braid move rewrites (x,y,x) at pos..pos+2 into (y,x,y).
struct Move {
  std::size_t pos = 0;
  MoveKind kind = MoveKind::Commute;

  bool operator==(const Move&) const = default;
};

using MovePlan = std::vector<Move>;

class CoxeterGraph;
using GraphPtr = std::shared_ptr<const CoxeterGraph>;

/// An element of W stored as its action on the simple-root basis of the
/// root lattice, together with the action of its inverse. Holds a
/// non-owning reference; the graph must outlive the element.
class WeylElement {
 public:
  explicit WeylElement(const CoxeterGraph& graph);  // identity

  const CoxeterGraph& graph() const { return *graph_; }
  int rank() const { return rank_; }
  int length() const { return length_; }

  bool is_left_descent(Letter i) const;
  bool is_right_descent(Letter i) const;
  std::vector<Letter> left_descents() const;
  std::vector<Letter> right_descents() const;

  WeylElement left_mul(Letter i) const;   // s_i * w
  WeylElement right_mul(Letter i) const;  // w * s_i
  WeylElement operator*(const WeylElement& other) const;
  WeylElement inverse() const;

  /// Image of a root-lattice vector given in simple-root coordinates.
  std::vector<int> apply(std::span<const int> v) const;

  /// Lexicographically smallest reduced word under the letter order.
  Word reference_word() const;

  bool operator==(const WeylElement& other) const;

 private:
  int entry(const std::vector<int>& m, int row, int col) const {
    return m[static_cast<std::size_t>(col * rank_ + row)];
  }
  bool column_negative(const std::vector<int>& m, int col) const;

  const CoxeterGraph* graph_;
  int rank_ = 0;
  std::vector<int> fwd_;  // column j = w(alpha_j)
  std::vector<int> inv_;  // column j = w^{-1}(alpha_j)
  int length_ = 0;
};

/// Concurrent-read, serialized-write memo of move plans. Results never
/// depend on whether a lookup hits.
class PlanCache {
 public:
  std::optional<MovePlan> find(const std::vector<int>& key) const;
  void store(std::vector<int> key, MovePlan plan);
  std::size_t size() const;
  void clear();

 private:
  struct KeyHash {
    std::size_t operator()(const std::vector<int>& k) const noexcept;
  };

  static constexpr std::size_t kMaxEntries = 200000;

  mutable std::shared_mutex mutex_;
  std::unordered_map<std::vector<int>, MovePlan, KeyHash> plans_;
};

/// Simply-laced Cartan datum. Construct through build_graph(); instances
/// are immutable and shared.
class CoxeterGraph {
 public:
  struct Token {};  // restricts construction to the factory functions
  CoxeterGraph(Token, std::string name, std::vector<std::string> letters,
               std::vector<int> pairing);

  const std::string& name() const { return name_; }
  int rank() const { return static_cast<int>(letters_.size()); }
  const std::vector<std::string>& letters() const { return letters_; }
  const std::string& letter_name(Letter i) const;
  Letter letter(std::string_view name) const;  // throws ParseError
  bool has_letter(Letter i) const { return i >= 0 && i < rank(); }

  /// i.j in {2, 0, -1}.
  int pairing(Letter i, Letter j) const {
    return pairing_[static_cast<std::size_t>(i * rank() + j)];
  }

  const WeylElement& longest_element() const { return *w0_; }
  int nu() const { return w0_->length(); }
  Letter dual(Letter i) const { return dual_[static_cast<std::size_t>(i)]; }

  WeylElement identity() const;
  /// Product s_{i_1}...s_{i_n}; the word need not be reduced.
  WeylElement element(const Word& word) const;
  bool is_reduced(const Word& word) const;

  /// Positive roots in simple-root coordinates, generated by reflection
  /// closure from the simple roots.
  const std::vector<std::vector<int>>& positive_roots() const {
    return positive_roots_;
  }

  PlanCache& plan_cache() const { return cache_; }

  bool same_datum(const CoxeterGraph& other) const {
    return letters_ == other.letters_ && pairing_ == other.pairing_;
  }

 private:
  friend GraphPtr make_graph(std::string, std::vector<std::string>,
                             std::vector<int>);
  void finish();

  std::string name_;
  std::vector<std::string> letters_;
  std::vector<int> pairing_;
  std::vector<std::vector<int>> positive_roots_;
  std::unique_ptr<WeylElement> w0_;
  std::vector<Letter> dual_;
  mutable PlanCache cache_;
};

bool same_graph(const CoxeterGraph& a, const CoxeterGraph& b);

/// Accepts "A<n>" (n>=1), "D<n>" (n>=4), "E6", "E7", "E8", or
/// "letters: a b c; edges: a-b, b-c". Explicit graphs must be finite ADE.
GraphPtr build_graph(std::string_view spec);
GraphPtr build_graph(std::vector<std::string> letters,
                     const std::vector<std::pair<std::string, std::string>>& edges);

/// Type names for each connected component, e.g. {"A2", "D4"}; throws
/// NotSimplyLacedFinite when a component is not of type A, D or E.
std::vector<std::string> classify_components(int rank,
                                             const std::vector<int>& pairing);

std::pair<WeylElement, int> longest_element(const CoxeterGraph& g);
Letter dual_index(const CoxeterGraph& g, Letter i);
std::vector<Letter> left_descents(const WeylElement& w);
std::vector<Letter> right_descents(const WeylElement& w);

void apply_move(const CoxeterGraph& g, Word& word, const Move& move);
void apply_plan(const CoxeterGraph& g, Word& word, const MovePlan& plan);

MovePlan pull_to_front(const CoxeterGraph& g, const Word& word, Letter i);
MovePlan pull_to_back(const CoxeterGraph& g, const Word& word, Letter i);
MovePlan rewrite_plan(const CoxeterGraph& g, const Word& from, const Word& to);

std::vector<Word> enumerate_reduced_words(const WeylElement& w,
                                          std::size_t guard = 100000);

/// Uniformly chooses a left descent at each step; every reduced word of w
/// has positive probability.
Word random_reduced_word(const WeylElement& w, std::mt19937_64& rng);

std::string format_word(const CoxeterGraph& g, const Word& word);

}  // namespace halfcircle
