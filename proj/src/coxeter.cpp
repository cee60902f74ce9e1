#include "halfcircle/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "halfcircle/error.hpp"

namespace halfcircle {

// ---------------------------------------------------------------------------
// WeylElement

WeylElement::WeylElement(const CoxeterGraph& graph)
    : graph_(&graph), rank_(graph.rank()) {
  const auto n = static_cast<std::size_t>(rank_);
  fwd_.assign(n * n, 0);
  for (int j = 0; j < rank_; ++j) fwd_[static_cast<std::size_t>(j * rank_ + j)] = 1;
  inv_ = fwd_;
}

bool WeylElement::column_negative(const std::vector<int>& m, int col) const {
  // Roots have all coordinates of one sign.
  for (int r = 0; r < rank_; ++r) {
    const int v = entry(m, r, col);
    if (v != 0) return v < 0;
  }
  return false;
}

bool WeylElement::is_left_descent(Letter i) const {
  return column_negative(inv_, i);
}

bool WeylElement::is_right_descent(Letter i) const {
  return column_negative(fwd_, i);
}

std::vector<Letter> WeylElement::left_descents() const {
  std::vector<Letter> out;
  for (Letter i = 0; i < rank_; ++i)
    if (is_left_descent(i)) out.push_back(i);
  return out;
}

std::vector<Letter> WeylElement::right_descents() const {
  std::vector<Letter> out;
  for (Letter i = 0; i < rank_; ++i)
    if (is_right_descent(i)) out.push_back(i);
  return out;
}

namespace {

// m <- s_i * m : each column v gets v_i -= <v, alpha_i>.
void reflect_rows(const CoxeterGraph& g, std::vector<int>& m, int rank, Letter i) {
  for (int col = 0; col < rank; ++col) {
    int* v = &m[static_cast<std::size_t>(col * rank)];
    int dot = 0;
    for (int k = 0; k < rank; ++k) dot += v[k] * g.pairing(k, i);
    v[i] -= dot;
  }
}

// m <- m * s_i : column j gets col_j - (i.j) col_i.
void reflect_columns(const CoxeterGraph& g, std::vector<int>& m, int rank, Letter i) {
  const std::vector<int> col_i(m.begin() + i * rank, m.begin() + (i + 1) * rank);
  for (int j = 0; j < rank; ++j) {
    const int c = g.pairing(i, j);
    if (c == 0) continue;
    int* v = &m[static_cast<std::size_t>(j * rank)];
    for (int k = 0; k < rank; ++k) v[k] -= c * col_i[static_cast<std::size_t>(k)];
  }
}

}  // namespace

WeylElement WeylElement::left_mul(Letter i) const {
  WeylElement out = *this;
  out.length_ += is_left_descent(i) ? -1 : 1;
  reflect_rows(*graph_, out.fwd_, rank_, i);
  reflect_columns(*graph_, out.inv_, rank_, i);
  return out;
}

WeylElement WeylElement::right_mul(Letter i) const {
  WeylElement out = *this;
  out.length_ += is_right_descent(i) ? -1 : 1;
  reflect_columns(*graph_, out.fwd_, rank_, i);
  reflect_rows(*graph_, out.inv_, rank_, i);
  return out;
}

WeylElement WeylElement::operator*(const WeylElement& other) const {
  WeylElement out = *this;
  for (Letter i : other.reference_word()) out = out.right_mul(i);
  return out;
}

WeylElement WeylElement::inverse() const {
  WeylElement out = *this;
  std::swap(out.fwd_, out.inv_);
  return out;
}

std::vector<int> WeylElement::apply(std::span<const int> v) const {
  std::vector<int> out(static_cast<std::size_t>(rank_), 0);
  for (int col = 0; col < rank_; ++col) {
    const int x = v[static_cast<std::size_t>(col)];
    if (x == 0) continue;
    for (int r = 0; r < rank_; ++r) out[static_cast<std::size_t>(r)] += entry(fwd_, r, col) * x;
  }
  return out;
}

Word WeylElement::reference_word() const {
  Word word;
  word.reserve(static_cast<std::size_t>(length_));
  WeylElement rest = *this;
  while (rest.length() > 0) {
    Letter i = 0;
    while (!rest.is_left_descent(i)) ++i;
    word.push_back(i);
    rest = rest.left_mul(i);
  }
  return word;
}

bool WeylElement::operator==(const WeylElement& other) const {
  return same_graph(*graph_, *other.graph_) && fwd_ == other.fwd_;
}

// ---------------------------------------------------------------------------
// PlanCache

std::size_t PlanCache::KeyHash::operator()(const std::vector<int>& k) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int x : k) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

std::optional<MovePlan> PlanCache::find(const std::vector<int>& key) const {
  std::shared_lock lock(mutex_);
  auto it = plans_.find(key);
  if (it == plans_.end()) return std::nullopt;
  return it->second;
}

void PlanCache::store(std::vector<int> key, MovePlan plan) {
  std::unique_lock lock(mutex_);
  if (plans_.size() >= kMaxEntries) plans_.clear();
  plans_.emplace(std::move(key), std::move(plan));
}

std::size_t PlanCache::size() const {
  std::shared_lock lock(mutex_);
  return plans_.size();
}

void PlanCache::clear() {
  std::unique_lock lock(mutex_);
  plans_.clear();
}

// ---------------------------------------------------------------------------
// CoxeterGraph

CoxeterGraph::CoxeterGraph(Token, std::string name, std::vector<std::string> letters,
                           std::vector<int> pairing)
    : name_(std::move(name)), letters_(std::move(letters)), pairing_(std::move(pairing)) {}

const std::string& CoxeterGraph::letter_name(Letter i) const {
  if (!has_letter(i)) raise(Errc::ParseError, "letter index out of range");
  return letters_[static_cast<std::size_t>(i)];
}

Letter CoxeterGraph::letter(std::string_view name) const {
  for (std::size_t k = 0; k < letters_.size(); ++k)
    if (letters_[k] == name) return static_cast<Letter>(k);
  raise(Errc::ParseError, "unknown letter '" + std::string(name) + "' for " + name_);
}

WeylElement CoxeterGraph::identity() const { return WeylElement(*this); }

WeylElement CoxeterGraph::element(const Word& word) const {
  WeylElement w(*this);
  for (Letter i : word) {
    if (!has_letter(i)) raise(Errc::ParseError, "letter index out of range");
    w = w.right_mul(i);
  }
  return w;
}

bool CoxeterGraph::is_reduced(const Word& word) const {
  WeylElement w(*this);
  for (Letter i : word) {
    if (!has_letter(i)) return false;
    if (w.is_right_descent(i)) return false;
    w = w.right_mul(i);
  }
  return true;
}

void CoxeterGraph::finish() {
  const int n = rank();
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> frontier;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    seen.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& r : frontier) {
      for (int i = 0; i < n; ++i) {
        int dot = 0;
        for (int k = 0; k < n; ++k) dot += r[static_cast<std::size_t>(k)] * pairing(k, i);
        if (dot == 0) continue;
        auto s = r;
        s[static_cast<std::size_t>(i)] -= dot;
        if (std::any_of(s.begin(), s.end(), [](int x) { return x < 0; })) continue;
        if (seen.insert(s).second) next.push_back(std::move(s));
      }
    }
    frontier = std::move(next);
  }
  positive_roots_.assign(seen.begin(), seen.end());

  WeylElement w(*this);
  for (bool grew = true; grew;) {
    grew = false;
    for (Letter i = 0; i < n; ++i) {
      if (!w.is_right_descent(i)) {
        w = w.right_mul(i);
        grew = true;
        break;
      }
    }
  }
  if (static_cast<std::size_t>(w.length()) != positive_roots_.size())
    raise(Errc::InternalAssertion, "longest element length disagrees with root count");

  // w0(alpha_i) = -alpha_{i!}
  dual_.assign(static_cast<std::size_t>(n), -1);
  for (Letter i = 0; i < n; ++i) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    const auto img = w.apply(e);
    for (Letter j = 0; j < n; ++j)
      if (img[static_cast<std::size_t>(j)] == -1) dual_[static_cast<std::size_t>(i)] = j;
  }
  w0_ = std::make_unique<WeylElement>(std::move(w));
}

bool same_graph(const CoxeterGraph& a, const CoxeterGraph& b) {
  return &a == &b || a.same_datum(b);
}

// ---------------------------------------------------------------------------
// Construction and ADE recognition

std::vector<std::string> classify_components(int rank, const std::vector<int>& pairing) {
  auto adjacent = [&](int i, int j) {
    return pairing[static_cast<std::size_t>(i * rank + j)] == -1;
  };
  std::vector<int> comp(static_cast<std::size_t>(rank), -1);
  std::vector<std::string> names;
  for (int start = 0; start < rank; ++start) {
    if (comp[static_cast<std::size_t>(start)] >= 0) continue;
    const int id = static_cast<int>(names.size());
    std::vector<int> nodes{start};
    comp[static_cast<std::size_t>(start)] = id;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      for (int j = 0; j < rank; ++j) {
        if (adjacent(nodes[k], j) && comp[static_cast<std::size_t>(j)] < 0) {
          comp[static_cast<std::size_t>(j)] = id;
          nodes.push_back(j);
        }
      }
    }
    const int m = static_cast<int>(nodes.size());
    int edges = 0;
    std::vector<int> branch;
    for (int v : nodes) {
      int deg = 0;
      for (int j = 0; j < rank; ++j) deg += adjacent(v, j) ? 1 : 0;
      edges += deg;
      if (deg > 3) raise(Errc::NotSimplyLacedFinite, "vertex of degree > 3");
      if (deg == 3) branch.push_back(v);
    }
    edges /= 2;
    if (edges != m - 1) raise(Errc::NotSimplyLacedFinite, "component contains a cycle");
    if (branch.empty()) {
      names.push_back("A" + std::to_string(m));
      continue;
    }
    if (branch.size() > 1) raise(Errc::NotSimplyLacedFinite, "more than one branch vertex");
    const int center = branch.front();
    std::vector<int> arms;
    for (int j = 0; j < rank; ++j) {
      if (!adjacent(center, j)) continue;
      int prev = center, cur = j, len = 1;
      for (;;) {
        int step = -1;
        for (int t = 0; t < rank; ++t)
          if (t != prev && adjacent(cur, t)) step = t;
        if (step < 0) break;
        prev = cur;
        cur = step;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) {
      names.push_back("D" + std::to_string(m));
    } else if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) {
      names.push_back("E" + std::to_string(m));
    } else {
      raise(Errc::NotSimplyLacedFinite, "branched tree is not of type D or E");
    }
  }
  return names;
}

GraphPtr make_graph(std::string name, std::vector<std::string> letters,
                    std::vector<int> pairing) {
  auto g = std::make_shared<CoxeterGraph>(CoxeterGraph::Token{}, std::move(name),
                                          std::move(letters), std::move(pairing));
  g->finish();
  return g;
}

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<std::pair<int, int>> standard_edges(char family, int n) {
  std::vector<std::pair<int, int>> e;
  switch (family) {
    case 'A':
      for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
      break;
    case 'D':
      for (int i = 1; i < n - 1; ++i) e.emplace_back(i, i + 1);
      e.emplace_back(n - 2, n);
      break;
    case 'E':
      // Bourbaki labels: 1-3-4-5-...-n with 2 attached to 4.
      e.emplace_back(1, 3);
      e.emplace_back(2, 4);
      for (int i = 3; i < n; ++i) e.emplace_back(i, i + 1);
      break;
  }
  return e;
}

GraphPtr build_standard(char family, int n) {
  const bool ok = (family == 'A' && n >= 1) || (family == 'D' && n >= 4) ||
                  (family == 'E' && n >= 6 && n <= 8);
  if (!ok) {
    raise(Errc::NotSimplyLacedFinite,
          std::string(1, family) + std::to_string(n) + " is not a finite simply-laced type");
  }
  std::vector<std::string> letters;
  for (int i = 1; i <= n; ++i) letters.push_back(std::to_string(i));
  std::vector<int> pairing(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < n; ++i) pairing[static_cast<std::size_t>(i * n + i)] = 2;
  for (auto [a, b] : standard_edges(family, n)) {
    pairing[static_cast<std::size_t>((a - 1) * n + (b - 1))] = -1;
    pairing[static_cast<std::size_t>((b - 1) * n + (a - 1))] = -1;
  }
  return make_graph(std::string(1, family) + std::to_string(n), std::move(letters),
                    std::move(pairing));
}

GraphPtr build_explicit(std::string_view spec) {
  std::vector<std::string> letters;
  std::vector<std::pair<std::string, std::string>> edges;
  bool have_letters = false;
  for (const auto& clause : split(spec, ';')) {
    if (clause.empty()) continue;
    auto colon = clause.find(':');
    if (colon == std::string::npos) raise(Errc::ParseError, "expected 'letters:' or 'edges:'");
    const auto key = trim(std::string_view(clause).substr(0, colon));
    const auto body = trim(std::string_view(clause).substr(colon + 1));
    if (key == "letters") {
      std::istringstream in(body);
      for (std::string tok; in >> tok;) letters.push_back(tok);
      have_letters = true;
    } else if (key == "edges") {
      for (const auto& item : split(body, ',')) {
        if (item.empty()) continue;
        auto dash = item.find('-');
        if (dash == std::string::npos) raise(Errc::ParseError, "edge '" + item + "' lacks '-'");
        edges.emplace_back(trim(std::string_view(item).substr(0, dash)),
                           trim(std::string_view(item).substr(dash + 1)));
      }
    } else {
      raise(Errc::ParseError, "unknown clause '" + key + "'");
    }
  }
  if (!have_letters) {
    for (const auto& [a, b] : edges) {
      for (const auto& x : {a, b})
        if (std::find(letters.begin(), letters.end(), x) == letters.end()) letters.push_back(x);
    }
  }
  return build_graph(std::move(letters), edges);
}

}  // namespace

GraphPtr build_graph(std::vector<std::string> letters,
                     const std::vector<std::pair<std::string, std::string>>& edges) {
  if (letters.empty()) raise(Errc::ParseError, "graph needs at least one letter");
  const int n = static_cast<int>(letters.size());
  for (const auto& l : letters) {
    if (l.empty() || l.find_first_of(" \t|,;") != std::string::npos)
      raise(Errc::ParseError, "invalid letter token '" + l + "'");
  }
  if (std::set<std::string>(letters.begin(), letters.end()).size() != letters.size())
    raise(Errc::ParseError, "duplicate letters");
  auto index = [&](const std::string& name) {
    auto it = std::find(letters.begin(), letters.end(), name);
    if (it == letters.end()) raise(Errc::ParseError, "edge uses unknown letter '" + name + "'");
    return static_cast<int>(it - letters.begin());
  };
  std::vector<int> pairing(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < n; ++i) pairing[static_cast<std::size_t>(i * n + i)] = 2;
  for (const auto& [a, b] : edges) {
    const int i = index(a), j = index(b);
    if (i == j) raise(Errc::NotSimplyLacedFinite, "loop at '" + a + "'");
    pairing[static_cast<std::size_t>(i * n + j)] = -1;
    pairing[static_cast<std::size_t>(j * n + i)] = -1;
  }
  classify_components(n, pairing);

  std::string name = "letters:";
  for (const auto& l : letters) name += " " + l;
  name += "; edges:";
  bool first = true;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (pairing[static_cast<std::size_t>(i * n + j)] != -1) continue;
      name += first ? " " : ", ";
      name += letters[static_cast<std::size_t>(i)] + "-" + letters[static_cast<std::size_t>(j)];
      first = false;
    }
  }
  return make_graph(std::move(name), std::move(letters), std::move(pairing));
}

GraphPtr build_graph(std::string_view spec_in) {
  const std::string spec = trim(spec_in);
  if (spec.empty()) raise(Errc::ParseError, "empty type spec");

  static std::mutex registry_mutex;
  static std::map<std::string, GraphPtr> registry;
  {
    std::lock_guard lock(registry_mutex);
    if (auto it = registry.find(spec); it != registry.end()) return it->second;
  }

  GraphPtr g;
  if (spec.find(':') != std::string::npos) {
    g = build_explicit(spec);
  } else {
    const char family = spec[0];
    const std::string digits = spec.substr(1);
    if ((family != 'A' && family != 'D' && family != 'E') || digits.empty() ||
        !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }) ||
        digits.size() > 4) {
      raise(Errc::ParseError, "unrecognized type spec '" + spec + "'");
    }
    g = build_standard(family, std::stoi(digits));
  }
  std::lock_guard lock(registry_mutex);
  return registry.emplace(spec, g).first->second;
}

// ---------------------------------------------------------------------------
// Queries

std::pair<WeylElement, int> longest_element(const CoxeterGraph& g) {
  return {g.longest_element(), g.nu()};
}

Letter dual_index(const CoxeterGraph& g, Letter i) {
  if (!g.has_letter(i)) raise(Errc::ParseError, "letter index out of range");
  return g.dual(i);
}

std::vector<Letter> left_descents(const WeylElement& w) { return w.left_descents(); }
std::vector<Letter> right_descents(const WeylElement& w) { return w.right_descents(); }

// ---------------------------------------------------------------------------
// Moves and plans

void apply_move(const CoxeterGraph& g, Word& word, const Move& move) {
  const std::size_t width = move.kind == MoveKind::Commute ? 2 : 3;
  if (move.pos + width > word.size()) raise(Errc::InternalAssertion, "move out of range");
  Letter* w = word.data() + move.pos;
  if (move.kind == MoveKind::Commute) {
    if (g.pairing(w[0], w[1]) != 0) raise(Errc::InternalAssertion, "commute on non-commuting pair");
    std::swap(w[0], w[1]);
  } else {
    if (w[0] != w[2] || g.pairing(w[0], w[1]) != -1)
      raise(Errc::InternalAssertion, "braid on a non-braid triple");
    const Letter x = w[0], y = w[1];
    w[0] = y;
    w[1] = x;
    w[2] = y;
  }
}

void apply_plan(const CoxeterGraph& g, Word& word, const MovePlan& plan) {
  for (const Move& m : plan) apply_move(g, word, m);
}

namespace {

enum : int { kPullFront = 1, kRewrite = 2 };

// Brings letter i to position `off`; i must be a left descent of the
// element spelled by word[off..].
void pull_front_rec(const CoxeterGraph& g, Word& word, std::size_t off, Letter i,
                    MovePlan& plan) {
  if (off >= word.size()) raise(Errc::InternalAssertion, "pull ran off the end of the word");
  if (word[off] == i) return;
  const Letter head = word[off];
  pull_front_rec(g, word, off + 1, i, plan);
  Move m{off, MoveKind::Commute};
  if (g.pairing(i, head) != 0) {
    // (head, i, ...) with i.head = -1: expose (head, i, head, ...) first.
    pull_front_rec(g, word, off + 2, head, plan);
    m.kind = MoveKind::Braid;
  }
  apply_move(g, word, m);
  plan.push_back(m);
}

void require_reduced(const CoxeterGraph& g, const Word& word) {
  if (!g.is_reduced(word)) raise(Errc::NotReduced, format_word(g, word));
}

std::vector<int> make_key(int op, Letter i, const Word& a, const Word* b = nullptr) {
  std::vector<int> key;
  key.reserve(a.size() + (b ? b->size() : 0) + 3);
  key.push_back(op);
  key.push_back(i);
  key.insert(key.end(), a.begin(), a.end());
  if (b) {
    key.push_back(-1);
    key.insert(key.end(), b->begin(), b->end());
  }
  return key;
}

MovePlan reversed_plan(const MovePlan& plan, std::size_t n) {
  MovePlan out;
  out.reserve(plan.size());
  for (const Move& m : plan) {
    const std::size_t width = m.kind == MoveKind::Commute ? 2 : 3;
    out.push_back({n - m.pos - width, m.kind});
  }
  return out;
}

}  // namespace

MovePlan pull_to_front(const CoxeterGraph& g, const Word& word, Letter i) {
  if (!g.has_letter(i)) raise(Errc::ParseError, "letter index out of range");
  if (!word.empty() && word.front() == i) return {};
  auto key = make_key(kPullFront, i, word);
  if (auto hit = g.plan_cache().find(key)) return *hit;
  require_reduced(g, word);
  if (!g.element(word).is_left_descent(i))
    raise(Errc::NotADescent, g.letter_name(i) + " is not a left descent of " + format_word(g, word));
  Word work = word;
  MovePlan plan;
  pull_front_rec(g, work, 0, i, plan);
  g.plan_cache().store(std::move(key), plan);
  return plan;
}

MovePlan pull_to_back(const CoxeterGraph& g, const Word& word, Letter i) {
  if (!g.has_letter(i)) raise(Errc::ParseError, "letter index out of range");
  if (!word.empty() && word.back() == i) return {};
  Word rev(word.rbegin(), word.rend());
  try {
    return reversed_plan(pull_to_front(g, rev, i), word.size());
  } catch (const Error& e) {
    if (e.code() == Errc::NotADescent)
      raise(Errc::NotADescent,
            g.letter_name(i) + " is not a right descent of " + format_word(g, word));
    throw;
  }
}

MovePlan rewrite_plan(const CoxeterGraph& g, const Word& from, const Word& to) {
  if (from == to) return {};
  auto key = make_key(kRewrite, 0, from, &to);
  if (auto hit = g.plan_cache().find(key)) return *hit;
  require_reduced(g, from);
  require_reduced(g, to);
  if (from.size() != to.size() || !(g.element(from) == g.element(to)))
    raise(Errc::DifferentElements, format_word(g, from) + " vs " + format_word(g, to));
  Word work = from;
  MovePlan plan;
  for (std::size_t k = 0; k < to.size(); ++k) pull_front_rec(g, work, k, to[k], plan);
  if (work != to) raise(Errc::InternalAssertion, "rewrite plan missed its target");
  g.plan_cache().store(std::move(key), plan);
  return plan;
}

std::vector<Word> enumerate_reduced_words(const WeylElement& w, std::size_t guard) {
  std::vector<Word> out;
  Word prefix;
  auto dfs = [&](auto&& self, const WeylElement& rest) -> void {
    if (rest.length() == 0) {
      if (out.size() >= guard)
        raise(Errc::TooLarge, "more than " + std::to_string(guard) + " reduced words");
      out.push_back(prefix);
      return;
    }
    for (Letter i : rest.left_descents()) {
      prefix.push_back(i);
      self(self, rest.left_mul(i));
      prefix.pop_back();
    }
  };
  dfs(dfs, w);
  return out;
}

Word random_reduced_word(const WeylElement& w, std::mt19937_64& rng) {
  Word word;
  WeylElement rest = w;
  while (rest.length() > 0) {
    const auto desc = rest.left_descents();
    std::uniform_int_distribution<std::size_t> pick(0, desc.size() - 1);
    const Letter i = desc[pick(rng)];
    word.push_back(i);
    rest = rest.left_mul(i);
  }
  return word;
}

std::string format_word(const CoxeterGraph& g, const Word& word) {
  std::string out;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) out += ' ';
    out += g.has_letter(word[k]) ? g.letter_name(word[k]) : std::string("?");
  }
  return out;
}

}  // namespace halfcircle
