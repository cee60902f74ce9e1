#include "halfcircle/monoid.hpp"

#include <atomic>

#include "halfcircle/error.hpp"

namespace halfcircle {

namespace fault_injection {
namespace {
std::atomic<bool> braid_fault{false};
}
void corrupt_braid(bool on) { braid_fault.store(on); }
bool braid_corrupted() { return braid_fault.load(); }
}  // namespace fault_injection

MonoidElement::MonoidElement(GraphPtr graph, SemifieldSpec spec, Word word,
                             std::vector<Scalar> coords)
    : graph_(std::move(graph)),
      spec_(spec),
      w_(graph_->identity()),
      word_(std::move(word)),
      coords_(std::move(coords)) {
  for (Letter i : word_) {
    if (!graph_->has_letter(i)) raise(Errc::ParseError, "letter index out of range");
    if (w_.is_right_descent(i)) raise(Errc::NotReduced, format_word(*graph_, word_));
    w_ = w_.right_mul(i);
  }
  if (coords_.size() != word_.size())
    raise(Errc::LengthMismatch, std::to_string(coords_.size()) + " coordinates for a word of length " +
                                    std::to_string(word_.size()));
  for (const Scalar& a : coords_) {
    if (a.spec() != spec_)
      raise(Errc::MixedSemifields,
            std::string(a.spec().name()) + " coordinate in a " + std::string(spec_.name()) + " element");
  }
}

MonoidElement MonoidElement::identity(GraphPtr graph, SemifieldSpec spec) {
  return MonoidElement(std::move(graph), spec, {}, {});
}

void MonoidElement::transport(const MovePlan& plan) {
  for (const Move& m : plan) {
    apply_move(*graph_, word_, m);
    Scalar* x = coords_.data() + m.pos;
    if (m.kind == MoveKind::Commute) {
      std::swap(x[0], x[1]);
    } else {
      auto next = braid_transport(x[0], x[1], x[2]);
      x[0] = std::move(next[0]);
      x[1] = std::move(next[1]);
      x[2] = std::move(next[2]);
    }
  }
}

void MonoidElement::pull_front(Letter i) { transport(pull_to_front(*graph_, word_, i)); }

void MonoidElement::pull_back(Letter i) { transport(pull_to_back(*graph_, word_, i)); }

bool MonoidElement::operator==(const MonoidElement& other) const {
  if (!same_graph(*graph_, *other.graph_) || spec_ != other.spec_) return false;
  if (!(w_ == other.w_)) return false;
  const Word ref = w_.reference_word();
  if (word_ == ref && other.word_ == ref) return coords_ == other.coords_;
  return rewrite(*this, ref).coords_ == rewrite(other, ref).coords_;
}

MonoidElement from_word(GraphPtr graph, SemifieldSpec spec, Word word, std::vector<Scalar> coords) {
  return MonoidElement(std::move(graph), spec, std::move(word), std::move(coords));
}

MonoidElement rewrite(const MonoidElement& e, const Word& to) {
  MonoidElement out = e;
  out.transport(rewrite_plan(e.graph(), e.word(), to));
  return out;
}

bool equals(const MonoidElement& a, const MonoidElement& b) { return a == b; }

std::array<Scalar, 3> braid_transport(const Scalar& a, const Scalar& b, const Scalar& c) {
  Scalar mid = splus(a, c);
  const Scalar inv_mid = sinv(mid);
  Scalar last = sprod(sprod(a, b), inv_mid);
  Scalar first = sprod(sprod(b, c), inv_mid);
  if (fault_injection::braid_corrupted()) std::swap(first, last);
  return {std::move(first), std::move(mid), std::move(last)};
}

namespace {

void require_scalar(const MonoidElement& e, const Scalar& a) {
  if (a.spec() != e.spec())
    raise(Errc::MixedSemifields,
          std::string(a.spec().name()) + " scalar with a " + std::string(e.spec().name()) + " element");
}

void require_letter(const MonoidElement& e, Letter i) {
  if (!e.graph().has_letter(i)) raise(Errc::ParseError, "letter index out of range");
}

}  // namespace

MonoidElement right_mul_gen(const MonoidElement& e, Letter i, const Scalar& a) {
  require_letter(e, i);
  require_scalar(e, a);
  MonoidElement out = e;
  if (!e.weyl().is_right_descent(i)) {
    out.word_.push_back(i);
    out.coords_.push_back(a);
    out.w_ = out.w_.right_mul(i);
  } else {
    out.pull_back(i);
    out.coords_.back() = splus(out.coords_.back(), a);
  }
  return out;
}

MonoidElement left_mul_gen(Letter i, const Scalar& a, const MonoidElement& e) {
  require_letter(e, i);
  require_scalar(e, a);
  MonoidElement out = e;
  if (!e.weyl().is_left_descent(i)) {
    out.word_.insert(out.word_.begin(), i);
    out.coords_.insert(out.coords_.begin(), a);
    out.w_ = out.w_.left_mul(i);
  } else {
    out.pull_front(i);
    out.coords_.front() = splus(out.coords_.front(), a);
  }
  return out;
}

MonoidElement multiply(const MonoidElement& a, const MonoidElement& b) {
  if (!same_graph(a.graph(), b.graph())) raise(Errc::SpecMismatch, "different Cartan data");
  if (a.spec() != b.spec()) raise(Errc::MixedSemifields, "different semifields");
  MonoidElement out = a;
  for (std::size_t k = 0; k < b.size(); ++k) out = right_mul_gen(out, b.word()[k], b.coords()[k]);
  return out;
}

MonoidElement shift(Letter i, const Scalar& a, const MonoidElement& e) {
  require_letter(e, i);
  require_scalar(e, a);
  if (!e.weyl().is_left_descent(i))
    raise(Errc::NotADescent, e.graph().letter_name(i) + " is not a left descent");
  MonoidElement out = e;
  out.pull_front(i);
  out.coords_.front() = sprod(out.coords_.front(), a);
  return out;
}

Scalar leading_coordinate(Letter i, const MonoidElement& e) {
  require_letter(e, i);
  if (!e.weyl().is_left_descent(i))
    raise(Errc::NotADescent, e.graph().letter_name(i) + " is not a left descent");
  if (!e.word().empty() && e.word().front() == i) return e.coords().front();
  MonoidElement tmp = e;
  tmp.pull_front(i);
  return tmp.coords().front();
}

MonoidElement rescale(const Rescaling& p, const MonoidElement& e) {
  if (p.factors.size() != static_cast<std::size_t>(e.graph().rank()))
    raise(Errc::LengthMismatch, "rescaling must assign a factor to every letter");
  std::vector<Scalar> coords;
  coords.reserve(e.size());
  for (std::size_t m = 0; m < e.size(); ++m) {
    const Scalar& f = p.factors[static_cast<std::size_t>(e.word()[m])];
    require_scalar(e, f);
    coords.push_back(sprod(e.coords()[m], f));
  }
  return MonoidElement(e.graph_ptr(), e.spec(), e.word(), std::move(coords));
}

WeylElement zero_pattern(const MonoidElement& e) {
  if (!e.spec().is_tropical())
    raise(Errc::NoPlusPart, std::string(e.spec().name()) + " has no plus part");
  MonoidElement trivial = MonoidElement::identity(e.graph_ptr(), SemifieldKind::Trivial);
  for (std::size_t m = 0; m < e.size(); ++m) {
    const int sign = sgn(e.coords()[m].real());
    if (sign < 0) raise(Errc::NotInPlusPart, describe(e));
    if (sign == 0) trivial = right_mul_gen(trivial, e.word()[m], Scalar::unit());
  }
  return trivial.weyl();
}

bool zero_pattern_consistent(const MonoidElement& e, std::mt19937_64& rng,
                             std::size_t exhaustive_limit, int samples) {
  const WeylElement expected = zero_pattern(e);
  std::vector<Word> charts;
  try {
    charts = enumerate_reduced_words(e.weyl(), exhaustive_limit);
  } catch (const Error& err) {
    if (err.code() != Errc::TooLarge) throw;
    charts.clear();
    for (int k = 0; k < samples; ++k) charts.push_back(random_reduced_word(e.weyl(), rng));
  }
  for (const Word& chart : charts)
    if (!(zero_pattern(rewrite(e, chart)) == expected)) return false;
  return true;
}

MonoidElement base_point(GraphPtr graph, SemifieldSpec spec) {
  if (!spec.has_plus_part())
    raise(Errc::NoPlusPart, std::string(spec.name()) + " has no plus part");
  Word word = graph->longest_element().reference_word();
  std::vector<Scalar> coords(word.size(), sone(spec));
  return MonoidElement(std::move(graph), spec, std::move(word), std::move(coords));
}

bool is_plus_in_chart(const MonoidElement& e) {
  for (const Scalar& a : e.coords())
    if (!in_plus_part(a)) return false;
  return true;
}

bool is_plus(const MonoidElement& e) {
  if (!e.spec().has_plus_part())
    raise(Errc::NoPlusPart, std::string(e.spec().name()) + " has no plus part");
  return is_plus_in_chart(rewrite(e, e.weyl().reference_word()));
}

std::string describe(const MonoidElement& e) {
  std::string out = e.graph().name() + " | " + std::string(e.spec().name()) + " | " +
                    format_word(e.graph(), e.word()) + " |";
  for (const Scalar& a : e.coords()) out += " " + a.str();
  return out;
}

}  // namespace halfcircle
