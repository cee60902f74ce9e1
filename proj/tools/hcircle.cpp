// hcircle: canonical coordinates, paths and self tests from the command line.
//
// Exit codes: 0 ok, 1 property failure, 2 parse error, 3 precondition
// violation.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "halfcircle/canonical.hpp"
#include "halfcircle/connect.hpp"
#include "halfcircle/error.hpp"
#include "halfcircle/io.hpp"
#include "halfcircle/selftest.hpp"

namespace hc = halfcircle;
using nlohmann::json;

namespace {

constexpr int kOk = 0, kPropertyFailure = 1, kParseError = 2, kPrecondition = 3;

struct Options {
  std::string type;
  std::string semifield;
  std::string ii;
  std::string chart;
  std::string format = "text";
  std::string input;
  std::uint64_t seed = 1;
  int iters = 100;
  bool trace = false;
  bool corrupt_braid = false;
};

std::vector<std::string> read_lines(const Options& o) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (!o.input.empty() && o.input != "-") {
    file.open(o.input);
    if (!file) hc::raise(hc::Errc::ParseError, "cannot open " + o.input);
    in = &file;
  }
  std::vector<std::string> lines;
  for (std::string l; std::getline(*in, l);) {
    const auto b = l.find_first_not_of(" \t\r");
    if (b == std::string::npos || l[b] == '#') continue;
    lines.push_back(l);
  }
  return lines;
}

void check_flags(const Options& o, const hc::CoxeterGraph& g, hc::SemifieldSpec spec) {
  if (!o.type.empty() && !hc::same_graph(*hc::build_graph(o.type), g))
    hc::raise(hc::Errc::SpecMismatch, "input is of type " + g.name() + ", not " + o.type);
  if (!o.semifield.empty() && hc::SemifieldSpec::parse(o.semifield) != spec)
    hc::raise(hc::Errc::SpecMismatch,
              "input is over " + std::string(spec.name()) + ", not " + o.semifield);
}

std::vector<hc::MonoidElement> read_elements(const Options& o, std::size_t count) {
  const auto lines = read_lines(o);
  if (lines.size() != count)
    hc::raise(hc::Errc::ParseError, "expected " + std::to_string(count) + " element line(s), got " +
                                        std::to_string(lines.size()));
  std::vector<hc::MonoidElement> out;
  for (const auto& l : lines) {
    out.push_back(hc::parse_element(l));
    check_flags(o, out.back().graph(), out.back().spec());
  }
  return out;
}

hc::CanonicalCoords read_canonical(const Options& o) {
  const auto lines = read_lines(o);
  if (lines.size() != 1) hc::raise(hc::Errc::ParseError, "expected one canonical-coordinate line");
  hc::CanonicalCoords cc = hc::parse_canonical(lines.front());
  check_flags(o, *cc.graph, cc.spec);
  return cc;
}

hc::Word word_flag(const std::string& text, const hc::CoxeterGraph& g, const hc::Word& fallback) {
  return text.empty() ? fallback : hc::parse_word(g, text);
}

std::optional<hc::Word> chart_flag(const Options& o, const hc::CoxeterGraph& g) {
  if (o.chart.empty()) return std::nullopt;
  return hc::parse_word(g, o.chart);
}

bool json_output(const Options& o) { return o.format == "json"; }

int cmd_canon(const Options& o) {
  const hc::MonoidElement H = read_elements(o, 1).front();
  const hc::CoxeterGraph& g = H.graph();
  const hc::Word ii = word_flag(o.ii, g, g.longest_element().reference_word());
  if (!hc::is_plus(H)) hc::raise(hc::Errc::NotInPlusPart, hc::describe(H));
  // Peel from the reference chart, where plus-part membership was checked.
  const hc::PeelTrace t = hc::peel(ii, hc::rewrite(H, H.weyl().reference_word()));
  const auto chart = chart_flag(o, g);
  if (json_output(o)) {
    json out = hc::canonical_to_json(t.coords());
    if (o.trace) {
      json nodes = json::array();
      for (const auto& n : t.nodes) nodes.push_back(hc::element_to_json(hc::in_output_chart(n, chart)));
      out["trace"] = nodes;
    }
    std::cout << out.dump() << "\n";
    return kOk;
  }
  std::cout << hc::format_canonical(t.coords()) << "\n";
  if (o.trace) {
    for (std::size_t k = 0; k < t.nodes.size(); ++k) {
      std::cout << "H" << k + 1 << ": " << hc::format_element(hc::in_output_chart(t.nodes[k], chart))
                << "\n";
      if (k < t.c.size())
        std::cout << "  peel " << g.letter_name(ii[k]) << " " << t.c[k].str() << "\n";
    }
  }
  return kOk;
}

int cmd_reconstruct(const Options& o) {
  const hc::CanonicalCoords cc = read_canonical(o);
  const hc::MonoidElement H = hc::in_output_chart(hc::reconstruct(cc), chart_flag(o, *cc.graph));
  std::cout << (json_output(o) ? hc::element_to_json(H).dump() : hc::format_element(H)) << "\n";
  return kOk;
}

int cmd_member(const Options& o) {
  const hc::CanonicalCoords cc = read_canonical(o);
  bool member = false;
  try {
    member = hc::in_image(cc);
  } catch (const hc::Error& e) {
    // Points outside the plus part are simply not in the image.
    if (e.code() != hc::Errc::NotInPlusPart) throw;
  }
  if (json_output(o))
    std::cout << json{{"member", member}}.dump() << "\n";
  else
    std::cout << "member=" << (member ? "true" : "false") << "\n";
  return kOk;
}

int cmd_path(const Options& o) {
  const auto elems = read_elements(o, 2);
  const hc::MonoidElement &H = elems[0], &Ht = elems[1];
  if (H.spec() != Ht.spec()) hc::raise(hc::Errc::SpecMismatch, "endpoints use different semifields");
  if (!hc::same_graph(H.graph(), Ht.graph()))
    hc::raise(hc::Errc::SpecMismatch, "endpoints have different types");
  const hc::CoxeterGraph& g = H.graph();
  const hc::Word ii = word_flag(o.ii, g, g.longest_element().reference_word());

  hc::Path path;
  switch (H.spec().kind()) {
    case hc::SemifieldKind::TropInt:
    case hc::SemifieldKind::TropRat:
      path = hc::path_tropical(H, Ht, ii).path;
      break;
    case hc::SemifieldKind::RatPos:
      path = hc::path_ordered_field(H, Ht, ii);
      break;
    case hc::SemifieldKind::Trivial:
      hc::raise(hc::Errc::Unsupported, "paths need a tropical or rat-pos semifield");
  }
  const hc::PathReport report = hc::validate_path(path, &H, &Ht);
  const int bound = hc::distance_bound(g);
  const auto chart = chart_flag(o, g);
  if (json_output(o))
    std::cout << hc::path_to_json(path, report, bound, chart).dump() << "\n";
  else
    std::cout << hc::format_path(path, report, bound, chart);
  const bool ok = report.ok() && static_cast<int>(report.nontrivial) <= bound;
  if (!ok)
    for (const auto& [k, why] : report.failures) std::cerr << "edge " << k << ": " << why << "\n";
  return ok ? kOk : kPropertyFailure;
}

int cmd_rewrite(const Options& o) {
  const hc::MonoidElement e = read_elements(o, 1).front();
  // --ii is accepted as a synonym for --chart here.
  const std::string& target = o.chart.empty() ? o.ii : o.chart;
  std::optional<hc::Word> chart;
  if (!target.empty()) chart = hc::parse_word(e.graph(), target);
  const hc::MonoidElement out = hc::in_output_chart(e, chart);
  std::cout << (json_output(o) ? hc::element_to_json(out).dump() : hc::format_element(out)) << "\n";
  return kOk;
}

int cmd_chi(const Options& o) {
  const hc::MonoidElement e = read_elements(o, 1).front();
  const hc::Word chi = hc::zero_pattern(e).reference_word();
  const std::string text = hc::format_word(e.graph(), chi);
  if (json_output(o)) {
    json word = json::array();
    for (hc::Letter i : chi) word.push_back(e.graph().letter_name(i));
    std::cout << json{{"chi", word}, {"length", chi.size()}}.dump() << "\n";
  } else {
    std::cout << "chi:" << (text.empty() ? "" : " " + text) << "\n";
  }
  return kOk;
}

int cmd_selftest(const Options& o) {
  hc::fault_injection::corrupt_braid(o.corrupt_braid);
  const auto results =
      hc::run_selftest({o.type.empty() ? "A3" : o.type, o.iters, o.seed, /*parallel=*/true});
  hc::print_selftest(results, std::cout);
  return hc::selftest_ok(results) ? kOk : kPropertyFailure;
}

int exit_code(const hc::Error& e) {
  switch (e.code()) {
    case hc::Errc::ParseError: return kParseError;
    case hc::Errc::InternalAssertion: return kPropertyFailure;
    default: return kPrecondition;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Canonical coordinates and half-circle paths over semifields"};
  app.require_subcommand(1);
  Options o;

  auto add_shared = [&o](CLI::App* sub) {
    sub->add_option("--type", o.type, "Cartan type (A<n>, D<n>, E6-E8 or an explicit graph)");
    sub->add_option("--semifield", o.semifield, "trop-int, trop-rat or rat-pos")
        ->check(CLI::IsMember({"trop-int", "trop-rat", "rat-pos"}));
    sub->add_option("--ii", o.ii, "reduced word of w0, letters separated by spaces");
    sub->add_option("--seed", o.seed, "random seed");
    sub->add_option("--iters", o.iters, "iterations per property")->check(CLI::NonNegativeNumber);
    sub->add_option("--chart", o.chart, "output chart (a reduced word)");
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--input", o.input, "input file (default: standard input)");
  };

  struct Command {
    const char* name;
    const char* help;
    int (*run)(const Options&);
  };
  const Command commands[] = {
      {"canon", "canonical coordinates of a non-negative point", cmd_canon},
      {"reconstruct", "point with the given canonical coordinates", cmd_reconstruct},
      {"member", "whether a coordinate vector is in the image of the peel map", cmd_member},
      {"path", "path between two points, validated", cmd_path},
      {"rewrite", "move an element to another chart", cmd_rewrite},
      {"chi", "zero pattern of a non-negative element", cmd_chi},
      {"selftest", "run the randomized property suites", cmd_selftest},
  };
  int (*selected)(const Options&) = nullptr;
  for (const Command& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    add_shared(sub);
    if (std::string(c.name) == "canon") sub->add_flag("--trace", o.trace, "print the peel trace");
    if (std::string(c.name) == "selftest")
      sub->add_flag("--corrupt-braid", o.corrupt_braid)->group("");  // negative control
    sub->callback([&selected, run = c.run] { selected = run; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParseError;
  }

  try {
    if (!o.type.empty()) hc::build_graph(o.type);
    if (!o.semifield.empty()) hc::SemifieldSpec::parse(o.semifield);
    return selected(o);
  } catch (const hc::Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPropertyFailure;
  }
}
