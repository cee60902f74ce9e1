#include "halfcircle/io.hpp"

#include <sstream>

#include "halfcircle/error.hpp"

namespace halfcircle {

using nlohmann::json;

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> fields(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    auto pos = line.find('|', start);
    out.push_back(trim(line.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<std::string> tokens(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

std::string strip_label(const std::string& field, std::string_view label) {
  if (field.rfind(label, 0) != 0)
    raise(Errc::ParseError, "expected '" + std::string(label) + "' in '" + field + "'");
  return field.substr(label.size());
}

std::string json_token(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return v.dump();
  raise(Errc::ParseError, "expected a string or integer, got " + v.dump());
}

std::vector<Scalar> parse_scalars(SemifieldSpec spec, const std::vector<std::string>& toks) {
  std::vector<Scalar> out;
  out.reserve(toks.size());
  for (const auto& t : toks) out.push_back(Scalar::parse(spec, t));
  return out;
}

json parse_json(std::string_view line) {
  try {
    return json::parse(line);
  } catch (const json::exception& e) {
    raise(Errc::ParseError, e.what());
  }
}

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    raise(Errc::ParseError, std::string("missing \"") + key + "\"");
  return j.at(key);
}

}  // namespace

Word parse_word(const CoxeterGraph& g, std::string_view text) {
  Word w;
  for (const auto& t : tokens(text)) w.push_back(g.letter(t));
  return w;
}

MonoidElement parse_element(std::string_view line_in) {
  const std::string line = trim(line_in);
  if (!line.empty() && line.front() == '{') return element_from_json(parse_json(line));
  const auto f = fields(line);
  if (f.size() != 4) raise(Errc::ParseError, "element needs 4 '|'-separated fields: " + line);
  GraphPtr g = build_graph(f[0]);
  const SemifieldSpec spec = SemifieldSpec::parse(f[1]);
  return from_word(g, spec, parse_word(*g, f[2]), parse_scalars(spec, tokens(f[3])));
}

MonoidElement element_from_json(const json& j) {
  GraphPtr g = build_graph(member(j, "type").get<std::string>());
  const SemifieldSpec spec = SemifieldSpec::parse(member(j, "semifield").get<std::string>());
  Word word;
  for (const auto& v : member(j, "word")) word.push_back(g->letter(json_token(v)));
  std::vector<std::string> toks;
  for (const auto& v : member(j, "coords")) toks.push_back(json_token(v));
  return from_word(g, spec, std::move(word), parse_scalars(spec, toks));
}

std::string format_element(const MonoidElement& e) { return describe(e); }

json element_to_json(const MonoidElement& e) {
  json word = json::array(), coords = json::array();
  for (Letter i : e.word()) word.push_back(e.graph().letter_name(i));
  for (const Scalar& a : e.coords()) coords.push_back(a.str());
  return {{"type", e.graph().name()},
          {"semifield", std::string(e.spec().name())},
          {"word", word},
          {"coords", coords}};
}

CanonicalCoords parse_canonical(std::string_view line_in) {
  const std::string line = trim(line_in);
  if (!line.empty() && line.front() == '{') return canonical_from_json(parse_json(line));
  const auto f = fields(line);
  if (f.size() != 4) raise(Errc::ParseError, "canonical coordinates need 4 fields: " + line);
  GraphPtr g = build_graph(f[0]);
  const SemifieldSpec spec = SemifieldSpec::parse(f[1]);
  CanonicalCoords cc{g, spec, parse_word(*g, strip_label(f[2], "ii:")),
                     parse_scalars(spec, tokens(strip_label(f[3], "c:")))};
  if (cc.c.size() != cc.ii.size()) raise(Errc::LengthMismatch, "ii and c differ in length");
  return cc;
}

CanonicalCoords canonical_from_json(const json& j) {
  GraphPtr g = build_graph(member(j, "type").get<std::string>());
  const SemifieldSpec spec = SemifieldSpec::parse(member(j, "semifield").get<std::string>());
  CanonicalCoords cc{g, spec, {}, {}};
  for (const auto& v : member(j, "ii")) cc.ii.push_back(g->letter(json_token(v)));
  std::vector<std::string> toks;
  for (const auto& v : member(j, "c")) toks.push_back(json_token(v));
  cc.c = parse_scalars(spec, toks);
  if (cc.c.size() != cc.ii.size()) raise(Errc::LengthMismatch, "ii and c differ in length");
  return cc;
}

std::string format_canonical(const CanonicalCoords& cc) { return describe(cc); }

json canonical_to_json(const CanonicalCoords& cc) {
  json ii = json::array(), c = json::array();
  for (Letter i : cc.ii) ii.push_back(cc.graph->letter_name(i));
  for (const Scalar& a : cc.c) c.push_back(a.str());
  return {{"type", cc.graph->name()},
          {"semifield", std::string(cc.spec.name())},
          {"ii", ii},
          {"c", c}};
}

MonoidElement in_output_chart(const MonoidElement& e, const std::optional<Word>& chart) {
  return rewrite(e, chart ? *chart : e.weyl().reference_word());
}

std::string format_summary(const PathReport& report, int bound) {
  const bool ok = report.ok() && static_cast<int>(report.nontrivial) <= bound;
  return "edges=" + std::to_string(report.edges) + " nontrivial=" +
         std::to_string(report.nontrivial) + " bound=" + std::to_string(bound) +
         " ok=" + (ok ? "true" : "false");
}

std::string format_path(const Path& path, const PathReport& report, int bound,
                        const std::optional<Word>& chart) {
  std::string out;
  for (std::size_t k = 0; k < path.nodes.size(); ++k) {
    out += format_element(in_output_chart(path.nodes[k], chart)) + "\n";
    if (k < path.labels.size()) {
      const EdgeLabel& l = path.labels[k];
      out += "edge " + path.nodes[k].graph().letter_name(l.letter) + " " + l.a.str() + "\n";
    }
  }
  out += format_summary(report, bound) + "\n";
  return out;
}

json path_to_json(const Path& path, const PathReport& report, int bound,
                  const std::optional<Word>& chart) {
  json nodes = json::array(), edges = json::array(), failures = json::array();
  for (const auto& n : path.nodes) nodes.push_back(element_to_json(in_output_chart(n, chart)));
  for (std::size_t k = 0; k < path.labels.size(); ++k) {
    const EdgeLabel& l = path.labels[k];
    edges.push_back({{"letter", path.nodes[k].graph().letter_name(l.letter)}, {"a", l.a.str()}});
  }
  for (const auto& [idx, why] : report.failures) failures.push_back({{"edge", idx}, {"reason", why}});
  return {{"nodes", nodes},
          {"edges", edges},
          {"summary",
           {{"edges", report.edges},
            {"nontrivial", report.nontrivial},
            {"bound", bound},
            {"ok", report.ok() && static_cast<int>(report.nontrivial) <= bound}}},
          {"failures", failures}};
}

}  // namespace halfcircle
