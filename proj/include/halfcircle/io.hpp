#pragma once

// Text and JSON forms.
//   element:   A3 | trop-int | 2 3 1 2 3 1 | 1 4 2 3 5 7
//              {"type":"A3","semifield":"trop-int","word":[...],"coords":[...]}
//   canonical: A3 | trop-int | ii: 2 3 1 2 3 1 | c: 1 6 12 9 4 2
//   path:      element lines interleaved with "edge <letter> <a>", then
//              edges=<raw> nontrivial=<n> bound=<2nu-1> ok=<bool>

#include <optional>
#include <string>
#include <string_view>

#include "halfcircle/canonical.hpp"
#include "halfcircle/connect.hpp"
#include "json.hpp"

namespace halfcircle {

Word parse_word(const CoxeterGraph& g, std::string_view text);

MonoidElement parse_element(std::string_view line);  // text or JSON
MonoidElement element_from_json(const nlohmann::json& j);
std::string format_element(const MonoidElement& e);
nlohmann::json element_to_json(const MonoidElement& e);

CanonicalCoords parse_canonical(std::string_view line);  // text or JSON
CanonicalCoords canonical_from_json(const nlohmann::json& j);
std::string format_canonical(const CanonicalCoords& cc);
nlohmann::json canonical_to_json(const CanonicalCoords& cc);

std::string format_summary(const PathReport& report, int bound);
/// Nodes are printed in `chart` when given, otherwise in the reference chart.
std::string format_path(const Path& path, const PathReport& report, int bound,
                        const std::optional<Word>& chart = std::nullopt);
nlohmann::json path_to_json(const Path& path, const PathReport& report, int bound,
                            const std::optional<Word>& chart = std::nullopt);

/// Element in the reference chart of its Weyl image, or in `chart`.
MonoidElement in_output_chart(const MonoidElement& e, const std::optional<Word>& chart);

}  // namespace halfcircle
