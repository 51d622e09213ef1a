#pragma once

#include "gtorbit/gtpolytope.hpp"
#include "gtorbit/skeleton.hpp"

#include <string>

namespace gtorbit {

// JSON wire formats. Field order is canonical and rationals serialize as
// "p" / "p/q" strings, so serialize(parse(s)) is byte-stable. Parsers throw
// std::invalid_argument on malformed input.

/// {"n": int, "re": [[..]], "im": [[..]]}; "im" omitted when identically zero.
std::string matrix_to_json(const HermitianMatrix& m);
HermitianMatrix matrix_from_json(const std::string& text);

/// {"n": int, "top": [..], "rows": [[..], ..]} with rows listed j = 1 upward.
std::string pattern_to_json(const GTPattern& p);
std::string pattern_to_json(const NumericGTPattern& p);

/// Requires every entry to be an integer or a "p/q" string.
GTPattern exact_pattern_from_json(const std::string& text);
/// Accepts numbers and "p/q" strings.
NumericGTPattern numeric_pattern_from_json(const std::string& text);

std::string report_to_json(const EmbeddingReport& r);
EmbeddingReport report_from_json(const std::string& text);

std::string skeleton_to_json(const SkeletonGraph& g);
SkeletonGraph skeleton_from_json(const std::string& text);

} // namespace gtorbit
