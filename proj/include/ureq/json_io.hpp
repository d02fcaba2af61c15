#pragma once

#include "ureq/decide.hpp"
#include "ureq/exact.hpp"
#include "ureq/family.hpp"
#include "ureq/harness.hpp"
#include "ureq/matching.hpp"

#include "json.hpp"

#include <string_view>
#include <vector>

namespace ureq {

using Json = nlohmann::ordered_json;

/// "u-v" strings, sorted.
Json to_json(const Matching& m);
Json to_json(const VertexSet& vs);
Json to_json(const FamilySpec& spec);
Json to_json(const AlternatingCycle& c);
Json to_json(const Lemma0Violation& v);
Json to_json(const Refutation& r);
Json to_json(const DecisionReport& r);
Json to_json(const OracleResult& r);
Json to_json(const VerifyRecord& r);
Json to_json(const VerifySummary& s);

/// Inverse of to_json(FamilySpec). Throws FormatError.
FamilySpec family_spec_from_json(const Json& j);

/// Parses "0-1,2-3" (whitespace and ';' also separate edges). Throws FormatError.
std::vector<Edge> parse_edge_spec(std::string_view text);

} // namespace ureq
