#pragma once

// JSON interchange documents:
//   {"kind":"group","order":n,"labels":[...],"table":[[...]]}
//   {"kind":"nearbrace","order":n,"labels":[...],"add":[[...]],"mul":[[...]]}
//   {"kind":"sigma","order":n,"z":i,"sigma":[[...]]}
//   {"kind":"solution","order":n,"sigma":[[...]],"tau":[[...]],"params":{...},
//    "report":{...},"p_braiding":{"f":[[...]],"g":[[...]]},"mul":[[...]]}
// Derived data (identity, inverses, skew/singular flags, reports) is always
// recomputed on load.

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "nearbrace/near_brace.hpp"
#include "nearbrace/p_braiding.hpp"
#include "nearbrace/solutions.hpp"

namespace nearbrace::codec {

using Json = nlohmann::ordered_json;

class ParseError : public InvalidStructure {
public:
  using InvalidStructure::InvalidStructure;
  explicit ParseError(const std::string& what) : InvalidStructure(what, {}) {}
};

struct SolutionSummary {
  bool braid = false;
  bool nondegenerate = false;
  bool involutive = false;
  std::optional<bool> p_braiding;
};

Json table_to_json(const SquareTable& t);
Json to_json(const GroupTable& g);
Json to_json(const NearBrace& nb);
Json to_json(const SigmaFamily& fam);
Json to_json(const ParamTriple& p);
Json to_json(const BraidMap& m, const std::optional<SolutionSummary>& summary = std::nullopt,
             const PBraidingReport* pb = nullptr);

/// Stable text form: two-space indentation, table rows on one line, trailing newline.
std::string serialize(const Json& doc);

/// Throws ParseError on malformed text.
Json parse(std::string_view text);
std::string kind_of(const Json& doc);

SquareTable table_from_json(const Json& rows, std::size_t n, std::string_view field);
GroupTable group_from_json(const Json& doc);
NearBrace near_brace_from_json(const Json& doc);
SigmaFamily sigma_family_from_json(const Json& doc);
BraidMap braid_map_from_json(const Json& doc);

}  // namespace nearbrace::codec
