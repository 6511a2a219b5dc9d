#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "scover/family.hpp"
#include "scover/solver.hpp"
#include "scover/verify.hpp"

namespace scover {

/// On-disk form of a family plus free-form string metadata.
struct FamilyDocument {
  int schema_version = 1;
  CoverFamily family;
  std::map<std::string, std::string> metadata;
};

/// Deterministic UTF-8 JSON: keys exactly {schema_version, n, s, lines,
/// metadata}, sorted keys, compact whitespace, integers only.
std::string serialize(const CoverFamily& f,
                      const std::map<std::string, std::string>& metadata = {});

/// Parses and validates a document produced by serialize. Unknown
/// schema_version, missing/extra keys, non-integer points, and anything
/// make_family rejects are errors (std::runtime_error /
/// std::invalid_argument).
FamilyDocument parse_document(const std::string& bytes);

/// Shorthand for parse_document(bytes).family.
CoverFamily parse(const std::string& bytes);

nlohmann::json rational_json(const Rational& r);
nlohmann::json report_json(const VerificationReport& report);
nlohmann::json profile_json(const StructureProfile& profile);
nlohmann::json lemma_json(const LemmaReport& report);
nlohmann::json search_json(const SearchResult& result);

}  // namespace scover
