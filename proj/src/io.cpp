#include "scover/io.hpp"

#include <stdexcept>

namespace scover {

using nlohmann::json;

std::string serialize(const CoverFamily& f,
                      const std::map<std::string, std::string>& metadata) {
  json doc;
  doc["schema_version"] = 1;
  doc["n"] = f.n();
  doc["s"] = f.s();
  json lines = json::array();
  for (const Line& line : f.lines()) lines.push_back(line);
  doc["lines"] = std::move(lines);
  doc["metadata"] = metadata;
  return doc.dump();
}

FamilyDocument parse_document(const std::string& bytes) {
  json doc;
  try {
    doc = json::parse(bytes);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(std::string("parse: malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw std::runtime_error("parse: document must be an object");

  static const char* const kKeys[] = {"schema_version", "n", "s", "lines",
                                      "metadata"};
  for (const char* key : kKeys)
    if (!doc.contains(key))
      throw std::runtime_error(std::string("parse: missing key \"") + key + "\"");
  for (const auto& [key, value] : doc.items()) {
    bool known = false;
    for (const char* k : kKeys) known = known || key == k;
    if (!known) throw std::runtime_error("parse: unknown key \"" + key + "\"");
  }

  if (!doc["schema_version"].is_number_integer() ||
      doc["schema_version"].get<std::int64_t>() != 1)
    throw std::runtime_error("parse: unsupported schema_version");
  if (!doc["n"].is_number_integer() || !doc["s"].is_number_integer())
    throw std::runtime_error("parse: n and s must be integers");
  const std::int64_t n = doc["n"].get<std::int64_t>();
  const std::int64_t s = doc["s"].get<std::int64_t>();
  if (n < 1 || n > 1'000'000 || s < 2 || s > 1'000'000)
    throw std::runtime_error("parse: n or s out of range");

  if (!doc["lines"].is_array()) throw std::runtime_error("parse: lines must be an array");
  std::vector<Line> lines;
  lines.reserve(doc["lines"].size());
  for (std::size_t i = 0; i < doc["lines"].size(); ++i) {
    const json& jline = doc["lines"][i];
    if (!jline.is_array())
      throw std::runtime_error("parse: line " + std::to_string(i) +
                               " must be an array");
    Line line;
    line.reserve(jline.size());
    for (const json& jp : jline) {
      if (!jp.is_number_integer())
        throw std::runtime_error("parse: non-integer point in line " +
                                 std::to_string(i));
      const std::int64_t p = jp.get<std::int64_t>();
      if (p < 0 || p >= n)
        throw std::invalid_argument("parse: point " + std::to_string(p) +
                                    " out of range [0," + std::to_string(n) +
                                    ") in line " + std::to_string(i));
      line.push_back(static_cast<PointId>(p));
    }
    lines.push_back(std::move(line));
  }

  if (!doc["metadata"].is_object())
    throw std::runtime_error("parse: metadata must be an object");
  std::map<std::string, std::string> metadata;
  for (const auto& [key, value] : doc["metadata"].items()) {
    if (!value.is_string())
      throw std::runtime_error("parse: metadata values must be strings");
    metadata[key] = value.get<std::string>();
  }

  return FamilyDocument{1, make_family(static_cast<int>(n),
                                       static_cast<int>(s), std::move(lines)),
                        std::move(metadata)};
}

CoverFamily parse(const std::string& bytes) {
  return parse_document(bytes).family;
}

json rational_json(const Rational& r) {
  return json{{"num", r.numerator()}, {"den", r.denominator()}};
}

json report_json(const VerificationReport& report) {
  json out;
  out["cap_mode"] = to_string(report.cap_mode);
  out["linear"] = report.linear;
  if (report.linear_witness) {
    out["linear_witness"] = {{"line_i", report.linear_witness->line_i},
                             {"line_j", report.linear_witness->line_j},
                             {"shared", report.linear_witness->shared}};
  }
  out["covered"] = report.covered;
  if (report.uncovered_witness)
    out["uncovered_witness"] = *report.uncovered_witness;
  out["cap_ok"] = report.cap_ok;
  if (report.cap_witness) out["cap_witness"] = *report.cap_witness;
  out["ok"] = report.all_ok();
  return out;
}

json profile_json(const StructureProfile& profile) {
  json out;
  out["m"] = profile.m;
  out["sizes"] = profile.sizes;
  out["a1"] = profile.a1;
  out["v"] = profile.v;
  out["d"] = profile.d;
  out["P"] = profile.p_set;
  out["Q"] = profile.q_set;
  out["p"] = profile.p;
  out["q_div"] = profile.q_div;
  out["r_div"] = profile.r_div;
  return out;
}

namespace {

json bound_json(const BoundCheck& check) {
  json out;
  out["applicable"] = check.applicable;
  if (check.applicable) {
    out["bound"] = rational_json(check.bound);
    out["satisfied"] = check.satisfied;
  }
  return out;
}

}  // namespace

json lemma_json(const LemmaReport& report) {
  json out;
  out["part1"] = bound_json(report.part1);
  out["part2"] = bound_json(report.part2);
  out["part3"] = bound_json(report.part3);
  out["part4"] = bound_json(report.part4);
  out["pair_sum"] = report.pair_sum;
  out["uncovered_edges"] = report.uncovered_edges;
  out["turan_residual"] = report.turan_residual;
  return out;
}

json search_json(const SearchResult& result) {
  json out;
  out["m_star"] = result.m_star;
  out["status"] = result.status == SolverStatus::optimal ? "optimal"
                                                         : "budget_exhausted";
  out["nodes_explored"] = result.nodes_explored;
  json levels = json::array();
  for (const LevelStats& level : result.levels) {
    const char* outcome = nullptr;
    switch (level.outcome) {
      case LevelOutcome::skipped_by_bound: outcome = "skipped_by_bound"; break;
      case LevelOutcome::exhausted: outcome = "exhausted"; break;
      case LevelOutcome::found: outcome = "found"; break;
      case LevelOutcome::aborted: outcome = "aborted"; break;
    }
    levels.push_back({{"m", level.m}, {"nodes", level.nodes}, {"outcome", outcome}});
  }
  out["levels"] = std::move(levels);
  out["witness"] = json::parse(serialize(result.witness));
  return out;
}

}  // namespace scover
