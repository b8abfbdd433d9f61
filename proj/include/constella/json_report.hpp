#ifndef CONSTELLA_JSON_REPORT_HPP
#define CONSTELLA_JSON_REPORT_HPP

// Machine-readable reports. Requires the single-header nlohmann/json as
// `json.hpp` on the include path (vendor/ in this repository).

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "classify.hpp"
#include "report.hpp"

namespace constella {

/// Every report carries the four top-level keys in this order, even when a
/// section is empty, so golden files compare byte for byte.
struct ReportDocument {
  bool valid = true;
  std::vector<Violation> violations;
  std::optional<ClassificationReport> classification;
  std::vector<std::pair<std::string, std::size_t>> counts;
};

inline nlohmann::ordered_json to_json(const Violation& v) {
  nlohmann::ordered_json j;
  j["axiom"] = v.axiom;
  j["witness"] = v.witness;
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

inline nlohmann::ordered_json to_json(const ClassificationReport& r) {
  nlohmann::ordered_json j;
  j["nd"] = r.nd;
  j["lc"] = r.lc;
  j["unitary"] = r.unitary;
  j["is_category"] = r.is_category;
  j["is_semigroup"] = r.is_semigroup;
  j["is_inverse_semigroupoid"] = r.is_inverse_semigroupoid;
  j["has_right_inverses"] = r.has_right_inverses;
  nlohmann::ordered_json w = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.witnesses) w[k] = v;  // std::map: sorted keys
  j["witnesses"] = std::move(w);
  return j;
}

inline nlohmann::ordered_json to_json(const ReportDocument& d) {
  nlohmann::ordered_json j;
  j["valid"] = d.valid;
  j["violations"] = nlohmann::ordered_json::array();
  for (const auto& v : d.violations) j["violations"].push_back(to_json(v));
  j["classification"] = d.classification ? to_json(*d.classification) : nlohmann::ordered_json::object();
  nlohmann::ordered_json counts = nlohmann::ordered_json::object();
  for (const auto& [k, n] : d.counts) counts[k] = n;
  j["counts"] = std::move(counts);
  return j;
}

inline ReportDocument document_of(const ValidationReport& r) {
  return {r.valid(), r.violations(), std::nullopt, {}};
}

/// Two-space indented JSON followed by a newline.
inline std::string render(const ReportDocument& d) { return to_json(d).dump(2) + "\n"; }

}  // namespace constella

#endif  // CONSTELLA_JSON_REPORT_HPP
