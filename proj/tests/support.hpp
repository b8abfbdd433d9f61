#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <constella/constella.hpp>

namespace support {

using namespace constella;

inline LeftRestrictionSemigroupoid lrs(RawSemigroupoid raw) { return LeftRestrictionSemigroupoid::make(std::move(raw)); }

/// Label set of a list of elements.
inline std::set<std::string> labels_of(const PartialTable& t, const std::vector<Element>& xs) {
  std::set<std::string> out;
  for (Element x : xs) out.insert(t.label(x));
  return out;
}

/// Strict pairs of an order relation, by label.
inline std::set<std::pair<std::string, std::string>> strict_pairs(const PartialTable& t, const OrderRelation& o) {
  std::set<std::pair<std::string, std::string>> out;
  for (auto [a, b] : o.pairs())
    if (a != b) out.emplace(t.label(a), t.label(b));
  return out;
}

/// Defined pairs of a table, by label.
inline std::set<std::pair<std::string, std::string>> defined_pairs(const PartialTable& t) {
  std::set<std::pair<std::string, std::string>> out;
  for (Element a = 0; a < t.size(); ++a)
    for (Element b = 0; b < t.size(); ++b)
      if (t.defined(a, b)) out.emplace(t.label(a), t.label(b));
  return out;
}

}  // namespace support
