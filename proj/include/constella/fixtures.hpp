#ifndef CONSTELLA_FIXTURES_HPP
#define CONSTELLA_FIXTURES_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "semigroupoid.hpp"

namespace constella {

struct CompLine {
  std::string a, b, c;
};

/// Builds an unvalidated structure from labels, `a b = c` triples and a plus
/// assignment given as (element, plus) pairs.
inline RawSemigroupoid make_raw(const std::vector<std::string>& labels, const std::vector<CompLine>& comps,
                                const std::vector<std::pair<std::string, std::string>>& plus) {
  PartialTable t(labels);
  for (const auto& c : comps) t.set(t.at(c.a), t.at(c.b), t.at(c.c));
  std::vector<Element> p(labels.size());
  for (const auto& [x, px] : plus) p[t.at(x)] = t.at(px);
  return {std::move(t), RestrictionStructure(std::move(p))};
}

namespace fixtures {

inline RawSemigroupoid singleton() { return make_raw({"e"}, {{"e", "e", "e"}}, {{"e", "e"}}); }

namespace detail {
inline std::vector<CompLine> two_element_semilattice() {
  return {{"e", "e", "e"}, {"f", "f", "f"}, {"e", "f", "e"}, {"f", "e", "e"}};
}
inline std::vector<CompLine> three_element_semilattice() {
  std::vector<CompLine> out;
  for (const char* a : {"e", "f", "0"})
    for (const char* b : {"e", "f", "0"}) out.push_back({a, b, std::string(a) == b ? a : "0"});
  return out;
}
inline std::vector<CompLine> two_chains() {
  return {{"e", "e", "e"},    {"x", "e", "y"},    {"y", "e", "y"},    {"x+", "x", "x"},
          {"x+", "y", "y"},   {"x+", "x+", "x+"}, {"x+", "y+", "y+"}, {"y+", "x", "y"},
          {"y+", "y", "y"},   {"y+", "x+", "y+"}, {"y+", "y+", "y+"}};
}
inline std::vector<std::pair<std::string, std::string>> two_chains_plus() {
  return {{"e", "e"}, {"x", "x+"}, {"y", "y+"}, {"x+", "x+"}, {"y+", "y+"}};
}
}  // namespace detail

/// {e,f} with ee=e, ff=f, ef=fe=e and the identity plus map.
inline RawSemigroupoid two_projection_star() {
  return make_raw({"e", "f"}, detail::two_element_semilattice(), {{"e", "e"}, {"f", "f"}});
}

/// Same table as two_projection_star with plus constantly f.
inline RawSemigroupoid two_projection_ast() {
  return make_raw({"e", "f"}, detail::two_element_semilattice(), {{"e", "f"}, {"f", "f"}});
}

/// Three-element semilattice {e,f,0}: xx=x, every other product 0.
inline RawSemigroupoid semilattice3() {
  return make_raw({"e", "f", "0"}, detail::three_element_semilattice(), {{"e", "e"}, {"f", "f"}, {"0", "0"}});
}

/// semilattice3 plus s with es=fs=0s=s and s^+=0.
inline RawSemigroupoid semilattice3_with_tail() {
  auto comps = detail::three_element_semilattice();
  for (const char* a : {"e", "f", "0"}) comps.push_back({a, "s", "s"});
  return make_raw({"e", "f", "0", "s"}, comps, {{"e", "e"}, {"f", "f"}, {"0", "0"}, {"s", "0"}});
}

/// {x+, x} with x+x+=x+, x+x=x only.
inline RawSemigroupoid single_arrow() {
  return make_raw({"x+", "x"}, {{"x+", "x+", "x+"}, {"x+", "x", "x"}}, {{"x+", "x+"}, {"x", "x+"}});
}

/// Five elements: an isolated projection e and the chain y+ <= x+ acting on x, y.
inline RawSemigroupoid two_chains() {
  return make_raw({"e", "x", "y", "x+", "y+"}, detail::two_chains(), detail::two_chains_plus());
}

/// two_chains plus s with es=s and s^+=e, taken literally. Fails
/// associativity: (x,e),(e,s) are defined but (y,s) is not.
inline RawSemigroupoid two_chains_with_tail_literal() {
  auto comps = detail::two_chains();
  comps.push_back({"e", "s", "s"});
  auto plus = detail::two_chains_plus();
  plus.emplace_back("s", "e");
  return make_raw({"e", "x", "y", "x+", "y+", "s"}, comps, plus);
}

/// two_chains plus a fresh projection g with gg=g, gs=s, s^+=g.
/// Valid; LC holds, ND and U fail.
inline RawSemigroupoid two_chains_with_tail() {
  auto comps = detail::two_chains();
  comps.push_back({"g", "g", "g"});
  comps.push_back({"g", "s", "s"});
  auto plus = detail::two_chains_plus();
  plus.emplace_back("g", "g");
  plus.emplace_back("s", "g");
  return make_raw({"e", "x", "y", "x+", "y+", "g", "s"}, comps, plus);
}

/// Z_2 as a one-object groupoid; plus constantly 1.
inline RawSemigroupoid z2() {
  return make_raw({"1", "g"}, {{"1", "1", "1"}, {"1", "g", "g"}, {"g", "1", "g"}, {"g", "g", "1"}},
                  {{"1", "1"}, {"g", "1"}});
}

/// Two identities and nothing else.
inline RawSemigroupoid discrete_category() {
  return make_raw({"1a", "1b"}, {{"1a", "1a", "1a"}, {"1b", "1b", "1b"}}, {{"1a", "1a"}, {"1b", "1b"}});
}

struct Named {
  std::string name;
  RawSemigroupoid structure;
};

/// The printed examples, keyed by file stem. The literal tail example is
/// included although it is not a semigroupoid.
inline std::vector<Named> printed_examples() {
  return {{"r23_star", two_projection_star()}, {"r23_ast", two_projection_ast()},
          {"ex6_3", semilattice3()},           {"ex6_4", semilattice3_with_tail()},
          {"ex6_5", single_arrow()},           {"ex6_6", two_chains()},
          {"ex6_7", two_chains_with_tail_literal()}};
}

/// Every valid fixture (printed examples minus the invalid one, plus extras).
inline std::vector<Named> valid_fixtures() {
  return {{"singleton", singleton()},
          {"r23_star", two_projection_star()},
          {"r23_ast", two_projection_ast()},
          {"ex6_3", semilattice3()},
          {"ex6_4", semilattice3_with_tail()},
          {"ex6_5", single_arrow()},
          {"ex6_6", two_chains()},
          {"ex6_7_repaired", two_chains_with_tail()},
          {"z2", z2()},
          {"discrete2", discrete_category()}};
}

}  // namespace fixtures
}  // namespace constella

#endif  // CONSTELLA_FIXTURES_HPP
