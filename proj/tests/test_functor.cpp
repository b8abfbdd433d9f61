#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace constella;
using support::lrs;

TEST_CASE("C on small fixtures") {
  using P = std::pair<std::string, std::string>;
  SECTION("single arrow keeps its pairs") {
    const auto s = lrs(fixtures::single_arrow());
    const auto t = build_C(s);
    CHECK(support::defined_pairs(t.table) == support::defined_pairs(s.table()));
    CHECK(support::defined_pairs(t.table) == std::set<P>{{"x+", "x+"}, {"x+", "x"}});
  }
  SECTION("singleton is unchanged") {
    const auto s = lrs(fixtures::singleton());
    CHECK(build_C(s).table == s.table());
  }
  SECTION("semilattice keeps st = s pairs") {
    const auto t = build_C(lrs(fixtures::semilattice3()));
    CHECK(support::defined_pairs(t.table) ==
          std::set<P>{{"e", "e"}, {"f", "f"}, {"0", "0"}, {"0", "e"}, {"0", "f"}});
  }
}

TEST_CASE("G inverts C literally") {
  for (const auto& [name, raw] : fixtures::valid_fixtures()) {
    INFO(name);
    const auto s = lrs(raw);
    const auto t = build_C(s);
    const auto g = build_G(t);
    CHECK(g == s);
    CHECK(roundtrip_check(s).valid());
    CHECK(roundtrip_check(t).valid());
    CHECK(build_C(g) == t);
  }
}

TEST_CASE("pseudo-product of C(S) agrees with S") {
  for (const auto& [name, raw] : fixtures::valid_fixtures()) {
    INFO(name);
    const auto s = lrs(raw);
    const ConstellationIndex ix(build_C(s));
    for (Element a = 0; a < s.size(); ++a)
      for (Element b = 0; b < s.size(); ++b) CHECK(ix.pseudo_product(a, b) == s.compose(a, b));
  }
}

TEST_CASE("roundtrip flags a non-li input") {
  auto t = build_C(lrs(fixtures::semilattice3()));
  t.order.set(t.table.at("0"), t.table.at("e"), false);
  bool flagged = false;
  try {
    flagged = !roundtrip_check(t).valid();
  } catch (const InvalidStructure&) {
    flagged = true;
  }
  CHECK(flagged);
}
