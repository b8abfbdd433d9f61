#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace constella;
using support::lrs;

namespace {

OrderedConstellation C(const RawSemigroupoid& raw) { return build_C(lrs(raw)); }

Element at(const OrderedConstellation& t, const char* label) { return t.table.at(label); }

}  // namespace

TEST_CASE("C of every fixture is a locally inductive constellation") {
  for (const auto& [name, raw] : fixtures::valid_fixtures()) {
    INFO(name);
    const auto t = C(raw);
    CHECK(check_constellation(t).valid());
    CHECK(check_locally_inductive(t).valid());
  }
}

TEST_CASE("c3 counterexample") {
  // e x = x but x^+ = x, so c3 fails for (e,x).
  PartialTable tb({"e", "x"});
  tb.set(0, 0, 0);
  tb.set(1, 1, 1);
  tb.set(0, 1, 1);
  OrderedConstellation t{tb, RestrictionStructure({0, 1}), OrderRelation::identity(2)};
  const auto r = check_constellation(t);
  const Violation expected{"c3", {"e", "x"}, ""};
  CHECK(std::find(r.violations().begin(), r.violations().end(), expected) != r.violations().end());
}

TEST_CASE("restriction") {
  const auto t = C(fixtures::two_chains());
  CHECK(restriction(t, at(t, "y+"), at(t, "x")) == at(t, "y"));
  for (Element x = 0; x < t.size(); ++x) CHECK(restriction(t, t.plus(x), x) == x);
  const auto lat = C(fixtures::semilattice3());
  CHECK(restriction(lat, at(lat, "0"), at(lat, "e")) == at(lat, "0"));
  CHECK_THROWS_AS(restriction(t, at(t, "x"), at(t, "x")), NotApplicable);
  CHECK_THROWS_AS(restriction(t, at(t, "x+"), at(t, "y")), NotApplicable);
}

TEST_CASE("corestriction") {
  const auto arrow = C(fixtures::single_arrow());
  CHECK(corestriction(arrow, at(arrow, "x"), at(arrow, "x+")).is_empty());
  const auto lat = C(fixtures::semilattice3());
  CHECK(corestriction(lat, at(lat, "e"), at(lat, "f")) == CorestrictionResult::of(at(lat, "0")));
  for (const auto& [name, raw] : fixtures::valid_fixtures()) {
    const auto t = C(raw);
    for (Element e : t.plus.image()) CHECK(corestriction(t, e, e) == CorestrictionResult::of(e));
  }
  CHECK_THROWS_AS(corestriction(arrow, 0, at(arrow, "x")), NotApplicable);
}

TEST_CASE("corestriction without maximum is reported, not thrown") {
  // Order: a, b both below c, both composable with e, neither above the other.
  PartialTable tb({"e", "a", "b", "c"});
  tb.set(0, 0, 0);
  tb.set(1, 0, 1);
  tb.set(2, 0, 2);
  OrderedConstellation t{tb, RestrictionStructure({0, 0, 0, 0}), OrderRelation::identity(4)};
  t.order.set(1, 3);
  t.order.set(2, 3);
  const auto r = detail::scan_corestriction(t, 3, 0);
  CHECK(r.kind() == CorestrictionResult::Kind::no_maximum);
  CHECK(r.candidates().size() == 2);
  CHECK(check_locally_inductive(t).names("wo4"));
}

TEST_CASE("components and meets") {
  const auto chains = C(fixtures::two_chains());
  const auto comps = plus_components(chains);
  REQUIRE(comps.size() == 2);
  std::set<std::set<std::string>> got;
  for (const auto& c : comps) got.insert(support::labels_of(chains.table, c));
  CHECK(got == std::set<std::set<std::string>>{{"e"}, {"x+", "y+"}});
  CHECK(meet(chains, at(chains, "x+"), at(chains, "y+")) == at(chains, "y+"));
  CHECK_FALSE(meet(chains, at(chains, "x+"), at(chains, "e")).has_value());

  const auto lat = C(fixtures::semilattice3());
  CHECK(plus_components(lat).size() == 1);
  CHECK(meet(lat, at(lat, "e"), at(lat, "f")) == at(lat, "0"));
  CHECK(meet(lat, at(lat, "e"), at(lat, "e")) == at(lat, "e"));
  CHECK(plus_components(C(fixtures::singleton())).size() == 1);
}

TEST_CASE("inductive case: all corestrictions defined") {
  const auto t = C(fixtures::semilattice3());
  for (Element x = 0; x < t.size(); ++x)
    for (Element e : t.plus.image()) CHECK(corestriction(t, x, e).has_value());
  CHECK(check_locally_inductive(t).valid());
}

TEST_CASE("order not monotone in plus is a wo2 violation") {
  auto t = C(fixtures::two_chains());
  t.order.set(at(t, "x"), at(t, "y"));  // x <= y but x^+ = x+ is not below y+
  CHECK(check_locally_inductive(t).names("wo2"));
}

TEST_CASE("restriction and corestriction identities on every fixture") {
  for (const auto& [name, raw] : fixtures::valid_fixtures()) {
    INFO(name);
    const ConstellationIndex ix(C(raw));
    const auto& t = ix.structure();
    const auto& proj = ix.projections();
    for (Element x = 0; x < t.size(); ++x) {
      for (Element y = 0; y < t.size(); ++y) {
        if (t.order.leq(x, y)) {
          CHECK(ix.restriction(t.plus(x), y) == x);
          CHECK(t.table.compose(t.plus(x), y) == x);
        }
        const bool defined = t.table.defined(x, y);
        const auto c = ix.corestriction(x, t.plus(y)).get();
        CHECK(defined == (c.has_value() && *c == x));
      }
      for (Element e : proj) {
        if (t.order.leq(e, t.plus(x))) {
          REQUIRE(t.table.defined(e, x));
          CHECK(ix.restriction(e, x) == *t.table.compose(e, x));
        }
        const auto xe = ix.corestriction(x, e);
        if (xe.has_value()) CHECK(xe.value() == *t.table.compose(t.plus(xe.value()), x));
        for (Element f : proj) {
          if (!t.order.leq(e, f)) continue;
          CHECK(t.table.compose(e, f) == e);
          const auto xf = ix.corestriction(x, f);
          if (xe.has_value()) CHECK(t.order.leq(xe.value(), xf.value()));
          if (xf.has_value()) CHECK(ix.corestriction(xf.value(), e) == xe);
        }
        for (Element y = 0; y < t.size(); ++y) {
          const auto xy = t.table.compose(x, y);
          if (!xy) continue;
          const auto xy_e = ix.corestriction(*xy, e);
          if (!xy_e.has_value()) continue;
          const Element ye = ix.corestriction(y, e).value();
          const Element inner = ix.corestriction(x, t.plus(ye)).value();
          CHECK(t.table.compose(inner, ye) == xy_e.value());
        }
      }
    }
    // meets are commutative and associative within components
    for (Element e : proj)
      for (Element f : proj) {
        CHECK(ix.meet(e, f) == ix.meet(f, e));
        for (Element g : proj) {
          const auto ef = ix.meet(e, f);
          const auto fg = ix.meet(f, g);
          if (ef && fg) CHECK(ix.meet(*ef, g) == ix.meet(e, *fg));
        }
      }
  }
}
