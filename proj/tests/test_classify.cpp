#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace constella;
using support::lrs;

namespace {

struct Verdict {
  bool nd, lc, unitary;
};

void check_verdict(const ClassificationReport& r, Verdict v) {
  CHECK(r.nd == v.nd);
  CHECK(r.lc == v.lc);
  CHECK(r.unitary == v.unitary);
}

}  // namespace

TEST_CASE("printed verdicts") {
  SECTION("semilattice: ND, not LC") {
    const auto r = classify_constellation(build_C(lrs(fixtures::semilattice3())));
    CHECK(r.nd);
    CHECK_FALSE(r.lc);
  }
  SECTION("semilattice with tail: neither") {
    const auto r = classify_semigroupoid(lrs(fixtures::semilattice3_with_tail()));
    CHECK_FALSE(r.nd);
    CHECK_FALSE(r.lc);
  }
  SECTION("single arrow: U, not ND") {
    const auto r = classify_constellation(build_C(lrs(fixtures::single_arrow())));
    CHECK(r.unitary);
    CHECK(r.lc);
    CHECK_FALSE(r.nd);
  }
  SECTION("two chains: ND and LC, not U") {
    check_verdict(classify_constellation(build_C(lrs(fixtures::two_chains()))), {true, true, false});
  }
  SECTION("tail example: LC only, on the repaired fixture and on the literal table") {
    check_verdict(classify_semigroupoid(lrs(fixtures::two_chains_with_tail())), {false, true, false});
    const auto raw = fixtures::two_chains_with_tail_literal();
    const auto v = degeneracy_of_table(raw.table, raw.plus);
    CHECK(v.lc);
    CHECK_FALSE(v.nd);
    CHECK_FALSE(v.unitary);
    CHECK(v.witnesses.at("nd") == std::vector<std::string>{"s"});
  }
  SECTION("singleton: everything") {
    const auto r = classify_semigroupoid(lrs(fixtures::singleton()));
    CHECK((r.nd && r.lc && r.unitary && r.is_category && r.is_semigroup && r.is_inverse_semigroupoid &&
           r.has_right_inverses));
  }
}

TEST_CASE("both classifiers agree on every fixture") {
  for (const auto& [name, raw] : fixtures::valid_fixtures()) {
    INFO(name);
    const auto s = lrs(raw);
    const auto a = classify_semigroupoid(s);
    const auto b = classify_constellation(build_C(s));
    CHECK(a.nd == b.nd);
    CHECK(a.lc == b.lc);
    CHECK(a.unitary == b.unitary);
    CHECK(a.is_category == b.is_category);
    CHECK(a.is_semigroup == b.is_semigroup);
    CHECK(a.is_inverse_semigroupoid == b.is_inverse_semigroupoid);
    CHECK(a.has_right_inverses == b.has_right_inverses);
    CHECK((!a.unitary || a.lc));
    CHECK(a.is_category == (a.nd && a.unitary));
  }
}

TEST_CASE("category detection") {
  for (const auto& [name, raw] : fixtures::printed_examples()) {
    INFO(name);
    if (name.rfind("ex6_", 0) == 0) CHECK_FALSE(detect_category(raw.table).is_category);
  }
  const auto one = detect_category(fixtures::singleton().table);
  REQUIRE(one.is_category);
  CHECK(one.domain == std::vector<Element>{0});
  CHECK(one.range == std::vector<Element>{0});
  const auto disc = fixtures::discrete_category();
  const auto d = detect_category(disc.table);
  REQUIRE(d.is_category);
  CHECK(d.domain == std::vector<Element>{0, 1});
}

TEST_CASE("semigroup detection") {
  CHECK(detect_semigroup(lrs(fixtures::semilattice3())));
  CHECK_FALSE(detect_semigroup(lrs(fixtures::single_arrow())));
  CHECK(detect_semigroup(lrs(fixtures::singleton())));
  for (const auto& [name, raw] : fixtures::valid_fixtures()) {
    INFO(name);
    const auto c = semigroup_conditions(lrs(raw));
    CHECK(c.total == c.nd_and_semilattice);
    CHECK(c.total == c.all_corestrictions);
  }
}

TEST_CASE("inverse semigroupoids") {
  const auto z2 = fixtures::z2();
  const auto inv = detect_inverse_semigroupoid(z2.table);
  REQUIRE(inv.is_inverse);
  CHECK(inv.inverse[z2.table.at("g")] == z2.table.at("g"));
  CHECK(derive_plus_from_inverses(z2.table, inv.inverse).map() == std::vector<Element>{0, 0});
  CHECK(check_left_restriction(z2.table, derive_plus_from_inverses(z2.table, inv.inverse)).valid());

  const auto lat = fixtures::semilattice3();
  const auto li = detect_inverse_semigroupoid(lat.table);
  CHECK(li.is_inverse);
  CHECK(li.inverse == std::vector<Element>{0, 1, 2});

  CHECK(detect_inverse_semigroupoid(fixtures::singleton().table).is_inverse);
  CHECK_FALSE(detect_inverse_semigroupoid(fixtures::two_chains().table).is_inverse);
}

TEST_CASE("right inverses") {
  CHECK(has_right_inverses(build_C(lrs(fixtures::z2()))).present);
  CHECK(has_right_inverses(build_C(lrs(fixtures::singleton()))).present);
  const auto r = has_right_inverses(build_C(lrs(fixtures::two_chains())));
  CHECK_FALSE(r.present);
  const auto t = fixtures::two_chains().table;
  CHECK_FALSE(r.witness[t.at("x")].has_value());
  CHECK_FALSE(r.witness[t.at("y")].has_value());
}

TEST_CASE("the same table with a non-induced plus is not inverse in the restriction sense") {
  // ef = fe = e with plus constantly f: the table is inverse but ss^{-1} is the identity map.
  const auto ast = lrs(fixtures::two_projection_ast());
  CHECK(detect_inverse_semigroupoid(ast.table()).is_inverse);
  const auto r = classify_semigroupoid(ast);
  CHECK_FALSE(r.is_inverse_semigroupoid);
  CHECK_FALSE(r.has_right_inverses);
  CHECK(classify_semigroupoid(lrs(fixtures::two_projection_star())).is_inverse_semigroupoid);
}
