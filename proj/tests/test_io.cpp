#include <catch_amalgamated.hpp>

#include <constella/json_report.hpp>

#include "support.hpp"

using namespace constella;
using support::lrs;

namespace {

const std::filesystem::path source_dir = CONSTELLA_SOURCE_DIR;

RawSemigroupoid raw_of(const Structure& s) { return std::get<RawSemigroupoid>(s); }

std::size_t error_line(std::string_view text) {
  try {
    parse_structure(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  FAIL("no ParseError for:\n" << text);
  return 0;
}

}  // namespace

TEST_CASE("fixture files are the fixtures, in canonical form") {
  auto all = fixtures::valid_fixtures();
  all.push_back(fixtures::printed_examples().back());  // literal tail example
  for (const auto& [name, raw] : all) {
    INFO(name);
    const auto path = source_dir / "fixtures" / (name + ".sgpd");
    const auto text = read_text(path);
    const auto parsed = load_structure(path);
    CHECK(raw_of(parsed) == raw);
    CHECK(serialize_structure(parsed) == text);
    if (name == "ex6_7") continue;
    const auto cpath = source_dir / "fixtures" / ("C_" + name + ".sgpd");
    const auto c = std::get<OrderedConstellation>(load_structure(cpath));
    CHECK(c == build_C(lrs(raw)));
    CHECK(serialize_structure(c) == read_text(cpath));
  }
}

TEST_CASE("a table typed by rows parses and validates") {
  const auto s = raw_of(load_structure(source_dir / "tests/data/two_chains_rows.sgpd"));
  CHECK(s.table.defined_count() == 11);
  CHECK(check_left_restriction(s.table, s.plus).valid());
  CHECK(s == fixtures::two_chains());
}

TEST_CASE("order lines are closed and reduced") {
  const auto t = std::get<OrderedConstellation>(load_structure(source_dir / "tests/data/semilattice_order_shuffled.sgpd"));
  CHECK(t == build_C(lrs(fixtures::semilattice3())));
  const auto text = serialize_structure(t);
  CHECK(text.find("order 0 e\norder 0 f\n") != std::string::npos);
  CHECK(text.find("order 0 0") == std::string::npos);
  CHECK(text.find("order e e") == std::string::npos);

  // a chain a < b < c keeps only its two covers
  const auto chain = parse_structure(
      "kind constellation\nelements a b c\nplus a a;plus b b;plus c c\norder a b\norder b c\norder a c\n");
  const auto out = serialize_structure(chain);
  CHECK(out.find("order a b\norder b c\n") != std::string::npos);
  CHECK(out.find("order a c") == std::string::npos);
  CHECK(std::get<OrderedConstellation>(chain).order.leq(0, 2));
}

TEST_CASE("serialization is canonical") {
  CHECK(serialize_structure(fixtures::singleton()) == "kind semigroupoid\nelements e\nplus e e\ncomp e e e\n");
  // carrier order does not leak into the text
  const auto a = parse_structure("kind semigroupoid\nelements b a\nplus a a\nplus b b\ncomp b b b\ncomp a a a\n");
  const auto b = parse_structure("kind semigroupoid\nelements a b\nplus b b\nplus a a\ncomp a a a\ncomp b b b\n");
  CHECK(serialize_structure(a) == serialize_structure(b));
  for (const auto& [name, raw] : fixtures::valid_fixtures()) {
    const auto once = serialize_structure(raw);
    CHECK(serialize_structure(parse_structure(once)) == once);
  }
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_AS(load_structure(source_dir / "tests/data/bad_duplicate_comp.sgpd"), ParseError);
  CHECK_THROWS_AS(load_structure(source_dir / "tests/data/bad_empty_elements.sgpd"), ParseError);
  CHECK_THROWS_AS(load_structure(source_dir / "tests/data/bad_order_cycle.sgpd"), ParseError);

  CHECK(error_line("kind semigroupoid\nelements\n") == 2);
  CHECK(error_line("kind semigroupoid\nelements a\nplus a a\ncomp a a a\ncomp a a a\n") == 5);
  CHECK(error_line("kind semigroupoid\nelements a\nplus a b\n") == 3);
  CHECK(error_line("kind semigroupoid\nelements a\nplus a a\norder a a\n") == 4);
  CHECK(error_line("# header\n\nkind constellation\nelements a b\nplus a a\nplus b b\norder a b\norder b a\n") == 8);
  CHECK(error_line("kind semigroupoid\nelements a a\n") == 2);
  CHECK(error_line("kind semigroupoid\nelements a-b\n") == 2);
  CHECK(error_line("kind semigroupoid\nelements a\nplus a a\nplus a a\n") == 4);
  CHECK(error_line("kind monoid\n") == 1);
  CHECK(error_line("elements a\n") == 1);
  CHECK(error_line("kind semigroupoid\nelements a\nplus a a\ncomp a a\n") == 4);
  CHECK(error_line("kind semigroupoid\nelements a\ncomp a a a\n") == 0);  // plus missing
  CHECK(error_line("kind semigroupoid\nelements a\nplus a a\nfrob a\n") == 4);
  CHECK(error_line("") == 0);
}

TEST_CASE("morphism files") {
  const auto m = parse_morphism("source a.sgpd\ntarget expand:b.sgpd # the expansion\nmap x y\nmap y y\n");
  CHECK(m.source == "a.sgpd");
  CHECK(m.target == "expand:b.sgpd");
  REQUIRE(m.map.size() == 2);
  CHECK(m.map[1] == std::pair<std::string, std::string>{"y", "y"});
  CHECK_THROWS_AS(parse_morphism("source a\nmap x y\n"), ParseError);
  CHECK_THROWS_AS(parse_morphism("source a\ntarget b\nmap x y\nmap x z\n"), ParseError);

  const auto arrow = fixtures::single_arrow();
  const auto text = serialize_morphism("s", "t", arrow.table, arrow.table, {0, 0});
  CHECK(text == "source s\ntarget t\nmap x x+\nmap x+ x+\n");
  const auto back = parse_morphism(text);
  CHECK(resolve_map(back, arrow.table, arrow.table) == std::vector<Element>{0, 0});
  CHECK_THROWS_AS(resolve_map(parse_morphism("source s\ntarget t\nmap x x\n"), arrow.table, arrow.table), ParseError);
  CHECK_THROWS_AS(resolve_map(parse_morphism("source s\ntarget t\nmap x q\nmap x+ x\n"), arrow.table, arrow.table),
                  ParseError);
}

TEST_CASE("json reports keep a fixed key order") {
  const auto raw = fixtures::two_chains_with_tail_literal();
  const auto r = check_semigroupoid(raw.table, 1);
  const auto doc = render(document_of(r));
  CHECK(doc.rfind("{\n  \"valid\": false,\n  \"violations\": [", 0) == 0);
  CHECK(doc.find("\"axiom\": \"s1\"") != std::string::npos);
  CHECK(doc.find("\"classification\": {}") != std::string::npos);

  ReportDocument d;
  d.classification = classify_semigroupoid(lrs(fixtures::single_arrow()));
  d.counts = {{"size", 2}};
  const auto j = to_json(d);
  CHECK(j["classification"]["unitary"] == true);
  CHECK(j["classification"]["nd"] == false);
  CHECK(j["classification"]["witnesses"]["nd"] == std::vector<std::string>{"x"});
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"valid", "violations", "classification", "counts"});
  CHECK(render(d) == render(d));
}
