#ifndef CONSTELLA_THEOREMS_HPP
#define CONSTELLA_THEOREMS_HPP

// The desk-scale acceptance suite: nine criteria, each checked by brute force
// over the fixtures and the small censuses. Shared by the CLI and the
// acceptance test binary.

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "classify.hpp"
#include "enumerate.hpp"
#include "fixtures.hpp"
#include "functor.hpp"
#include "morphism.hpp"
#include "szendrei.hpp"

namespace constella {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

namespace theorems {

using SPtr = std::shared_ptr<const LeftRestrictionSemigroupoid>;
using TPtr = std::shared_ptr<const OrderedConstellation>;

/// Census sizes confirmed by an independent brute force, indexed by n.
inline constexpr std::size_t frozen_semigroupoid_tables[] = {0, 2, 16, 277};
inline constexpr std::size_t frozen_lr_semigroupoids[] = {0, 1, 9, 130};
inline constexpr std::size_t frozen_li_constellations[] = {0, 1, 9, 130};

/// Verdicts the fixtures are documented to have.
struct GoldenVerdict {
  const char* fixture;
  bool nd, lc, unitary;
};
inline constexpr GoldenVerdict golden_verdicts[] = {
    {"ex6_3", true, false, false}, {"ex6_4", false, false, false}, {"ex6_5", false, true, true},
    {"ex6_6", true, true, false},  {"ex6_7", false, true, false},
};

/// Every census structure up to `max_n`, computed once per run.
struct Census {
  std::size_t max_n = 0;
  std::vector<std::vector<SPtr>> lrs;  // lrs[n]
  std::vector<std::vector<TPtr>> lic;  // lic[n]

  explicit Census(std::size_t n) : max_n(n), lrs(n + 1), lic(n + 1) {
    for (std::size_t k = 1; k <= n; ++k) {
      for (auto& s : enumerate_lr_semigroupoids(k, n)) lrs[k].push_back(std::make_shared<const LeftRestrictionSemigroupoid>(std::move(s)));
      for (auto& t : enumerate_li_constellations(k, n)) lic[k].push_back(std::make_shared<const OrderedConstellation>(std::move(t)));
    }
  }

  std::vector<SPtr> lrs_upto(std::size_t n) const {
    std::vector<SPtr> out;
    for (std::size_t k = 1; k <= std::min(n, max_n); ++k) out.insert(out.end(), lrs[k].begin(), lrs[k].end());
    return out;
  }
  std::vector<TPtr> lic_upto(std::size_t n) const {
    std::vector<TPtr> out;
    for (std::size_t k = 1; k <= std::min(n, max_n); ++k) out.insert(out.end(), lic[k].begin(), lic[k].end());
    return out;
  }
};

/// Collects failures; a criterion passes when none were recorded.
class Tally {
 public:
  void fail(const std::string& what) {
    if (failures_++ < 8) out_ << (failures_ > 1 ? "; " : "") << what;
  }
  void note(const std::string& what) { notes_ += (notes_.empty() ? "" : "; ") + what; }
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) fail(what);
  }
  bool passed() const { return failures_ == 0; }
  std::string detail() const {
    std::ostringstream s;
    s << checks_ << " checks";
    if (failures_) s << ", " << failures_ << " failed: " << out_.str();
    if (!notes_.empty()) s << " [" << notes_ << "]";
    return s.str();
  }

 private:
  std::size_t checks_ = 0, failures_ = 0;
  std::ostringstream out_;
  std::string notes_;
};

inline std::string first_witness(const ValidationReport& r) {
  if (r.valid()) return "ok";
  const auto& v = r.violations().front();
  std::string out = v.axiom + " (";
  for (std::size_t i = 0; i < v.witness.size(); ++i) out += (i ? ", " : "") + v.witness[i];
  return out + ")";
}

inline std::vector<std::pair<std::string, SPtr>> valid_fixtures() {
  std::vector<std::pair<std::string, SPtr>> out;
  for (auto& [name, raw] : fixtures::valid_fixtures())
    out.emplace_back(name, std::make_shared<const LeftRestrictionSemigroupoid>(LeftRestrictionSemigroupoid::make(raw)));
  return out;
}

/// Space-separated carrier labels.
inline std::string serialize_labels(const PartialTable& tb) {
  std::string out;
  for (const auto& l : tb.labels()) out += (out.empty() ? "" : " ") + l;
  return out;
}

// 1. Every printed fixture passes the semigroupoid and lr checks, and its C
// passes the li checks.
inline void fixture_validation(Tally& t) {
  for (const auto& [name, raw] : fixtures::printed_examples()) {
    auto r = check_semigroupoid(raw.table);
    r.merge(check_left_restriction(raw.table, raw.plus));
    t.expect(r.valid(), name + ": " + first_witness(r));
    if (!r.valid()) continue;
    const auto c = build_C(LeftRestrictionSemigroupoid::make(raw));
    const auto li = check_li_constellation(c);
    t.expect(li.valid(), "C(" + name + "): " + first_witness(li));
  }
  // informational: the repaired tail example, not one of the printed fixtures
  const auto repaired = fixtures::two_chains_with_tail();
  if (check_semigroupoid(repaired.table, 1).valid() && check_left_restriction(repaired.table, repaired.plus, 1).valid() &&
      check_li_constellation(build_C(LeftRestrictionSemigroupoid::make(repaired)), 1).valid())
    t.note("ex6_7_repaired passes");
}

// 2. ND/LC/U verdicts, on both sides of C where C applies.
inline void classification_golden(Tally& t) {
  std::map<std::string, RawSemigroupoid> by_name;
  for (const auto& [name, raw] : fixtures::printed_examples()) by_name.emplace(name, raw);
  auto compare = [&](const std::string& label, bool nd, bool lc, bool u, const GoldenVerdict& g) {
    t.expect(nd == g.nd && lc == g.lc && u == g.unitary,
             label + ": got nd=" + std::to_string(nd) + " lc=" + std::to_string(lc) + " u=" + std::to_string(u));
  };
  for (const auto& g : golden_verdicts) {
    const auto& raw = by_name.at(g.fixture);
    const auto table_side = degeneracy_of_table(raw.table, raw.plus);
    compare(std::string(g.fixture) + " table", table_side.nd, table_side.lc, table_side.unitary, g);
    std::optional<LeftRestrictionSemigroupoid> s;
    if (check_semigroupoid(raw.table, 1).valid() && check_left_restriction(raw.table, raw.plus, 1).valid())
      s = LeftRestrictionSemigroupoid::make(raw);
    else if (std::string(g.fixture) == "ex6_7")
      s = LeftRestrictionSemigroupoid::make(fixtures::two_chains_with_tail());
    if (!s) continue;
    const auto r = classify_constellation(build_C(*s));
    compare(std::string(g.fixture) + " constellation", r.nd, r.lc, r.unitary, g);
  }
}

// 3. G(C(S)) = S and C(G(T)) = T literally.
inline void round_trips(Tally& t, const Census& census) {
  for (const auto& [name, s] : valid_fixtures()) {
    t.expect(roundtrip_check(*s).valid(), name + " via C");
    t.expect(roundtrip_check(build_C(*s)).valid(), name + " via G");
  }
  std::size_t count = 0;
  for (const auto& s : census.lrs_upto(census.max_n)) {
    t.expect(roundtrip_check(*s).valid(), "census semigroupoid " + serialize_labels(s->table()));
    ++count;
  }
  for (const auto& c : census.lic_upto(census.max_n)) {
    t.expect(roundtrip_check(*c).valid(), "census constellation");
    ++count;
  }
  t.note(std::to_string(count) + " census structures");
}

// 4. rm = ir and pm = ip as function sets under C, identities and
// composition included.
inline void morphism_correspondence(Tally& t, const Census& census) {
  std::vector<std::pair<std::string, SPtr>> pool;
  for (const auto& s : census.lrs_upto(2)) pool.emplace_back("census" + std::to_string(s->size()), s);
  const std::size_t census_count = pool.size();
  for (const auto& f : valid_fixtures()) pool.push_back(f);
  std::vector<TPtr> cs;
  for (const auto& [name, s] : pool) cs.push_back(std::make_shared<const OrderedConstellation>(build_C(*s)));

  auto maps = [](const auto& ms) {
    std::set<std::vector<Element>> out;
    for (const auto& m : ms) out.insert(m.map());
    return out;
  };
  // census pairs plus fixture pairs; mixed pairs add nothing new
  auto in_scope = [&](std::size_t i, std::size_t j) { return (i < census_count) == (j < census_count); };
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const auto id_s = SemigroupoidMorphism::identity(pool[i].second);
    const auto id_c = ConstellationMorphism::identity(cs[i]);
    t.expect(is_restriction_morphism(id_s, 1).valid() && is_inductive_radiant(id_c, 1).valid(),
             pool[i].first + " identity");
    t.expect(transport(id_s).map() == id_c.map(), pool[i].first + " identity transport");
    for (std::size_t j = 0; j < pool.size(); ++j) {
      if (!in_scope(i, j)) continue;
      ++pairs;
      const auto label = pool[i].first + " -> " + pool[j].first;
      const auto rm = enumerate_morphisms(MorphismKind::restriction_morphism, pool[i].second, pool[j].second);
      const auto ir = enumerate_morphisms(MorphismKind::inductive_radiant, cs[i], cs[j]);
      t.expect(maps(rm) == maps(ir), label + ": rm != ir");
      const auto pm = enumerate_morphisms(MorphismKind::premorphism, pool[i].second, pool[j].second);
      const auto ip = enumerate_morphisms(MorphismKind::inductive_preradiant, cs[i], cs[j]);
      t.expect(maps(pm) == maps(ip), label + ": pm != ip");
    }
  }
  // composition on census triples
  for (std::size_t a = 0; a < census_count; ++a)
    for (std::size_t b = 0; b < census_count; ++b) {
      const auto first = enumerate_morphisms(MorphismKind::restriction_morphism, pool[a].second, pool[b].second);
      for (std::size_t c = 0; c < census_count; ++c) {
        const auto second = enumerate_morphisms(MorphismKind::restriction_morphism, pool[b].second, pool[c].second);
        for (const auto& m1 : first)
          for (const auto& m2 : second) {
            const auto both = compose(m2, m1);
            t.expect(is_restriction_morphism(both, 1).valid(), "composite is not a restriction morphism");
            const auto across = compose(transport(m2), transport(m1));
            t.expect(transport(both).map() == across.map() && is_inductive_radiant(across, 1).valid(),
                     "composition does not commute with C");
          }
      }
    }
  t.note(std::to_string(pairs) + " ordered pairs");
}

// 5. C(Sz(S)) = Sz(C(S)) literally, and restriction/corestriction in Sz(T)
// follow their closed forms.
inline void expansion_coherence(Tally& t) {
  for (const auto& [name, s] : valid_fixtures()) {
    const auto sz = expand_semigroupoid(s);
    const auto c = std::make_shared<const OrderedConstellation>(build_C(*s));
    const auto szc = expand_constellation(c);
    t.expect(build_C(sz.structure()) == szc.structure(), name + ": C(Sz) != Sz(C)");
    t.expect(check_li_constellation(szc.structure(), 1).valid(), name + ": Sz(C) not li");
    const ConstellationIndex base(*c);
    const ConstellationIndex ix(szc.structure());
    for (Element i = 0; i < szc.size(); ++i) {
      const auto& [A, a] = szc.carrier[i];
      for (Element k : ix.projections()) {
        const auto& [E, e] = szc.carrier[k];
        if (ix.leq(k, ix.plus(i)))
          t.expect(ix.restriction(k, i) == szc.carrier.index_of({E, base.restriction(e, a)}),
                   name + ": restriction closed form");
        const auto ae = base.corestriction(a, e).get();
        const auto got = ix.corestriction(i, k);
        if (!ae) {
          t.expect(!got.has_value(), name + ": corestriction should be empty");
          continue;
        }
        const auto left = detail::left_multiply(c->table, c->plus(*ae), A);
        const auto right = detail::left_multiply(c->table, *ae, E);
        t.expect(left && right && got.has_value() &&
                     got.value() == szc.carrier.index_of({detail::sorted_union(*left, *right), *ae}),
                 name + ": corestriction closed form");
      }
    }
  }
}

// 6. Every preradiant φ extends to a radiant Φ with Φ∘ι = φ, uniquely; every
// radiant out of the expansion restricts to a preradiant along ι.
inline void universal_property(Tally& t, const Census& census) {
  const auto pool = census.lic_upto(2);
  std::size_t extended = 0;
  for (const auto& src : pool) {
    const auto sz = expand_constellation(src);
    const auto i = iota(sz);
    std::vector<Term> witnesses;
    for (Element el = 0; el < sz.size(); ++el) witnesses.push_back(generation_decomposition(sz, el));
    for (const auto& dst : pool) {
      const ConstellationIndex target(*dst);
      const auto radiants = enumerate_morphisms(MorphismKind::inductive_radiant, sz.expanded, dst);
      for (const auto& phi : enumerate_morphisms(MorphismKind::inductive_preradiant, src, dst)) {
        ++extended;
        std::optional<ConstellationMorphism> ext;
        try {
          ext = extend(phi, sz);
        } catch (const MeetUndefined& e) {
          t.fail(std::string("extend: ") + e.what());
          continue;
        }
        t.expect(is_inductive_radiant(*ext, 1).valid(), "extension is not a radiant");
        t.expect(compose(*ext, i).map() == phi.map(), "extension does not restrict to phi");
        std::size_t agreeing = 0;
        for (const auto& psi : radiants)
          if (compose(psi, i).map() == phi.map()) {
            ++agreeing;
            t.expect(psi.map() == ext->map(), "a second radiant restricts to phi");
          }
        t.expect(agreeing == 1, "extension missing from the radiant enumeration");
        for (Element el = 0; el < sz.size(); ++el)
          t.expect(evaluate(witnesses[el], phi.map(), target) == (*ext)(el), "generation witness disagrees");
      }
      for (const auto& psi : radiants) {
        const auto back = compose(psi, i);
        t.expect(is_inductive_preradiant(back, 1).valid(), "restriction of a radiant is not a preradiant");
        t.expect(extend(back, sz).map() == psi.map(), "radiant is not the extension of its restriction");
      }
    }
  }
  t.note(std::to_string(extended) + " preradiants extended");
}

// 7. Degeneracy, category, semigroup, inverse and inverse-category
// characterizations, each side computed independently.
inline void degeneracy_equivalences(Tally& t, const Census& census) {
  std::vector<std::pair<std::string, SPtr>> pool = valid_fixtures();
  for (const auto& s : census.lrs_upto(census.max_n)) pool.emplace_back("census", s);
  for (const auto& c : census.lic_upto(census.max_n))
    pool.emplace_back("census G", std::make_shared<const LeftRestrictionSemigroupoid>(build_G(*c)));
  for (const auto& [name, s] : pool) {
    const auto c = build_C(*s);
    const ConstellationIndex ix(c);
    const auto lhs = degeneracy_of_constellation(ix);
    const auto rhs = degeneracy_of_table(s->table(), s->restriction());
    t.expect(lhs.nd == rhs.nd, name + ": ND disagrees");
    t.expect(lhs.lc == rhs.lc, name + ": LC disagrees");
    t.expect(lhs.unitary == rhs.unitary, name + ": U disagrees");

    const bool category = detect_category(s->table()).is_category;
    t.expect(category == (lhs.nd && lhs.unitary), name + ": category != ND and U");

    const auto sg = semigroup_conditions(*s);
    t.expect(sg.total == sg.nd_and_semilattice && sg.total == sg.all_corestrictions, name + ": semigroup forms disagree");

    const bool inverse = detail::inverse_with_induced_plus(s->table(), s->restriction());
    const auto right = has_right_inverses(c);
    t.expect(inverse == right.present, name + ": inverse != right inverses");
    if (right.present) {
      const auto g = build_G(ix);
      t.expect(detect_inverse_semigroupoid(g.table()).is_inverse, name + ": G(T) not inverse");
      t.expect(idempotents(g.table()) == g.projections(), name + ": E(G(T)) != G(T)^+");
    }
    t.expect((category && inverse) == (lhs.lc && right.present), name + ": inverse category != LC with right inverses");
  }
  t.note(std::to_string(pool.size()) + " structures");
}

// 8. Census counts and C as a bijection onto the li census.
inline void census_bijection(Tally& t, const Census& census) {
  for (std::size_t n = 1; n <= census.max_n; ++n) {
    const auto tag = "n=" + std::to_string(n);
    t.expect(census.lrs[n].size() == census.lic[n].size(), tag + ": sizes differ");
    if (n < std::size(frozen_lr_semigroupoids)) {
      t.expect(enumerate_semigroupoid_tables(n, census.max_n).size() == frozen_semigroupoid_tables[n],
               tag + ": semigroupoid count");
      t.expect(census.lrs[n].size() == frozen_lr_semigroupoids[n], tag + ": lr count");
      t.expect(census.lic[n].size() == frozen_li_constellations[n], tag + ": li count");
    }
    std::vector<Element> id(n);
    std::iota(id.begin(), id.end(), 0);
    std::set<std::vector<std::size_t>> images, targets;
    for (const auto& s : census.lrs[n]) {
      const auto c = build_C(*s);
      images.insert(detail::encode(c.table, &c.plus, &c.order, id));
    }
    for (const auto& c : census.lic[n]) targets.insert(detail::encode(c->table, &c->plus, &c->order, id));
    t.expect(images.size() == census.lrs[n].size(), tag + ": C is not injective");
    t.expect(images == targets, tag + ": C is not onto");
    t.note(tag + ": " + std::to_string(census.lrs[n].size()));
  }
}

namespace detail_mutation {

/// Applies f to every single-entry change of a table: a defined cell made
/// undefined or given another value, or an undefined cell given a value.
template <class F>
void for_each_cell_mutation(const PartialTable& table, F&& f) {
  const std::size_t n = table.size();
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      const auto current = table.compose(a, b);
      if (current) {
        PartialTable m = table;
        m.unset(a, b);
        f(m, "unset " + table.label(a) + "*" + table.label(b));
      }
      for (Element c = 0; c < n; ++c) {
        if (current == c) continue;
        PartialTable m = table;
        m.set(a, b, c);
        f(m, "set " + table.label(a) + "*" + table.label(b) + "=" + table.label(c));
      }
    }
}

template <class F>
void for_each_plus_mutation(const PartialTable& table, const RestrictionStructure& plus, F&& f) {
  for (Element x = 0; x < table.size(); ++x)
    for (Element v = 0; v < table.size(); ++v) {
      if (plus(x) == v) continue;
      RestrictionStructure m = plus;
      m.set(x, v);
      f(m, "plus " + table.label(x) + "=" + table.label(v));
    }
}

}  // namespace detail_mutation

// 9. Every axiom id is named by some single-entry mutation of a fixture.
inline void mutation_sensitivity(Tally& t) {
  std::map<std::string, std::string> hits;  // axiom id -> first mutation naming it
  auto record = [&](const ValidationReport& r, const std::string& where) {
    for (const auto& v : r.violations()) hits.emplace(v.axiom, where);
  };
  for (const auto& [name, s] : valid_fixtures()) {
    const auto& tb = s->table();
    const auto& plus = s->restriction();
    detail_mutation::for_each_cell_mutation(tb, [&](const PartialTable& m, const std::string& what) {
      record(check_left_restriction(m, plus), name + " " + what);
    });
    detail_mutation::for_each_plus_mutation(tb, plus, [&](const RestrictionStructure& m, const std::string& what) {
      record(check_left_restriction(tb, m), name + " " + what);
    });

    const auto c = build_C(*s);
    auto check_li = [&](const OrderedConstellation& m, const std::string& what) {
      try {
        record(check_li_constellation(m), "C(" + name + ") " + what);
      } catch (const std::exception&) {
        // a mutation the checker refuses to index names nothing
      }
    };
    detail_mutation::for_each_cell_mutation(c.table, [&](const PartialTable& m, const std::string& what) {
      check_li({m, c.plus, c.order}, what);
    });
    detail_mutation::for_each_plus_mutation(c.table, c.plus, [&](const RestrictionStructure& m, const std::string& what) {
      check_li({c.table, m, c.order}, what);
    });
    for (Element a = 0; a < c.size(); ++a)
      for (Element b = 0; b < c.size(); ++b) {
        if (a == b) continue;
        OrderRelation o = c.order;
        o.set(a, b, !o.leq(a, b));
        check_li({c.table, c.plus, o}, std::string(o.leq(a, b) ? "add" : "drop") + " order " + c.label(a) + "<=" + c.label(b));
      }

    const ConstellationIndex ix(c);
    for (Element x = 0; x < s->size(); ++x)
      for (Element y = 0; y < s->size(); ++y) {
        if (x == y) continue;
        std::vector<Element> map(s->size());
        std::iota(map.begin(), map.end(), 0);
        map[x] = y;
        const auto what = name + " identity with " + tb.label(x) + "->" + tb.label(y);
        record(check_restriction_morphism(*s, *s, map), what);
        record(check_premorphism(*s, *s, map), what);
        record(check_inductive_radiant(ix, ix, map), "C " + what);
        record(check_inductive_preradiant(ix, ix, map), "C " + what);
      }
  }
  const std::vector<std::string> exact = {"lr1", "lr2", "lr3", "lr4", "c1",  "c2",  "c3",  "c4",  "wo1",
                                          "wo2", "wo3", "wo4", "wo5", "wo6", "wo7", "wo8", "wo9"};
  for (const auto& id : exact) t.expect(hits.count(id) > 0, id + " never named");
  for (const std::string family : {"rm", "pm", "ir", "ip"}) {
    std::string members;
    for (const auto& [id, where] : hits)
      if (id.rfind(family, 0) == 0 && id.size() == family.size() + 1) members += (members.empty() ? "" : ",") + id;
    t.expect(!members.empty(), family + " never named");
    t.note(family + ": " + members);
  }
}

}  // namespace theorems

/// Runs the nine criteria. `census_size` bounds the census used by the round
/// trip, equivalence and bijection criteria; the morphism criteria use at most 2.
inline std::vector<CriterionResult> run_acceptance(std::size_t census_size = 3,
                                                   const std::function<void(const CriterionResult&)>& on_result = {}) {
  using Clock = std::chrono::steady_clock;
  const theorems::Census census(census_size);
  std::vector<CriterionResult> out;
  auto run = [&](int id, const char* name, auto&& body) {
    const auto start = Clock::now();
    theorems::Tally tally;
    try {
      body(tally);
    } catch (const std::exception& e) {
      tally.fail(std::string("exception: ") + e.what());
    }
    CriterionResult r{id, name, tally.passed(), tally.detail(),
                      std::chrono::duration<double>(Clock::now() - start).count()};
    if (on_result) on_result(r);
    out.push_back(std::move(r));
  };
  run(1, "fixture validation", [&](auto& t) { theorems::fixture_validation(t); });
  run(2, "classification verdicts", [&](auto& t) { theorems::classification_golden(t); });
  run(3, "round trips", [&](auto& t) { theorems::round_trips(t, census); });
  run(4, "morphism correspondence", [&](auto& t) { theorems::morphism_correspondence(t, census); });
  run(5, "expansion coherence", [&](auto& t) { theorems::expansion_coherence(t); });
  run(6, "universal property", [&](auto& t) { theorems::universal_property(t, census); });
  run(7, "structure characterizations", [&](auto& t) { theorems::degeneracy_equivalences(t, census); });
  run(8, "census bijection", [&](auto& t) { theorems::census_bijection(t, census); });
  run(9, "mutation sensitivity", [&](auto& t) { theorems::mutation_sensitivity(t); });
  return out;
}

}  // namespace constella

#endif  // CONSTELLA_THEOREMS_HPP
