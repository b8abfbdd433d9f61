#ifndef CONSTELLA_MORPHISM_HPP
#define CONSTELLA_MORPHISM_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "config.hpp"
#include "constellation.hpp"
#include "functor.hpp"
#include "report.hpp"
#include "semigroupoid.hpp"

namespace constella {

/// A total map between the carriers of two structures of the same kind.
/// Source and target are shared so morphisms stay cheap to copy.
template <class S>
class Morphism {
 public:
  Morphism(std::shared_ptr<const S> source, std::shared_ptr<const S> target, std::vector<Element> map)
      : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
    if (!source_ || !target_) throw std::invalid_argument("morphism needs a source and a target");
    if (map_.size() != source_->size()) throw std::invalid_argument("morphism map is not total");
    for (Element y : map_)
      if (y >= target_->size()) throw std::invalid_argument("morphism image outside the target");
  }

  static Morphism identity(std::shared_ptr<const S> s) {
    std::vector<Element> map(s->size());
    for (Element x = 0; x < map.size(); ++x) map[x] = x;
    return Morphism(s, s, std::move(map));
  }

  const S& source() const noexcept { return *source_; }
  const S& target() const noexcept { return *target_; }
  const std::shared_ptr<const S>& source_ptr() const noexcept { return source_; }
  const std::shared_ptr<const S>& target_ptr() const noexcept { return target_; }
  const std::vector<Element>& map() const noexcept { return map_; }
  Element operator()(Element x) const { return map_.at(x); }

  /// Same map between literally equal structures.
  friend bool operator==(const Morphism& a, const Morphism& b) {
    return a.map_ == b.map_ && (a.source_ == b.source_ || *a.source_ == *b.source_) &&
           (a.target_ == b.target_ || *a.target_ == *b.target_);
  }

 private:
  std::shared_ptr<const S> source_;
  std::shared_ptr<const S> target_;
  std::vector<Element> map_;
};

using SemigroupoidMorphism = Morphism<LeftRestrictionSemigroupoid>;
using ConstellationMorphism = Morphism<OrderedConstellation>;

inline const PartialTable& table_of(const LeftRestrictionSemigroupoid& s) { return s.table(); }
inline const PartialTable& table_of(const OrderedConstellation& t) { return t.table; }

/// rm1-rm2 on a raw map.
inline ValidationReport check_restriction_morphism(const LeftRestrictionSemigroupoid& s,
                                                   const LeftRestrictionSemigroupoid& t,
                                                   const std::vector<Element>& phi,
                                                   std::size_t limit = ValidationReport::unlimited) {
  ValidationReport report(limit);
  const auto& st = s.table();
  for (Element a = 0; a < s.size() && !report.saturated(); ++a) {
    if (phi[s.plus(a)] != t.plus(phi[a])) report.add("rm2", detail::names(st, {a}));
    for (Element b = 0; b < s.size(); ++b) {
      const auto ab = s.compose(a, b);
      if (!ab) continue;
      const auto img = t.compose(phi[a], phi[b]);
      if (!img || *img != phi[*ab]) report.add("rm1", detail::names(st, {a, b}));
    }
  }
  return report;
}

/// pm1-pm2 on a raw map.
inline ValidationReport check_premorphism(const LeftRestrictionSemigroupoid& s, const LeftRestrictionSemigroupoid& t,
                                          const std::vector<Element>& phi,
                                          std::size_t limit = ValidationReport::unlimited) {
  ValidationReport report(limit);
  const auto& st = s.table();
  for (Element a = 0; a < s.size() && !report.saturated(); ++a) {
    if (!t.leq(t.plus(phi[a]), phi[s.plus(a)])) report.add("pm2", detail::names(st, {a}));
    for (Element b = 0; b < s.size(); ++b) {
      const auto ab = s.compose(a, b);
      if (!ab) continue;
      const auto lhs = t.compose(phi[a], phi[b]);
      const auto rhs = t.compose(t.plus(phi[a]), phi[*ab]);
      if (!lhs || !rhs || *lhs != *rhs) report.add("pm1", detail::names(st, {a, b}));
    }
  }
  return report;
}

namespace detail {

/// ir4 / ip4: x|e exists ⟹ φ(x)|φ(e) exists and equals φ(x|e).
inline void check_corestriction_preserved(const ConstellationIndex& s, const ConstellationIndex& t,
                                          const std::vector<Element>& phi, const char* axiom,
                                          ValidationReport& report) {
  const auto& sl = s.structure().table;
  for (Element x = 0; x < s.size(); ++x)
    for (Element e : s.projections()) {
      const auto xe = s.corestriction(x, e).get();
      if (!xe) continue;
      if (!t.is_projection(phi[e])) {
        report.add(axiom, names(sl, {x, e}), "image of a projection is not a projection");
        continue;
      }
      const auto img = t.corestriction(phi[x], phi[e]).get();
      if (!img || *img != phi[*xe]) report.add(axiom, names(sl, {x, e}));
    }
}

inline void check_order_preserved(const ConstellationIndex& s, const ConstellationIndex& t,
                                  const std::vector<Element>& phi, const char* axiom, ValidationReport& report) {
  for (Element x = 0; x < s.size(); ++x)
    for (Element y = 0; y < s.size(); ++y)
      if (s.leq(x, y) && !t.leq(phi[x], phi[y])) report.add(axiom, names(s.structure().table, {x, y}));
}

}  // namespace detail

/// ir1-ir4 on a raw map between indexed constellations.
inline ValidationReport check_inductive_radiant(const ConstellationIndex& s, const ConstellationIndex& t,
                                                const std::vector<Element>& phi,
                                                std::size_t limit = ValidationReport::unlimited) {
  ValidationReport report(limit);
  const auto& sl = s.structure().table;
  for (Element x = 0; x < s.size(); ++x) {
    if (t.plus(phi[x]) != phi[s.plus(x)]) report.add("ir2", detail::names(sl, {x}));
    for (Element y = 0; y < s.size(); ++y) {
      const auto xy = s.compose(x, y);
      if (!xy) continue;
      const auto img = t.compose(phi[x], phi[y]);
      if (!img || *img != phi[*xy]) report.add("ir1", detail::names(sl, {x, y}));
    }
    if (report.saturated()) return report;
  }
  detail::check_order_preserved(s, t, phi, "ir3", report);
  detail::check_corestriction_preserved(s, t, phi, "ir4", report);
  return report;
}

/// ip1-ip5 plus the derived "ip-plus" check φ(T^+) ⊆ L^+.
inline ValidationReport check_inductive_preradiant(const ConstellationIndex& s, const ConstellationIndex& t,
                                                   const std::vector<Element>& phi,
                                                   std::size_t limit = ValidationReport::unlimited) {
  ValidationReport report(limit);
  const auto& sl = s.structure().table;
  for (Element x = 0; x < s.size(); ++x) {
    if (!t.leq(t.plus(phi[x]), phi[s.plus(x)])) report.add("ip2", detail::names(sl, {x}));
    for (Element y = 0; y < s.size(); ++y) {
      const auto xy = s.compose(x, y);
      if (!xy) continue;
      const Element px = phi[x];
      const bool guard1 = t.corestriction(px, t.plus(phi[y])).has_value();
      const bool guard2 = t.corestriction(t.plus(px), t.plus(phi[*xy])).has_value();
      const auto lhs = t.pseudo_product(px, phi[y]);
      const auto rhs = t.pseudo_product(t.plus(px), phi[*xy]);
      if (!guard1 || !guard2 || !lhs || !rhs || *lhs != *rhs) report.add("ip1", detail::names(sl, {x, y}));
    }
    if (report.saturated()) return report;
  }
  detail::check_order_preserved(s, t, phi, "ip3", report);
  detail::check_corestriction_preserved(s, t, phi, "ip4", report);
  for (Element e : s.projections()) {
    if (!t.is_projection(phi[e])) report.add("ip-plus", detail::names(sl, {e}));
    for (Element x = 0; x < s.size(); ++x) {
      if (!s.leq(e, s.plus(x))) continue;
      const auto cand = detail::restriction_candidates(s.structure(), e, x);
      if (cand.size() != 1) continue;  // the source itself violates wo3
      const Element lhs = t.plus(phi[cand.front()]);
      const auto rhs = t.is_projection(phi[e]) ? t.corestriction(phi[e], t.plus(phi[x])).get()
                                               : std::optional<Element>{};
      if (!rhs || *rhs != lhs) report.add("ip5", detail::names(sl, {e, x}));
    }
  }
  return report;
}

inline ValidationReport is_restriction_morphism(const SemigroupoidMorphism& m,
                                                std::size_t limit = ValidationReport::unlimited) {
  return check_restriction_morphism(m.source(), m.target(), m.map(), limit);
}

inline ValidationReport is_premorphism(const SemigroupoidMorphism& m, std::size_t limit = ValidationReport::unlimited) {
  return check_premorphism(m.source(), m.target(), m.map(), limit);
}

inline ValidationReport is_inductive_radiant(const ConstellationMorphism& m,
                                             std::size_t limit = ValidationReport::unlimited) {
  return check_inductive_radiant(ConstellationIndex(m.source()), ConstellationIndex(m.target()), m.map(), limit);
}

inline ValidationReport is_inductive_preradiant(const ConstellationMorphism& m,
                                                std::size_t limit = ValidationReport::unlimited) {
  return check_inductive_preradiant(ConstellationIndex(m.source()), ConstellationIndex(m.target()), m.map(), limit);
}

enum class MorphismKind { any, restriction_morphism, premorphism, inductive_radiant, inductive_preradiant };

namespace detail {

inline std::uint64_t map_space(std::size_t base, std::size_t exponent, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (total > cap / std::max<std::uint64_t>(base, 1)) return cap + 1;
    total *= base;
  }
  return total;
}

/// Calls f(map) for every total map {0..n-1} -> {0..m-1} in lexicographic order.
template <class F>
void for_each_map(std::size_t n, std::size_t m, F&& f) {
  std::vector<Element> map(n, 0);
  while (true) {
    f(static_cast<const std::vector<Element>&>(map));
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++map[i] < m) break;
      map[i] = 0;
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

}  // namespace detail

/// All maps of the requested kind, lexicographic in the image vector.
/// Throws CapExceeded when |target|^|source| exceeds `cap`.
inline std::vector<SemigroupoidMorphism> enumerate_morphisms(MorphismKind kind,
                                                             std::shared_ptr<const LeftRestrictionSemigroupoid> s,
                                                             std::shared_ptr<const LeftRestrictionSemigroupoid> t,
                                                             std::uint64_t cap = caps_from_env().morphism_space) {
  if (kind == MorphismKind::inductive_radiant || kind == MorphismKind::inductive_preradiant)
    throw std::invalid_argument("constellation morphism kind requested for semigroupoids");
  if (detail::map_space(t->size(), s->size(), cap) > cap) throw CapExceeded("morphism space exceeds cap");
  std::vector<SemigroupoidMorphism> out;
  detail::for_each_map(s->size(), t->size(), [&](const std::vector<Element>& phi) {
    bool keep = true;
    if (kind == MorphismKind::restriction_morphism) keep = check_restriction_morphism(*s, *t, phi, 1).valid();
    if (kind == MorphismKind::premorphism) keep = check_premorphism(*s, *t, phi, 1).valid();
    if (keep) out.emplace_back(s, t, phi);
  });
  return out;
}

inline std::vector<ConstellationMorphism> enumerate_morphisms(MorphismKind kind,
                                                              std::shared_ptr<const OrderedConstellation> s,
                                                              std::shared_ptr<const OrderedConstellation> t,
                                                              std::uint64_t cap = caps_from_env().morphism_space) {
  if (kind == MorphismKind::restriction_morphism || kind == MorphismKind::premorphism)
    throw std::invalid_argument("semigroupoid morphism kind requested for constellations");
  if (detail::map_space(t->size(), s->size(), cap) > cap) throw CapExceeded("morphism space exceeds cap");
  const ConstellationIndex si(*s);
  const ConstellationIndex ti(*t);
  std::vector<ConstellationMorphism> out;
  detail::for_each_map(s->size(), t->size(), [&](const std::vector<Element>& phi) {
    bool keep = true;
    if (kind == MorphismKind::inductive_radiant) keep = check_inductive_radiant(si, ti, phi, 1).valid();
    if (kind == MorphismKind::inductive_preradiant) keep = check_inductive_preradiant(si, ti, phi, 1).valid();
    if (keep) out.emplace_back(s, t, phi);
  });
  return out;
}

/// The same map between C(source) and C(target).
inline ConstellationMorphism transport(const SemigroupoidMorphism& m) {
  return {std::make_shared<const OrderedConstellation>(build_C(m.source())),
          std::make_shared<const OrderedConstellation>(build_C(m.target())), m.map()};
}

/// The same map between G(source) and G(target).
inline SemigroupoidMorphism transport(const ConstellationMorphism& m) {
  return {std::make_shared<const LeftRestrictionSemigroupoid>(build_G(m.source())),
          std::make_shared<const LeftRestrictionSemigroupoid>(build_G(m.target())), m.map()};
}

/// m2 ∘ m1. The target of m1 must literally equal the source of m2.
template <class S>
Morphism<S> compose(const Morphism<S>& m2, const Morphism<S>& m1) {
  if (m1.target_ptr() != m2.source_ptr() && !(m1.target() == m2.source()))
    throw std::invalid_argument("morphisms are not composable");
  const auto to = label_correspondence(table_of(m1.target()), table_of(m2.source()));
  std::vector<Element> map(m1.map().size());
  for (Element x = 0; x < map.size(); ++x) map[x] = m2((*to)[m1(x)]);
  return Morphism<S>(m1.source_ptr(), m2.target_ptr(), std::move(map));
}

}  // namespace constella

#endif  // CONSTELLA_MORPHISM_HPP
