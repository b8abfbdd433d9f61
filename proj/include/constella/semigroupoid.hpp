#ifndef CONSTELLA_SEMIGROUPOID_HPP
#define CONSTELLA_SEMIGROUPOID_HPP

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "report.hpp"
#include "table.hpp"

namespace constella {

namespace detail {

inline std::vector<std::string> names(const PartialTable& t, std::initializer_list<Element> xs) {
  std::vector<std::string> out;
  out.reserve(xs.size());
  for (Element x : xs) out.push_back(t.label(x));
  return out;
}

}  // namespace detail

/// Partial associativity: whenever one of the three guards holds for (s,t,r),
/// all of (s,t), (t,r), (st,r), (s,tr) are defined and (st)r = s(tr).
/// A triple is reported once per guard it violates.
inline ValidationReport check_semigroupoid(const PartialTable& t,
                                           std::size_t limit = ValidationReport::unlimited) {
  ValidationReport report(limit);
  const std::size_t n = t.size();
  for (Element s = 0; s < n; ++s) {
    for (Element u = 0; u < n; ++u) {
      const auto su = t.compose(s, u);
      for (Element r = 0; r < n; ++r) {
        const auto ur = t.compose(u, r);
        const auto su_r = su ? t.compose(*su, r) : std::nullopt;
        const auto s_ur = ur ? t.compose(s, *ur) : std::nullopt;
        const bool closed = su && ur && su_r && s_ur && *su_r == *s_ur;
        if (closed) continue;
        if (su && ur) report.add("s1", detail::names(t, {s, u, r}));
        if (su && su_r) report.add("s2", detail::names(t, {s, u, r}));
        if (ur && s_ur) report.add("s3", detail::names(t, {s, u, r}));
        if (report.saturated()) return report;
      }
    }
  }
  return report;
}

/// lr1-lr4 for the given plus map. Assumes nothing about associativity, so it
/// can diagnose mutated tables too. A plus map of the wrong shape is reported
/// as "plus" and stops further checks.
inline ValidationReport check_left_restriction(const PartialTable& t, const RestrictionStructure& plus,
                                               std::size_t limit = ValidationReport::unlimited) {
  ValidationReport report(limit);
  if (!plus.fits(t)) {
    report.add("plus", {}, "plus map is not a total map on the carrier");
    return report;
  }
  const std::size_t n = t.size();
  for (Element s = 0; s < n; ++s) {
    const auto ps = t.compose(plus(s), s);
    if (!ps || *ps != s) report.add("lr1", detail::names(t, {s}));
  }
  for (Element s = 0; s < n; ++s) {
    for (Element u = 0; u < n; ++u) {
      if (report.saturated()) return report;
      const Element sp = plus(s);
      const Element up = plus(u);
      const auto a = t.compose(sp, up);
      const auto b = t.compose(up, sp);
      if (a.has_value() != b.has_value() || (a && *a != *b)) report.add("lr2", detail::names(t, {s, u}));

      if (const auto spu = t.compose(sp, u)) {
        if (!a || plus(*spu) != *a) report.add("lr3", detail::names(t, {s, u}));
      }

      if (const auto su = t.compose(s, u)) {
        const auto left = t.compose(s, up);
        const auto right = t.compose(plus(*su), s);
        if (!left || !right || *left != *right) report.add("lr4", detail::names(t, {s, u}));
      }
    }
  }
  return report;
}

/// s <= t iff s^+ t is defined and equals s.
inline OrderRelation natural_order_relation(const PartialTable& t, const RestrictionStructure& plus) {
  OrderRelation order(t.size());
  for (Element s = 0; s < t.size(); ++s)
    for (Element u = 0; u < t.size(); ++u) {
      const auto p = t.compose(plus(s), u);
      if (p && *p == s) order.set(s, u);
    }
  return order;
}

/// s <= t iff e t = s for some projection e. Agrees with
/// natural_order_relation on valid structures.
inline OrderRelation natural_order_via_projections(const PartialTable& t, const RestrictionStructure& plus) {
  OrderRelation order(t.size());
  for (Element e : plus.image())
    for (Element u = 0; u < t.size(); ++u)
      if (const auto p = t.compose(e, u)) order.set(*p, u);
  return order;
}

/// E(X): elements with xx defined and xx = x.
inline std::vector<Element> idempotents(const PartialTable& t) {
  std::vector<Element> out;
  for (Element x = 0; x < t.size(); ++x) {
    const auto xx = t.compose(x, x);
    if (xx && *xx == x) out.push_back(x);
  }
  return out;
}

enum class IdentityKind { none, left, right, both };

inline const char* to_string(IdentityKind k) {
  switch (k) {
    case IdentityKind::none: return "none";
    case IdentityKind::left: return "left";
    case IdentityKind::right: return "right";
    case IdentityKind::both: return "both";
  }
  return "none";
}

inline bool is_left_identity(const PartialTable& t, Element e) {
  if (!t.defined(e, e)) return false;
  for (Element s = 0; s < t.size(); ++s) {
    const auto es = t.compose(e, s);
    if (es && *es != s) return false;
  }
  return true;
}

inline bool is_right_identity(const PartialTable& t, Element e) {
  if (!t.defined(e, e)) return false;
  for (Element s = 0; s < t.size(); ++s) {
    const auto se = t.compose(s, e);
    if (se && *se != s) return false;
  }
  return true;
}

inline IdentityKind identity_kind(const PartialTable& t, Element x) {
  const bool l = is_left_identity(t, x);
  const bool r = is_right_identity(t, x);
  if (l && r) return IdentityKind::both;
  if (l) return IdentityKind::left;
  if (r) return IdentityKind::right;
  return IdentityKind::none;
}

/// An unvalidated (table, plus) pair as read from a file.
struct RawSemigroupoid {
  PartialTable table;
  RestrictionStructure plus;

  friend bool operator==(const RawSemigroupoid& a, const RawSemigroupoid& b) {
    return a.table == b.table && same_plus(a.table, a.plus, b.table, b.plus);
  }
};

/// A left restriction semigroupoid. Only obtainable through make(), which
/// runs both axiom checkers.
class LeftRestrictionSemigroupoid {
 public:
  static LeftRestrictionSemigroupoid make(PartialTable table, RestrictionStructure plus) {
    ValidationReport report = check_semigroupoid(table);
    report.merge(check_left_restriction(table, plus));
    if (!report.valid()) throw InvalidStructure("not a left restriction semigroupoid", std::move(report));
    return LeftRestrictionSemigroupoid(std::move(table), std::move(plus));
  }

  static LeftRestrictionSemigroupoid make(RawSemigroupoid raw) {
    return make(std::move(raw.table), std::move(raw.plus));
  }

  const PartialTable& table() const noexcept { return table_; }
  const RestrictionStructure& restriction() const noexcept { return plus_; }
  std::size_t size() const noexcept { return table_.size(); }
  const std::string& label(Element x) const { return table_.label(x); }

  Element plus(Element x) const { return plus_(x); }
  std::optional<Element> compose(Element a, Element b) const { return table_.compose(a, b); }
  bool defined(Element a, Element b) const { return table_.defined(a, b); }

  /// S^+, ascending.
  const std::vector<Element>& projections() const noexcept { return projections_; }
  bool is_projection(Element e) const { return plus_(e) == e; }

  const OrderRelation& order() const noexcept { return order_; }
  bool leq(Element a, Element b) const { return order_.leq(a, b); }

  RawSemigroupoid raw() const { return {table_, plus_}; }

  friend bool operator==(const LeftRestrictionSemigroupoid& a, const LeftRestrictionSemigroupoid& b) {
    return a.table_ == b.table_ && same_plus(a.table_, a.plus_, b.table_, b.plus_);
  }

 private:
  LeftRestrictionSemigroupoid(PartialTable table, RestrictionStructure plus)
      : table_(std::move(table)),
        plus_(std::move(plus)),
        projections_(plus_.image()),
        order_(natural_order_relation(table_, plus_)) {
    if (!order_.is_partial_order()) throw InvalidOrder("natural order is not a partial order");
  }

  PartialTable table_;
  RestrictionStructure plus_;
  std::vector<Element> projections_;
  OrderRelation order_;
};

inline const OrderRelation& natural_order(const LeftRestrictionSemigroupoid& s) { return s.order(); }

}  // namespace constella

#endif  // CONSTELLA_SEMIGROUPOID_HPP
