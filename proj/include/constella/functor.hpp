#ifndef CONSTELLA_FUNCTOR_HPP
#define CONSTELLA_FUNCTOR_HPP

#include <string>
#include <utility>

#include "constellation.hpp"
#include "report.hpp"
#include "semigroupoid.hpp"

namespace constella {

/// C(S): s•t = st on pairs with st^+ = s; same plus; natural order.
inline OrderedConstellation build_C(const LeftRestrictionSemigroupoid& s) {
  PartialTable table(s.table().labels());
  for (Element a = 0; a < s.size(); ++a)
    for (Element b = 0; b < s.size(); ++b) {
      const auto ab_plus = s.compose(a, s.plus(b));
      if (!ab_plus || *ab_plus != a) continue;
      if (const auto ab = s.compose(a, b)) table.set(a, b, *ab);
    }
  return {std::move(table), s.restriction(), s.order()};
}

/// G(T): x⊗y = (x|y^+)y on pairs where x|y^+ exists. Throws InvalidStructure
/// if the result is not a left restriction semigroupoid.
inline LeftRestrictionSemigroupoid build_G(const ConstellationIndex& ix) {
  const auto& t = ix.structure();
  PartialTable table(t.table.labels());
  for (Element x = 0; x < t.size(); ++x)
    for (Element y = 0; y < t.size(); ++y)
      if (const auto p = ix.pseudo_product(x, y)) table.set(x, y, *p);
  return LeftRestrictionSemigroupoid::make(std::move(table), t.plus);
}

inline LeftRestrictionSemigroupoid build_G(const OrderedConstellation& t) { return build_G(ConstellationIndex(t)); }

namespace detail {

inline void diff_tables(const PartialTable& a, const PartialTable& b, ValidationReport& out) {
  const auto to_b = label_correspondence(a, b);
  if (!to_b) {
    out.add("roundtrip", {}, "carrier labels differ");
    return;
  }
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y) {
      const auto p = a.compose(x, y);
      const auto q = b.compose((*to_b)[x], (*to_b)[y]);
      if (p.has_value() != q.has_value())
        out.add("roundtrip", {a.label(x), a.label(y)}, "definedness differs");
      else if (p && (*to_b)[*p] != *q)
        out.add("roundtrip", {a.label(x), a.label(y)}, "product differs");
    }
}

}  // namespace detail

/// Literal comparison of G(C(S)) with S; each difference is a "roundtrip"
/// violation naming the offending pair or element.
inline ValidationReport roundtrip_check(const LeftRestrictionSemigroupoid& s) {
  ValidationReport report;
  const auto back = build_G(build_C(s));
  detail::diff_tables(s.table(), back.table(), report);
  if (report.valid() && !same_plus(s.table(), s.restriction(), back.table(), back.restriction()))
    report.add("roundtrip", {}, "plus differs");
  return report;
}

/// Literal comparison of C(G(T)) with T, including the order.
inline ValidationReport roundtrip_check(const OrderedConstellation& t) {
  ValidationReport report;
  const auto back = build_C(build_G(t));
  detail::diff_tables(t.table, back.table, report);
  if (!report.valid()) return report;
  if (!same_plus(t.table, t.plus, back.table, back.plus)) report.add("roundtrip", {}, "plus differs");
  const auto to_b = *label_correspondence(t.table, back.table);
  for (Element x = 0; x < t.size(); ++x)
    for (Element y = 0; y < t.size(); ++y)
      if (t.order.leq(x, y) != back.order.leq(to_b[x], to_b[y]))
        report.add("roundtrip", {t.label(x), t.label(y)}, "order differs");
  return report;
}

}  // namespace constella

#endif  // CONSTELLA_FUNCTOR_HPP
