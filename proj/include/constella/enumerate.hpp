#ifndef CONSTELLA_ENUMERATE_HPP
#define CONSTELLA_ENUMERATE_HPP

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "config.hpp"
#include "constellation.hpp"
#include "report.hpp"
#include "semigroupoid.hpp"

namespace constella {

namespace detail {

/// Cells are row-major; a cell is known once its index is below `known`.
/// Value n encodes "undefined".
struct CellView {
  const std::vector<std::size_t>& cells;
  std::size_t n;
  std::size_t known;

  bool is_known(std::size_t a, std::size_t b) const { return a * n + b < known; }
  std::optional<std::size_t> at(std::size_t a, std::size_t b) const {
    const auto v = cells[a * n + b];
    if (v == n) return std::nullopt;
    return v;
  }
};

/// False only if the triple certainly violates partial associativity.
inline bool semigroupoid_triple_ok(const CellView& v, std::size_t s, std::size_t t, std::size_t r) {
  if (!v.is_known(s, t) || !v.is_known(t, r)) return true;
  const auto st = v.at(s, t);
  const auto tr = v.at(t, r);
  if (st && !v.is_known(*st, r)) return true;
  if (tr && !v.is_known(s, *tr)) return true;
  const auto st_r = st ? v.at(*st, r) : std::nullopt;
  const auto s_tr = tr ? v.at(s, *tr) : std::nullopt;
  const bool guard = (st && tr) || (st && st_r) || (tr && s_tr);
  return !guard || (st && tr && st_r && s_tr && *st_r == *s_tr);
}

/// False only if the triple certainly violates c1 or c2.
inline bool constellation_triple_ok(const CellView& v, std::size_t x, std::size_t y, std::size_t z) {
  if (!v.is_known(x, y) || !v.is_known(y, z)) return true;
  const auto xy = v.at(x, y);
  const auto yz = v.at(y, z);
  if (yz && !v.is_known(x, *yz)) return true;
  const bool lhs = xy && yz;
  const bool rhs = yz && v.at(x, *yz);
  if (lhs != rhs) return false;
  if (!lhs) return true;
  if (!v.is_known(*xy, z)) return true;
  const auto xy_z = v.at(*xy, z);
  return xy_z && *xy_z == *v.at(x, *yz);
}

template <class TripleOk, class F>
void backtrack_tables(std::size_t n, TripleOk&& ok, F&& emit) {
  std::vector<std::size_t> cells(n * n, n);
  const std::size_t total = n * n;
  auto consistent = [&](std::size_t known) {
    const CellView v{cells, n, known};
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (!ok(v, a, b, c)) return false;
    return true;
  };
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == total) {
      PartialTable t = PartialTable::numbered(n);
      for (std::size_t i = 0; i < total; ++i)
        if (cells[i] != n) t.set(i / n, i % n, cells[i]);
      emit(t);
      return;
    }
    // undefined first, then values ascending
    for (std::size_t v = 0; v <= n; ++v) {
      cells[k] = (v == 0) ? n : v - 1;
      if (consistent(k + 1)) self(self, k + 1);
    }
    cells[k] = n;
  };
  rec(rec, 0);
}

inline void require_size(std::size_t n, std::size_t cap) {
  if (n == 0) throw std::invalid_argument("carrier size must be positive");
  if (n > cap) throw CapExceeded("enumeration size " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
}

/// Calls f for every map {0..n-1} -> {0..n-1}, lexicographic.
template <class F>
void for_each_endomap(std::size_t n, F&& f) {
  std::vector<Element> m(n, 0);
  while (true) {
    f(static_cast<const std::vector<Element>&>(m));
    std::size_t i = n;
    while (true) {
      if (i == 0) return;
      --i;
      if (++m[i] < n) break;
      m[i] = 0;
    }
  }
}

}  // namespace detail

/// Every partially associative table on {0..n-1}, in deterministic order.
template <class F>
void for_each_semigroupoid_table(std::size_t n, F&& f, std::size_t cap = caps_from_env().enumeration_size) {
  detail::require_size(n, cap);
  detail::backtrack_tables(n, detail::semigroupoid_triple_ok, f);
}

inline std::vector<PartialTable> enumerate_semigroupoid_tables(std::size_t n,
                                                               std::size_t cap = caps_from_env().enumeration_size) {
  std::vector<PartialTable> out;
  for_each_semigroupoid_table(n, [&](const PartialTable& t) { out.push_back(t); }, cap);
  return out;
}

/// Every left restriction semigroupoid on {0..n-1}: tables first, then plus
/// maps in lexicographic order.
inline std::vector<LeftRestrictionSemigroupoid> enumerate_lr_semigroupoids(
    std::size_t n, std::size_t cap = caps_from_env().enumeration_size) {
  std::vector<LeftRestrictionSemigroupoid> out;
  for_each_semigroupoid_table(
      n,
      [&](const PartialTable& t) {
        // lr1 needs s^+ s defined; skip tables with an element nobody acts on.
        for (Element s = 0; s < n; ++s) {
          bool acted = false;
          for (Element e = 0; e < n; ++e) acted = acted || t.compose(e, s) == s;
          if (!acted) return;
        }
        detail::for_each_endomap(n, [&](const std::vector<Element>& p) {
          const RestrictionStructure plus(p);
          if (check_left_restriction(t, plus, 1).valid()) out.push_back(LeftRestrictionSemigroupoid::make(t, plus));
        });
      },
      cap);
  return out;
}

/// All partial orders on {0..n-1}, by bitmask of strict pairs.
inline std::vector<OrderRelation> partial_orders(std::size_t n) {
  std::vector<std::pair<Element, Element>> offdiag;
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (a != b) offdiag.emplace_back(a, b);
  std::vector<OrderRelation> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << offdiag.size()); ++mask) {
    auto r = OrderRelation::identity(n);
    for (std::size_t i = 0; i < offdiag.size(); ++i)
      if (mask >> i & 1U) r.set(offdiag[i].first, offdiag[i].second);
    if (r.is_antisymmetric() && r.is_transitive()) out.push_back(std::move(r));
  }
  return out;
}

/// Every li-constellation on {0..n-1}: tables satisfying c1/c2, then plus
/// maps satisfying c3/c4, then partial orders satisfying wo1-wo9.
inline std::vector<OrderedConstellation> enumerate_li_constellations(
    std::size_t n, std::size_t cap = caps_from_env().enumeration_size) {
  detail::require_size(n, cap);
  const auto orders = partial_orders(n);
  std::vector<OrderedConstellation> out;
  detail::backtrack_tables(n, detail::constellation_triple_ok, [&](const PartialTable& t) {
    detail::for_each_endomap(n, [&](const std::vector<Element>& p) {
      OrderedConstellation c{t, RestrictionStructure(p), OrderRelation::identity(n)};
      if (!check_constellation(c, 1).valid()) return;
      for (const auto& o : orders) {
        c.order = o;
        if (check_locally_inductive(c, 1).valid()) out.push_back(c);
      }
    });
  });
  return out;
}

namespace detail {

inline std::vector<std::size_t> encode(const PartialTable& t, const RestrictionStructure* plus, const OrderRelation* order,
                                       const std::vector<Element>& perm) {
  // perm maps old -> new; encode the relabelled structure in new-index order.
  const std::size_t n = t.size();
  std::vector<Element> inv(n);
  for (Element x = 0; x < n; ++x) inv[perm[x]] = x;
  std::vector<std::size_t> code;
  code.reserve(n * n * 2 + n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      const auto c = t.compose(inv[a], inv[b]);
      code.push_back(c ? perm[*c] : n);
    }
  if (plus)
    for (Element a = 0; a < n; ++a) code.push_back(perm[(*plus)(inv[a])]);
  if (order)
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b) code.push_back(order->leq(inv[a], inv[b]));
  return code;
}

inline std::vector<std::size_t> canonical_code(const PartialTable& t, const RestrictionStructure* plus,
                                               const OrderRelation* order) {
  if (t.size() > 8) throw CapExceeded("isomorphism search is limited to 8 elements");
  std::vector<Element> perm(t.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::size_t> best;
  do {
    auto code = encode(t, plus, order, perm);
    if (best.empty() || code < best) best = std::move(code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// Backtracking search for perm with b = perm(a), respecting every component.
inline std::optional<std::vector<Element>> find_isomorphism(const PartialTable& ta, const RestrictionStructure* pa,
                                                            const OrderRelation* oa, const PartialTable& tb,
                                                            const RestrictionStructure* pb, const OrderRelation* ob) {
  const std::size_t n = ta.size();
  if (n != tb.size()) return std::nullopt;
  if (n > 8) throw CapExceeded("isomorphism search is limited to 8 elements");
  if (ta.defined_count() != tb.defined_count()) return std::nullopt;
  std::vector<Element> perm(n, n);
  std::vector<bool> used(n, false);
  auto consistent = [&](Element k) {
    // every fact among elements 0..k must transfer
    for (Element a = 0; a <= k; ++a)
      for (Element b = 0; b <= k; ++b) {
        const auto c = ta.compose(a, b);
        const auto d = tb.compose(perm[a], perm[b]);
        if (c.has_value() != d.has_value()) return false;
        if (c && perm[*c] != n && perm[*c] != *d) return false;
        if (oa && oa->leq(a, b) != ob->leq(perm[a], perm[b])) return false;
      }
    for (Element a = 0; a <= k; ++a)
      if (pa && perm[(*pa)(a)] != n && perm[(*pa)(a)] != (*pb)(perm[a])) return false;
    return true;
  };
  auto rec = [&](auto&& self, Element k) -> bool {
    if (k == n) {
      // products landing on late-assigned elements are verified now
      for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
          if (const auto c = ta.compose(a, b); c && perm[*c] != *tb.compose(perm[a], perm[b])) return false;
      if (pa)
        for (Element a = 0; a < n; ++a)
          if (perm[(*pa)(a)] != (*pb)(perm[a])) return false;
      return true;
    }
    for (Element img = 0; img < n; ++img) {
      if (used[img]) continue;
      perm[k] = img;
      used[img] = true;
      if (consistent(k) && self(self, k + 1)) return true;
      used[img] = false;
      perm[k] = n;
    }
    return false;
  };
  if (rec(rec, 0)) return perm;
  return std::nullopt;
}

}  // namespace detail

/// A permutation p with b(p(x), p(y)) = p(a(x, y)), p(x^+) = p(x)^+, or nullopt.
inline std::optional<std::vector<Element>> are_isomorphic(const RawSemigroupoid& a, const RawSemigroupoid& b) {
  return detail::find_isomorphism(a.table, &a.plus, nullptr, b.table, &b.plus, nullptr);
}

inline std::optional<std::vector<Element>> are_isomorphic(const OrderedConstellation& a, const OrderedConstellation& b) {
  return detail::find_isomorphism(a.table, &a.plus, &a.order, b.table, &b.plus, &b.order);
}

inline std::vector<std::size_t> canonical_form(const RawSemigroupoid& s) {
  return detail::canonical_code(s.table, &s.plus, nullptr);
}
inline std::vector<std::size_t> canonical_form(const OrderedConstellation& t) {
  return detail::canonical_code(t.table, &t.plus, &t.order);
}
inline std::vector<std::size_t> canonical_form(const PartialTable& t) { return detail::canonical_code(t, nullptr, nullptr); }

/// Keeps the first representative of each isomorphism class, preserving order.
template <class S, class Key>
std::vector<S> up_to_isomorphism(const std::vector<S>& all, Key&& key) {
  std::set<std::vector<std::size_t>> seen;
  std::vector<S> out;
  for (const auto& s : all)
    if (seen.insert(key(s)).second) out.push_back(s);
  return out;
}

}  // namespace constella

#endif  // CONSTELLA_ENUMERATE_HPP
