#ifndef CONSTELLA_CONSTELLATION_HPP
#define CONSTELLA_CONSTELLATION_HPP

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "report.hpp"
#include "semigroupoid.hpp"
#include "table.hpp"

namespace constella {

/// A partial composition, a plus map and an explicit order relation.
/// Validity is not implied by the type; see check_constellation and
/// check_locally_inductive.
struct OrderedConstellation {
  PartialTable table;
  RestrictionStructure plus;
  OrderRelation order;

  std::size_t size() const noexcept { return table.size(); }
  const std::string& label(Element x) const { return table.label(x); }

  friend bool operator==(const OrderedConstellation& a, const OrderedConstellation& b) {
    return a.table == b.table && same_plus(a.table, a.plus, b.table, b.plus) &&
           same_order(a.table, a.order, b.table, b.order);
  }
};

/// A restriction or corestriction was requested outside its domain.
class NotApplicable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A restriction scan found zero or several candidates.
class NonUnique : public std::runtime_error {
 public:
  NonUnique(const std::string& what, std::vector<Element> candidates)
      : std::runtime_error(what), candidates_(std::move(candidates)) {}
  const std::vector<Element>& candidates() const noexcept { return candidates_; }

 private:
  std::vector<Element> candidates_;
};

/// Outcome of x|e: a maximum, an empty candidate set, or a nonempty set
/// without a maximum (the candidates are kept as the witness).
class CorestrictionResult {
 public:
  enum class Kind { value, empty, no_maximum };

  static CorestrictionResult of(Element v) { return CorestrictionResult(Kind::value, v, {}); }
  static CorestrictionResult none() { return CorestrictionResult(Kind::empty, 0, {}); }
  static CorestrictionResult without_maximum(std::vector<Element> candidates) {
    return CorestrictionResult(Kind::no_maximum, 0, std::move(candidates));
  }

  Kind kind() const noexcept { return kind_; }
  bool has_value() const noexcept { return kind_ == Kind::value; }
  bool is_empty() const noexcept { return kind_ == Kind::empty; }
  /// The candidate set is nonempty (maximum or not).
  bool nonempty() const noexcept { return kind_ != Kind::empty; }

  Element value() const {
    if (kind_ != Kind::value) throw std::logic_error("corestriction has no value");
    return value_;
  }
  std::optional<Element> get() const {
    if (kind_ != Kind::value) return std::nullopt;
    return value_;
  }
  const std::vector<Element>& candidates() const noexcept { return candidates_; }

  friend bool operator==(const CorestrictionResult&, const CorestrictionResult&) = default;

 private:
  CorestrictionResult(Kind k, Element v, std::vector<Element> c) : kind_(k), value_(v), candidates_(std::move(c)) {}

  Kind kind_;
  Element value_;
  std::vector<Element> candidates_;
};

namespace detail {

/// Maximum of { y <= x : ye defined } by direct scan.
inline CorestrictionResult scan_corestriction(const OrderedConstellation& t, Element x, Element e) {
  std::vector<Element> cand;
  for (Element y = 0; y < t.size(); ++y)
    if (t.order.leq(y, x) && t.table.defined(y, e)) cand.push_back(y);
  if (cand.empty()) return CorestrictionResult::none();
  std::vector<Element> maxima;
  for (Element m : cand)
    if (std::all_of(cand.begin(), cand.end(), [&](Element y) { return t.order.leq(y, m); })) maxima.push_back(m);
  if (maxima.size() == 1) return CorestrictionResult::of(maxima.front());
  return CorestrictionResult::without_maximum(std::move(cand));
}

/// { y <= x : y^+ = e }.
inline std::vector<Element> restriction_candidates(const OrderedConstellation& t, Element e, Element x) {
  std::vector<Element> out;
  for (Element y = 0; y < t.size(); ++y)
    if (t.order.leq(y, x) && t.plus(y) == e) out.push_back(y);
  return out;
}

/// Component ids over the carrier for the zig-zag equivalence generated by
/// `order` restricted to `members`; non-members get id == size.
inline std::vector<std::size_t> component_ids(const OrderRelation& order, const std::vector<Element>& members,
                                              std::size_t n) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (Element a : members)
    for (Element b : members)
      if (order.leq(a, b) || order.leq(b, a)) parent[find(a)] = find(b);
  std::vector<std::size_t> id(n, n);
  for (Element a : members) id[a] = find(a);
  return id;
}

}  // namespace detail

/// Precomputed corestrictions, projections and components of a constellation.
/// Holds its own copy of the structure.
class ConstellationIndex {
 public:
  explicit ConstellationIndex(OrderedConstellation t) : t_(std::move(t)) {
    const std::size_t n = t_.size();
    if (!t_.plus.fits(t_.table) || t_.order.size() != n) throw std::invalid_argument("malformed constellation");
    projections_ = t_.plus.image();
    is_projection_.assign(n, false);
    for (Element e : projections_) is_projection_[e] = true;
    cores_.assign(n * n, CorestrictionResult::none());
    for (Element x = 0; x < n; ++x)
      for (Element e : projections_) cores_[x * n + e] = detail::scan_corestriction(t_, x, e);
    component_ = detail::component_ids(t_.order, projections_, n);
  }

  const OrderedConstellation& structure() const noexcept { return t_; }
  std::size_t size() const noexcept { return t_.size(); }
  const std::vector<Element>& projections() const noexcept { return projections_; }
  bool is_projection(Element e) const { return is_projection_.at(e); }
  Element plus(Element x) const { return t_.plus(x); }
  bool leq(Element a, Element b) const { return t_.order.leq(a, b); }
  std::optional<Element> compose(Element a, Element b) const { return t_.table.compose(a, b); }

  const CorestrictionResult& corestriction(Element x, Element e) const {
    if (!is_projection(e)) throw NotApplicable("corestriction target '" + t_.label(e) + "' is not a projection");
    return cores_[x * size() + e];
  }

  Element restriction(Element e, Element x) const {
    if (!is_projection(e)) throw NotApplicable("restriction source '" + t_.label(e) + "' is not a projection");
    if (!leq(e, plus(x))) throw NotApplicable("'" + t_.label(e) + "' is not below " + t_.label(x) + "^+");
    auto cand = detail::restriction_candidates(t_, e, x);
    if (cand.size() != 1) throw NonUnique("restriction is not unique", std::move(cand));
    return cand.front();
  }

  bool same_component(Element e, Element f) const {
    return is_projection(e) && is_projection(f) && component_[e] == component_[f];
  }

  /// e ∧ f inside a component; nullopt across components.
  std::optional<Element> meet(Element e, Element f) const {
    if (!is_projection(e) || !is_projection(f)) throw NotApplicable("meet arguments must be projections");
    if (!same_component(e, f)) return std::nullopt;
    return corestriction(e, f).get();
  }

  /// x ⊗ y = (x|y^+) y, defined when x|y^+ exists and the product does.
  std::optional<Element> pseudo_product(Element x, Element y) const {
    const auto c = cores_[x * size() + plus(y)].get();
    if (!c) return std::nullopt;
    return compose(*c, y);
  }

  std::vector<std::vector<Element>> components() const {
    std::vector<std::vector<Element>> out;
    std::vector<std::size_t> seen;
    for (Element e : projections_) {
      auto it = std::find(seen.begin(), seen.end(), component_[e]);
      if (it == seen.end()) {
        seen.push_back(component_[e]);
        out.push_back({e});
      } else {
        out[static_cast<std::size_t>(it - seen.begin())].push_back(e);
      }
    }
    return out;
  }

 private:
  OrderedConstellation t_;
  std::vector<Element> projections_;
  std::vector<bool> is_projection_;
  std::vector<CorestrictionResult> cores_;
  std::vector<std::size_t> component_;
};

/// c1-c4. Never throws on malformed input; a bad plus map is reported as "plus".
inline ValidationReport check_constellation(const OrderedConstellation& t,
                                            std::size_t limit = ValidationReport::unlimited) {
  ValidationReport report(limit);
  const PartialTable& tb = t.table;
  if (!t.plus.fits(tb)) {
    report.add("plus", {}, "plus map is not a total map on the carrier");
    return report;
  }
  const std::size_t n = tb.size();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      const auto xy = tb.compose(x, y);
      for (Element z = 0; z < n; ++z) {
        const auto yz = tb.compose(y, z);
        const bool lhs = xy && yz;
        const bool rhs = yz && tb.defined(x, *yz);
        if (lhs != rhs) report.add("c1", detail::names(tb, {x, y, z}));
        if (lhs) {
          const auto xy_z = tb.compose(*xy, z);
          const auto x_yz = tb.compose(x, *yz);
          if (!xy_z || !x_yz || *xy_z != *x_yz) report.add("c2", detail::names(tb, {x, y, z}));
        }
        if (report.saturated()) return report;
      }
    }
  for (Element e : t.plus.image())
    for (Element x = 0; x < n; ++x) {
      const auto ex = tb.compose(e, x);
      if ((ex && *ex == x) != (e == t.plus(x))) report.add("c3", detail::names(tb, {e, x}));
      const auto xe = tb.compose(x, e);
      if (xe && *xe != x) report.add("c4", detail::names(tb, {x, e}));
      if (report.saturated()) return report;
    }
  return report;
}

/// "po" plus wo1-wo9. Across components of T^+ the corestriction e|f must be
/// empty; inside a component it must be the meet.
inline ValidationReport check_locally_inductive(const OrderedConstellation& t,
                                                std::size_t limit = ValidationReport::unlimited) {
  ValidationReport report(limit);
  const PartialTable& tb = t.table;
  const std::size_t n = tb.size();
  if (!t.plus.fits(tb) || t.order.size() != n) {
    report.add("plus", {}, "plus map or order does not match the carrier");
    return report;
  }
  if (!t.order.is_partial_order()) report.add("po", {}, "order is not a partial order");
  const ConstellationIndex ix(t);
  const auto& leq = t.order;
  auto nm = [&](std::initializer_list<Element> xs) { return detail::names(tb, xs); };

  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (!leq.leq(x, y)) continue;
      if (!leq.leq(t.plus(x), t.plus(y))) report.add("wo2", nm({x, y}));
      for (Element x2 = 0; x2 < n; ++x2)
        for (Element y2 = 0; y2 < n; ++y2) {
          if (!leq.leq(x2, y2)) continue;
          const auto a = tb.compose(x, x2);
          const auto b = tb.compose(y, y2);
          if (a && b && !leq.leq(*a, *b)) report.add("wo1", nm({x, y, x2, y2}));
        }
      if (report.saturated()) return report;
    }

  const auto& proj = ix.projections();
  for (Element e : proj)
    for (Element x = 0; x < n; ++x) {
      if (leq.leq(e, t.plus(x)) && detail::restriction_candidates(t, e, x).size() != 1) report.add("wo3", nm({e, x}));
      if (ix.corestriction(x, e).kind() == CorestrictionResult::Kind::no_maximum) report.add("wo4", nm({x, e}));
    }

  for (Element e : proj)
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y) {
        const auto xy = tb.compose(x, y);
        if (!xy) continue;
        const auto& xy_e = ix.corestriction(*xy, e);
        if (xy_e.nonempty() != ix.corestriction(y, e).nonempty()) report.add("wo5", nm({e, x, y}));
        if (xy_e.has_value()) {
          const auto y_e = ix.corestriction(y, e).get();
          const auto inner = y_e ? ix.corestriction(x, t.plus(*y_e)).get() : std::nullopt;
          if (!inner || t.plus(xy_e.value()) != t.plus(*inner)) report.add("wo7", nm({e, x, y}));
        }
        if (report.saturated()) return report;
      }

  for (Element e : proj)
    for (Element f : proj) {
      if (leq.leq(f, e)) {
        for (Element x = 0; x < n; ++x)
          if (ix.corestriction(x, e).nonempty() != ix.corestriction(x, f).nonempty()) report.add("wo6", nm({e, f, x}));
      }
      if (leq.leq(e, f)) {
        const auto cand = detail::restriction_candidates(t, e, f);
        const auto co = ix.corestriction(e, f).get();
        if (cand.size() != 1 || !co || *co != cand.front()) report.add("wo8", nm({e, f}));
      }
      const auto ef = ix.corestriction(e, f);
      if (!ix.same_component(e, f)) {
        if (ef.nonempty()) report.add("wo9", nm({e, f}), "corestriction across components");
        continue;
      }
      bool is_meet = ef.has_value() && ix.is_projection(ef.value()) && leq.leq(ef.value(), e) && leq.leq(ef.value(), f);
      if (is_meet) {
        for (Element z : proj)
          if (leq.leq(z, e) && leq.leq(z, f) && !leq.leq(z, ef.value())) is_meet = false;
      }
      if (!is_meet) report.add("wo9", nm({e, f}), "corestriction is not the meet");
      if (report.saturated()) return report;
    }
  return report;
}

inline ValidationReport check_li_constellation(const OrderedConstellation& t,
                                               std::size_t limit = ValidationReport::unlimited) {
  ValidationReport report = check_constellation(t, limit);
  if (report.names("plus")) return report;
  ValidationReport li(limit == ValidationReport::unlimited ? limit : limit - std::min(limit, report.violations().size()));
  if (!li.saturated()) report.merge(check_locally_inductive(t, li.limit()));
  return report;
}

inline Element restriction(const OrderedConstellation& t, Element e, Element x) {
  if (!t.plus.in_image(e)) throw NotApplicable("restriction source '" + t.label(e) + "' is not a projection");
  if (!t.order.leq(e, t.plus(x))) throw NotApplicable("'" + t.label(e) + "' is not below " + t.label(x) + "^+");
  auto cand = detail::restriction_candidates(t, e, x);
  if (cand.size() != 1) throw NonUnique("restriction is not unique", std::move(cand));
  return cand.front();
}

inline CorestrictionResult corestriction(const OrderedConstellation& t, Element x, Element e) {
  if (!t.plus.in_image(e)) throw NotApplicable("corestriction target '" + t.label(e) + "' is not a projection");
  return detail::scan_corestriction(t, x, e);
}

/// Partition of T^+ under zig-zag connectivity, each block ascending,
/// blocks ordered by their least element.
inline std::vector<std::vector<Element>> plus_components(const OrderedConstellation& t) {
  const auto proj = t.plus.image();
  const auto id = detail::component_ids(t.order, proj, t.size());
  std::vector<std::vector<Element>> out;
  std::vector<std::size_t> seen;
  for (Element e : proj) {
    auto it = std::find(seen.begin(), seen.end(), id[e]);
    if (it == seen.end()) {
      seen.push_back(id[e]);
      out.push_back({e});
    } else {
      out[static_cast<std::size_t>(it - seen.begin())].push_back(e);
    }
  }
  return out;
}

inline std::optional<Element> meet(const OrderedConstellation& t, Element e, Element f) {
  if (!t.plus.in_image(e) || !t.plus.in_image(f)) throw NotApplicable("meet arguments must be projections");
  const auto id = detail::component_ids(t.order, t.plus.image(), t.size());
  if (id[e] != id[f]) return std::nullopt;
  return detail::scan_corestriction(t, e, f).get();
}

}  // namespace constella

#endif  // CONSTELLA_CONSTELLATION_HPP
