#ifndef CONSTELLA_SZENDREI_HPP
#define CONSTELLA_SZENDREI_HPP

#include <algorithm>
#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "constellation.hpp"
#include "functor.hpp"
#include "morphism.hpp"
#include "semigroupoid.hpp"

namespace constella {

/// (A, a): A a set of elements sharing one plus value e, with e ∈ A and a ∈ A.
/// `subset` is sorted ascending.
struct SzendreiElement {
  std::vector<Element> subset;
  Element anchor = 0;

  friend auto operator<=>(const SzendreiElement&, const SzendreiElement&) = default;
  friend bool operator==(const SzendreiElement&, const SzendreiElement&) = default;
};

/// The carrier of Sz over a (table, plus) pair in canonical order: by plus
/// class, then by subset bitmask over the class members, then by anchor.
class SzendreiCarrier {
 public:
  static constexpr std::size_t max_class_size = 20;

  SzendreiCarrier(const PartialTable& t, const RestrictionStructure& plus) {
    bool plain_labels = true;
    for (const auto& l : t.labels()) plain_labels = plain_labels && l.find('_') == std::string::npos;
    for (Element e : plus.image()) {
      std::vector<Element> members{e};
      for (Element a = 0; a < t.size(); ++a)
        if (a != e && plus(a) == e) members.push_back(a);
      std::sort(members.begin(), members.end());
      if (members.size() > max_class_size) throw CapExceeded("plus class too large to expand");
      const auto e_pos = static_cast<std::size_t>(std::find(members.begin(), members.end(), e) - members.begin());
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << members.size()); ++mask) {
        if (!(mask >> e_pos & 1U)) continue;
        std::vector<Element> subset;
        for (std::size_t i = 0; i < members.size(); ++i)
          if (mask >> i & 1U) subset.push_back(members[i]);
        for (Element a : subset) add({subset, a});
      }
    }
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      if (!plain_labels) {
        labels_.push_back("sz" + std::to_string(i));
        continue;
      }
      // member labels sorted as strings so the label does not depend on carrier order
      std::vector<std::string> names;
      for (Element a : elements_[i].subset) names.push_back(t.label(a));
      std::sort(names.begin(), names.end());
      std::string label;
      for (const auto& n : names) label += (label.empty() ? "" : "_") + n;
      labels_.push_back(label + "__" + t.label(elements_[i].anchor));
    }
  }

  std::size_t size() const noexcept { return elements_.size(); }
  const SzendreiElement& operator[](Element i) const { return elements_.at(i); }
  const std::vector<SzendreiElement>& elements() const noexcept { return elements_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  std::optional<Element> find(const SzendreiElement& el) const {
    auto it = index_.find(el);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  Element index_of(const SzendreiElement& el) const {
    auto i = find(el);
    if (!i) throw std::out_of_range("not an element of the expansion");
    return *i;
  }

 private:
  void add(SzendreiElement el) {
    index_.emplace(el, elements_.size());
    elements_.push_back(std::move(el));
  }

  std::vector<SzendreiElement> elements_;
  std::vector<std::string> labels_;
  std::map<SzendreiElement, Element> index_;
};

/// An expansion keeps the structure it came from, the expanded structure and
/// the map between element indices and (A, a) pairs.
template <class S>
struct Expansion {
  std::shared_ptr<const S> base;
  std::shared_ptr<const S> expanded;
  SzendreiCarrier carrier;

  const S& structure() const noexcept { return *expanded; }
  std::size_t size() const noexcept { return carrier.size(); }
};

using SemigroupoidExpansion = Expansion<LeftRestrictionSemigroupoid>;
using ConstellationExpansion = Expansion<OrderedConstellation>;

namespace detail {

inline std::vector<Element> sorted_union(std::vector<Element> a, const std::vector<Element>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

/// { x b : b ∈ B }, or nullopt if some product is undefined.
inline std::optional<std::vector<Element>> left_multiply(const PartialTable& t, Element x, const std::vector<Element>& b) {
  std::vector<Element> out;
  for (Element y : b) {
    const auto p = t.compose(x, y);
    if (!p) return std::nullopt;
    out.push_back(*p);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline bool is_subset(const std::vector<Element>& small, const std::vector<Element>& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace detail

/// Sz(S): (A,a)(B,b) = ((ab)^+A ∪ aB, ab) when ab is defined; (A,a)^+ = (A,a^+).
inline SemigroupoidExpansion expand_semigroupoid(std::shared_ptr<const LeftRestrictionSemigroupoid> s) {
  SzendreiCarrier carrier(s->table(), s->restriction());
  PartialTable table(carrier.labels());
  std::vector<Element> plus(carrier.size());
  for (Element i = 0; i < carrier.size(); ++i) {
    const auto& [A, a] = carrier[i];
    plus[i] = carrier.index_of({A, s->plus(a)});
    for (Element j = 0; j < carrier.size(); ++j) {
      const auto& [B, b] = carrier[j];
      const auto ab = s->compose(a, b);
      if (!ab) continue;
      const auto left = detail::left_multiply(s->table(), s->plus(*ab), A);
      const auto right = detail::left_multiply(s->table(), a, B);
      if (!left || !right) throw std::logic_error("expansion product leaves the base structure");
      table.set(i, j, carrier.index_of({detail::sorted_union(*left, *right), *ab}));
    }
  }
  auto expanded = std::make_shared<const LeftRestrictionSemigroupoid>(
      LeftRestrictionSemigroupoid::make(std::move(table), RestrictionStructure(std::move(plus))));
  return {std::move(s), std::move(expanded), std::move(carrier)};
}

inline SemigroupoidExpansion expand_semigroupoid(const LeftRestrictionSemigroupoid& s) {
  return expand_semigroupoid(std::make_shared<const LeftRestrictionSemigroupoid>(s));
}

/// Sz(T): (A,a)(B,b) = (A, ab) when ab is defined and aB ⊆ A;
/// (A,a) <= (B,b) iff a <= b and a^+B ⊆ A (all products defined).
inline ConstellationExpansion expand_constellation(std::shared_ptr<const OrderedConstellation> t) {
  SzendreiCarrier carrier(t->table, t->plus);
  const std::size_t n = carrier.size();
  PartialTable table(carrier.labels());
  std::vector<Element> plus(n);
  OrderRelation order(n);
  for (Element i = 0; i < n; ++i) {
    const auto& [A, a] = carrier[i];
    plus[i] = carrier.index_of({A, t->plus(a)});
    for (Element j = 0; j < n; ++j) {
      const auto& [B, b] = carrier[j];
      if (const auto ab = t->table.compose(a, b)) {
        const auto aB = detail::left_multiply(t->table, a, B);
        if (aB && detail::is_subset(*aB, A)) table.set(i, j, carrier.index_of({A, *ab}));
      }
      if (t->order.leq(a, b)) {
        const auto pB = detail::left_multiply(t->table, t->plus(a), B);
        if (pB && detail::is_subset(*pB, A)) order.set(i, j);
      }
    }
  }
  auto expanded = std::make_shared<const OrderedConstellation>(
      OrderedConstellation{std::move(table), RestrictionStructure(std::move(plus)), std::move(order)});
  return {std::move(t), std::move(expanded), std::move(carrier)};
}

inline ConstellationExpansion expand_constellation(const OrderedConstellation& t) {
  return expand_constellation(std::make_shared<const OrderedConstellation>(t));
}

/// ι(x) = ({x^+, x}, x) into the expansion.
template <class S>
Morphism<S> iota(const Expansion<S>& sz) {
  const auto& base = *sz.base;
  std::vector<Element> map(base.size());
  for (Element x = 0; x < map.size(); ++x) {
    const Element p = base.plus(x);
    std::vector<Element> subset{std::min(p, x), std::max(p, x)};
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    map[x] = sz.carrier.index_of({subset, x});
  }
  return Morphism<S>(sz.base, sz.expanded, std::move(map));
}

/// Expression over generators ι(x) closed under +, corestriction and composition.
struct Term {
  enum class Op { iota, plus, corestrict, compose };
  Op op = Op::iota;
  Element generator = 0;
  std::vector<Term> args;

  static Term gen(Element x) { return {Op::iota, x, {}}; }
  static Term plus_of(Term t) { return {Op::plus, 0, {std::move(t)}}; }
  static Term corestrict(Term l, Term r) { return {Op::corestrict, 0, {std::move(l), std::move(r)}}; }
  static Term compose(Term l, Term r) { return {Op::compose, 0, {std::move(l), std::move(r)}}; }

  friend bool operator==(const Term&, const Term&) = default;

  std::string render(const PartialTable& base) const {
    switch (op) {
      case Op::iota: return "i(" + base.label(generator) + ")";
      case Op::plus: return args[0].render(base) + "^+";
      case Op::corestrict: return "(" + args[0].render(base) + " | " + args[1].render(base) + ")";
      case Op::compose: return "(" + args[0].render(base) + " " + args[1].render(base) + ")";
    }
    return {};
  }
};

/// A term over ι(T) that evaluates to (A, a):
/// (ι(a_1)^+ | ... | ι(a_n)^+) ι(a), with a_j ranging over A \ {a^+}.
inline Term generation_decomposition(const ConstellationExpansion& sz, Element el) {
  const auto& [A, a] = sz.carrier[el];
  const Element e = sz.base->plus(a);
  std::vector<Element> rest;
  for (Element x : A)
    if (x != e) rest.push_back(x);
  if (a != e && rest.size() == 1) return Term::gen(a);  // ({a^+, a}, a)
  std::optional<Term> projection;
  for (Element x : rest)
    projection = projection ? Term::corestrict(std::move(*projection), Term::plus_of(Term::gen(x)))
                            : Term::plus_of(Term::gen(x));
  if (!projection) projection = Term::plus_of(Term::gen(e));
  if (a == e) return *projection;
  return Term::compose(std::move(*projection), Term::gen(a));
}

/// Evaluates a term in an indexed constellation, reading ι(x) as g[x].
/// nullopt when some intermediate operation is undefined.
inline std::optional<Element> evaluate(const Term& term, const std::vector<Element>& g, const ConstellationIndex& ix) {
  switch (term.op) {
    case Term::Op::iota: return g.at(term.generator);
    case Term::Op::plus: {
      const auto v = evaluate(term.args[0], g, ix);
      if (!v) return std::nullopt;
      return ix.plus(*v);
    }
    case Term::Op::corestrict: {
      const auto l = evaluate(term.args[0], g, ix);
      const auto r = evaluate(term.args[1], g, ix);
      if (!l || !r || !ix.is_projection(*r)) return std::nullopt;
      return ix.corestriction(*l, *r).get();
    }
    case Term::Op::compose: {
      const auto l = evaluate(term.args[0], g, ix);
      const auto r = evaluate(term.args[1], g, ix);
      if (!l || !r) return std::nullopt;
      return ix.compose(*l, *r);
    }
  }
  return std::nullopt;
}

/// The meet fold in extend failed; the input is not a preradiant between
/// li-constellations.
class MeetUndefined : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Φ(A, x) = (∧_{a ∈ A} φ(a)^+) φ(x), the meet folded left over A in
/// ascending order. `phi` must map the expansion's base.
inline ConstellationMorphism extend(const ConstellationMorphism& phi, const ConstellationExpansion& sz) {
  if (!(phi.source() == *sz.base)) throw std::invalid_argument("preradiant source is not the expanded structure");
  const ConstellationIndex target(phi.target());
  std::vector<Element> map(sz.size());
  for (Element i = 0; i < sz.size(); ++i) {
    const auto& [A, x] = sz.carrier[i];
    std::optional<Element> m;
    for (Element a : A) {
      const Element p = target.plus(phi(a));
      m = m ? target.meet(*m, p) : std::optional<Element>(p);
      if (!m) throw MeetUndefined("meet of images is undefined at " + sz.carrier.labels()[i]);
    }
    const auto v = target.compose(*m, phi(x));
    if (!v) throw MeetUndefined("meet does not compose with the anchor image at " + sz.carrier.labels()[i]);
    map[i] = *v;
  }
  return ConstellationMorphism(sz.expanded, phi.target_ptr(), std::move(map));
}

inline ConstellationMorphism extend(const ConstellationMorphism& phi) {
  return extend(phi, expand_constellation(phi.source_ptr()));
}

}  // namespace constella

#endif  // CONSTELLA_SZENDREI_HPP
