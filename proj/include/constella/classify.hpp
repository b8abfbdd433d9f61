#ifndef CONSTELLA_CLASSIFY_HPP
#define CONSTELLA_CLASSIFY_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "constellation.hpp"
#include "functor.hpp"
#include "semigroupoid.hpp"

namespace constella {

/// Predicate verdicts plus one counterexample tuple (labels) per failed predicate.
struct ClassificationReport {
  bool nd = false;
  bool lc = false;
  bool unitary = false;
  bool is_category = false;
  bool is_semigroup = false;
  bool is_inverse_semigroupoid = false;
  bool has_right_inverses = false;
  std::map<std::string, std::vector<std::string>> witnesses;

  friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

/// nd / lc / unitary only.
struct DegeneracyVerdicts {
  bool nd = false;
  bool lc = false;
  bool unitary = false;
  std::map<std::string, std::vector<std::string>> witnesses;
};

/// ND, LC and U read off a constellation through corestrictions and components.
inline DegeneracyVerdicts degeneracy_of_constellation(const ConstellationIndex& ix) {
  DegeneracyVerdicts v;
  const auto& t = ix.structure();
  v.nd = true;
  for (Element x = 0; x < t.size() && v.nd; ++x) {
    bool found = false;
    for (Element e : ix.projections()) found = found || ix.corestriction(x, e).nonempty();
    if (!found) {
      v.nd = false;
      v.witnesses["nd"] = {t.label(x)};
    }
  }
  v.lc = true;
  std::vector<Element> maxima;
  for (const auto& comp : ix.components()) {
    std::optional<Element> top;
    for (Element m : comp)
      if (std::all_of(comp.begin(), comp.end(), [&](Element y) { return ix.leq(y, m); })) top = m;
    if (!top) {
      v.lc = false;
      if (!v.witnesses.count("lc")) v.witnesses["lc"] = detail::names(t.table, {comp.front()});
    } else {
      maxima.push_back(*top);
    }
  }
  v.unitary = v.lc;
  if (!v.lc) v.witnesses["unitary"] = v.witnesses["lc"];
  for (Element one : maxima)
    for (Element x = 0; x < t.size() && v.unitary; ++x) {
      const auto c = ix.corestriction(x, one);
      if (c.nonempty() && !(c.has_value() && c.value() == x)) {
        v.unitary = false;
        v.witnesses["unitary"] = detail::names(t.table, {x, one});
      }
    }
  return v;
}

/// ND, LC and U in their semigroupoid form: S^s nonempty; a left identity in
/// S^+ acting on s; an identity acting on s. Works on any table and plus map,
/// valid or not.
inline DegeneracyVerdicts degeneracy_of_table(const PartialTable& t, const RestrictionStructure& plus) {
  DegeneracyVerdicts v;
  const std::size_t n = t.size();
  std::vector<bool> left(n), both(n);
  for (Element e = 0; e < n; ++e) {
    const auto k = identity_kind(t, e);
    left[e] = (k == IdentityKind::left || k == IdentityKind::both) && plus.in_image(e);
    both[e] = k == IdentityKind::both;
  }
  v.nd = v.lc = v.unitary = true;
  for (Element s = 0; s < n; ++s) {
    bool has_right = false, has_left_id = false, has_id = false;
    for (Element u = 0; u < n; ++u) {
      has_right = has_right || t.defined(s, u);
      has_left_id = has_left_id || (left[u] && t.defined(u, s));
      has_id = has_id || (both[u] && t.defined(u, s));
    }
    if (!has_right && v.nd) {
      v.nd = false;
      v.witnesses["nd"] = {t.label(s)};
    }
    if (!has_left_id && v.lc) {
      v.lc = false;
      v.witnesses["lc"] = {t.label(s)};
    }
    if (!has_id && v.unitary) {
      v.unitary = false;
      v.witnesses["unitary"] = {t.label(s)};
    }
  }
  return v;
}

/// Domain and range identities of a category presentation.
struct CategoryDetection {
  bool is_category = false;
  std::vector<Element> domain;  // D(s): the identity with s D(s) defined
  std::vector<Element> range;   // R(s): the identity with R(s) s defined
  std::vector<std::string> witness;
};

/// Every element has identities on both sides and st is defined exactly when
/// D(s) = R(t).
inline CategoryDetection detect_category(const PartialTable& t) {
  CategoryDetection out;
  const std::size_t n = t.size();
  std::vector<bool> id(n);
  for (Element e = 0; e < n; ++e) id[e] = identity_kind(t, e) == IdentityKind::both;
  std::vector<Element> dom(n), ran(n);
  for (Element s = 0; s < n; ++s) {
    std::optional<Element> d, r;
    for (Element e = 0; e < n; ++e) {
      if (!id[e]) continue;
      if (t.defined(s, e)) d = e;
      if (t.defined(e, s)) r = e;
    }
    if (!d || !r) {
      out.witness = {t.label(s)};
      return out;
    }
    dom[s] = *d;
    ran[s] = *r;
  }
  for (Element s = 0; s < n; ++s)
    for (Element u = 0; u < n; ++u)
      if (t.defined(s, u) != (dom[s] == ran[u])) {
        out.witness = {t.label(s), t.label(u)};
        return out;
      }
  out.is_category = true;
  out.domain = std::move(dom);
  out.range = std::move(ran);
  return out;
}

/// The three equivalent semigroup conditions, each computed on its own.
struct SemigroupConditions {
  bool total = false;                  // S^(2) = S × S
  bool nd_and_semilattice = false;     // C(S) non-degenerate, (C(S)^+, <=) a meet-semilattice
  bool all_corestrictions = false;     // x|e exists for all x and all e ∈ T^+
};

inline SemigroupConditions semigroup_conditions(const LeftRestrictionSemigroupoid& s) {
  SemigroupConditions c;
  c.total = s.table().defined_count() == s.size() * s.size();
  const ConstellationIndex ix(build_C(s));
  const auto& proj = ix.projections();
  bool semilattice = true;
  for (Element e : proj)
    for (Element f : proj) {
      std::vector<Element> lower;
      for (Element z : proj)
        if (ix.leq(z, e) && ix.leq(z, f)) lower.push_back(z);
      const bool has_glb = std::any_of(lower.begin(), lower.end(), [&](Element m) {
        return std::all_of(lower.begin(), lower.end(), [&](Element z) { return ix.leq(z, m); });
      });
      semilattice = semilattice && has_glb;
    }
  c.nd_and_semilattice = degeneracy_of_constellation(ix).nd && semilattice;
  c.all_corestrictions = true;
  for (Element x = 0; x < s.size(); ++x)
    for (Element e : proj) c.all_corestrictions = c.all_corestrictions && ix.corestriction(x, e).nonempty();
  return c;
}

/// S^(2) = S × S; throws std::logic_error if the equivalent forms disagree.
inline bool detect_semigroup(const LeftRestrictionSemigroupoid& s) {
  const auto c = semigroup_conditions(s);
  if (c.total != c.nd_and_semilattice || c.total != c.all_corestrictions)
    throw std::logic_error("semigroup characterizations disagree");
  return c.total;
}

struct InverseDetection {
  bool is_inverse = false;
  bool regular = false;
  bool idempotents_commute = false;
  std::vector<Element> inverse;                  // s ↦ s^{-1}, filled when is_inverse
  std::vector<std::vector<Element>> pseudo_inverses;
};

/// t with st, ts defined, sts = s and tst = t.
inline std::vector<Element> pseudo_inverses(const PartialTable& t, Element s) {
  std::vector<Element> out;
  for (Element u = 0; u < t.size(); ++u) {
    const auto su = t.compose(s, u);
    const auto us = t.compose(u, s);
    if (!su || !us) continue;
    if (t.compose(*su, s) == s && t.compose(*us, u) == u) out.push_back(u);
  }
  return out;
}

/// Unique pseudo-inverses, found by exhaustive search and cross-checked
/// against regularity plus commuting idempotents; throws std::logic_error if
/// the two disagree.
inline InverseDetection detect_inverse_semigroupoid(const PartialTable& t) {
  InverseDetection out;
  out.regular = true;
  bool unique = true;
  for (Element s = 0; s < t.size(); ++s) {
    out.pseudo_inverses.push_back(pseudo_inverses(t, s));
    out.regular = out.regular && !out.pseudo_inverses.back().empty();
    unique = unique && out.pseudo_inverses.back().size() == 1;
  }
  out.idempotents_commute = true;
  const auto idem = idempotents(t);
  for (Element e : idem)
    for (Element f : idem) {
      const auto ef = t.compose(e, f);
      if (ef && t.compose(f, e) != ef) out.idempotents_commute = false;
    }
  out.is_inverse = out.regular && unique;
  if (out.is_inverse != (out.regular && out.idempotents_commute))
    throw std::logic_error("pseudo-inverse uniqueness disagrees with commuting idempotents");
  if (out.is_inverse)
    for (const auto& p : out.pseudo_inverses) out.inverse.push_back(p.front());
  return out;
}

/// s^+ = s s^{-1}.
inline RestrictionStructure derive_plus_from_inverses(const PartialTable& t, const std::vector<Element>& inverse) {
  std::vector<Element> plus(t.size());
  for (Element s = 0; s < t.size(); ++s) {
    const auto p = t.compose(s, inverse.at(s));
    if (!p) throw std::invalid_argument("s s^-1 undefined at " + t.label(s));
    plus[s] = *p;
  }
  return RestrictionStructure(std::move(plus));
}

struct RightInverses {
  bool present = false;
  std::vector<std::optional<Element>> witness;  // some t with x t = x^+
};

inline RightInverses has_right_inverses(const OrderedConstellation& t) {
  RightInverses out;
  out.present = true;
  for (Element x = 0; x < t.size(); ++x) {
    std::optional<Element> w;
    for (Element u = 0; u < t.size() && !w; ++u)
      if (t.table.compose(x, u) == t.plus(x)) w = u;
    out.witness.push_back(w);
    out.present = out.present && w.has_value();
  }
  return out;
}

namespace detail {

/// Inverse semigroupoid whose plus is the induced one s ↦ s s^{-1}.
inline bool inverse_with_induced_plus(const PartialTable& t, const RestrictionStructure& plus) {
  const auto inv = detect_inverse_semigroupoid(t);
  return inv.is_inverse && derive_plus_from_inverses(t, inv.inverse).map() == plus.map();
}

inline void fill_structure_flags(ClassificationReport& r, const LeftRestrictionSemigroupoid& s,
                                 const OrderedConstellation& c) {
  const auto cat = detect_category(s.table());
  r.is_category = cat.is_category;
  if (!cat.is_category) r.witnesses["is_category"] = cat.witness;
  r.is_semigroup = detect_semigroup(s);
  r.is_inverse_semigroupoid = inverse_with_induced_plus(s.table(), s.restriction());
  const auto ri = has_right_inverses(c);
  r.has_right_inverses = ri.present;
  for (Element x = 0; x < c.size(); ++x)
    if (!ri.witness[x]) {
      r.witnesses["has_right_inverses"] = {c.label(x)};
      break;
    }
}

}  // namespace detail

/// ND/LC/U computed on the constellation; the remaining flags on G(T).
inline ClassificationReport classify_constellation(const OrderedConstellation& t) {
  const ConstellationIndex ix(t);
  auto v = degeneracy_of_constellation(ix);
  ClassificationReport r;
  r.nd = v.nd;
  r.lc = v.lc;
  r.unitary = v.unitary;
  r.witnesses = std::move(v.witnesses);
  detail::fill_structure_flags(r, build_G(ix), t);
  return r;
}

/// ND/LC/U computed directly on S through identities; agrees with
/// classify_constellation(build_C(s)).
inline ClassificationReport classify_semigroupoid(const LeftRestrictionSemigroupoid& s) {
  auto v = degeneracy_of_table(s.table(), s.restriction());
  ClassificationReport r;
  r.nd = v.nd;
  r.lc = v.lc;
  r.unitary = v.unitary;
  r.witnesses = std::move(v.witnesses);
  detail::fill_structure_flags(r, s, build_C(s));
  return r;
}

}  // namespace constella

#endif  // CONSTELLA_CLASSIFY_HPP
