#ifndef CONSTELLA_TABLE_HPP
#define CONSTELLA_TABLE_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace constella {

/// Elements are positions in a carrier; labels live on the table.
using Element = std::size_t;

/// Label syntax accepted for element ids: [A-Za-z0-9_+']+
inline bool is_valid_label(const std::string& label) {
  if (label.empty()) return false;
  return std::all_of(label.begin(), label.end(), [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
           c == '_' || c == '+' || c == '\'';
  });
}

/// A finite carrier together with a partially defined binary operation.
/// Undefined products are a distinct outcome (`std::nullopt`), never an element.
class PartialTable {
 public:
  explicit PartialTable(std::vector<std::string> labels)
      : labels_(std::move(labels)), cells_(labels_.size() * labels_.size()) {
    if (labels_.empty()) throw std::invalid_argument("carrier must be nonempty");
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (!index_.emplace(labels_[i], i).second) {
        throw std::invalid_argument("duplicate element id '" + labels_[i] + "'");
      }
    }
  }

  /// Carrier {0, ..., n-1} labelled by decimal strings.
  static PartialTable numbered(std::size_t n) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    return PartialTable(std::move(labels));
  }

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(Element x) const { return labels_.at(x); }

  std::optional<Element> find(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  Element at(const std::string& label) const {
    auto x = find(label);
    if (!x) throw std::out_of_range("unknown element id '" + label + "'");
    return *x;
  }

  bool defined(Element a, Element b) const { return cells_[a * size() + b].has_value(); }
  std::optional<Element> compose(Element a, Element b) const { return cells_[a * size() + b]; }

  void set(Element a, Element b, Element c) {
    if (a >= size() || b >= size() || c >= size()) throw std::out_of_range("element out of range");
    cells_[a * size() + b] = c;
  }
  void unset(Element a, Element b) { cells_.at(a * size() + b).reset(); }

  std::size_t defined_count() const {
    return static_cast<std::size_t>(
        std::count_if(cells_.begin(), cells_.end(), [](const auto& c) { return c.has_value(); }));
  }

  /// Raw row-major cells; used for hashing and canonical forms.
  const std::vector<std::optional<Element>>& cells() const noexcept { return cells_; }

  /// Literal equality: same labels, same defined pairs and the same products,
  /// compared through labels so carrier order does not matter.
  friend bool operator==(const PartialTable& a, const PartialTable& b) {
    if (a.size() != b.size()) return false;
    std::vector<Element> to_b(a.size());
    for (Element x = 0; x < a.size(); ++x) {
      auto y = b.find(a.label(x));
      if (!y) return false;
      to_b[x] = *y;
    }
    for (Element x = 0; x < a.size(); ++x) {
      for (Element y = 0; y < a.size(); ++y) {
        auto ab = a.compose(x, y);
        auto bb = b.compose(to_b[x], to_b[y]);
        if (ab.has_value() != bb.has_value()) return false;
        if (ab && to_b[*ab] != *bb) return false;
      }
    }
    return true;
  }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Element> index_;
  std::vector<std::optional<Element>> cells_;
};

/// The unary `+` map of a left restriction semigroupoid or left constellation.
class RestrictionStructure {
 public:
  RestrictionStructure() = default;
  explicit RestrictionStructure(std::vector<Element> plus) : plus_(std::move(plus)) {}

  std::size_t size() const noexcept { return plus_.size(); }
  Element operator()(Element x) const { return plus_.at(x); }
  const std::vector<Element>& map() const noexcept { return plus_; }
  void set(Element x, Element value) { plus_.at(x) = value; }

  /// The image { x^+ }, ascending.
  std::vector<Element> image() const {
    std::set<Element> img(plus_.begin(), plus_.end());
    return {img.begin(), img.end()};
  }

  bool in_image(Element e) const { return std::find(plus_.begin(), plus_.end(), e) != plus_.end(); }

  bool fits(const PartialTable& t) const {
    return plus_.size() == t.size() &&
           std::all_of(plus_.begin(), plus_.end(), [&](Element e) { return e < t.size(); });
  }

 private:
  std::vector<Element> plus_;
};

/// A binary relation on a carrier stored as a dense matrix. Used for the
/// natural partial order and for the order of an ordered constellation.
class OrderRelation {
 public:
  OrderRelation() = default;
  explicit OrderRelation(std::size_t n) : n_(n), m_(n * n, 0) {}

  static OrderRelation identity(std::size_t n) {
    OrderRelation r(n);
    for (std::size_t i = 0; i < n; ++i) r.set(i, i);
    return r;
  }

  std::size_t size() const noexcept { return n_; }
  bool leq(Element a, Element b) const { return m_[a * n_ + b] != 0; }
  void set(Element a, Element b, bool value = true) { m_.at(a * n_ + b) = value ? 1 : 0; }

  std::vector<std::pair<Element, Element>> pairs() const {
    std::vector<std::pair<Element, Element>> out;
    for (Element a = 0; a < n_; ++a)
      for (Element b = 0; b < n_; ++b)
        if (leq(a, b)) out.emplace_back(a, b);
    return out;
  }

  bool is_reflexive() const {
    for (Element a = 0; a < n_; ++a)
      if (!leq(a, a)) return false;
    return true;
  }
  bool is_antisymmetric() const {
    for (Element a = 0; a < n_; ++a)
      for (Element b = 0; b < n_; ++b)
        if (a != b && leq(a, b) && leq(b, a)) return false;
    return true;
  }
  bool is_transitive() const {
    for (Element a = 0; a < n_; ++a)
      for (Element b = 0; b < n_; ++b)
        if (leq(a, b))
          for (Element c = 0; c < n_; ++c)
            if (leq(b, c) && !leq(a, c)) return false;
    return true;
  }
  bool is_partial_order() const { return is_reflexive() && is_antisymmetric() && is_transitive(); }

  /// Reflexive-transitive closure (Warshall).
  OrderRelation closure() const {
    OrderRelation r = *this;
    for (Element a = 0; a < n_; ++a) r.set(a, a);
    for (Element k = 0; k < n_; ++k)
      for (Element a = 0; a < n_; ++a)
        if (r.leq(a, k))
          for (Element b = 0; b < n_; ++b)
            if (r.leq(k, b)) r.set(a, b);
    return r;
  }

  /// Covering pairs a < b with nothing strictly between. Only meaningful for
  /// partial orders.
  std::vector<std::pair<Element, Element>> covering_pairs() const {
    std::vector<std::pair<Element, Element>> out;
    for (Element a = 0; a < n_; ++a)
      for (Element b = 0; b < n_; ++b) {
        if (a == b || !leq(a, b)) continue;
        bool between = false;
        for (Element c = 0; c < n_ && !between; ++c)
          between = c != a && c != b && leq(a, c) && leq(c, b);
        if (!between) out.emplace_back(a, b);
      }
    return out;
  }

  friend bool operator==(const OrderRelation&, const OrderRelation&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<char> m_;
};

/// Maps each element of `a` to the element of `b` with the same label, or
/// nullopt if the label sets differ.
inline std::optional<std::vector<Element>> label_correspondence(const PartialTable& a,
                                                                const PartialTable& b) {
  if (a.size() != b.size()) return std::nullopt;
  std::vector<Element> to_b(a.size());
  for (Element x = 0; x < a.size(); ++x) {
    auto y = b.find(a.label(x));
    if (!y) return std::nullopt;
    to_b[x] = *y;
  }
  return to_b;
}

inline bool same_plus(const PartialTable& ta, const RestrictionStructure& pa, const PartialTable& tb,
                      const RestrictionStructure& pb) {
  auto to_b = label_correspondence(ta, tb);
  if (!to_b || pa.size() != ta.size() || pb.size() != tb.size()) return false;
  for (Element x = 0; x < ta.size(); ++x)
    if ((*to_b)[pa(x)] != pb((*to_b)[x])) return false;
  return true;
}

inline bool same_order(const PartialTable& ta, const OrderRelation& oa, const PartialTable& tb,
                       const OrderRelation& ob) {
  auto to_b = label_correspondence(ta, tb);
  if (!to_b) return false;
  for (Element x = 0; x < ta.size(); ++x)
    for (Element y = 0; y < ta.size(); ++y)
      if (oa.leq(x, y) != ob.leq((*to_b)[x], (*to_b)[y])) return false;
  return true;
}

}  // namespace constella

#endif  // CONSTELLA_TABLE_HPP
