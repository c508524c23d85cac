#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "centlat/element_set.hpp"

namespace centlat {

inline constexpr std::size_t kDefaultOrderCap = 256;

struct Generator {
  std::string label;
  Element element;

  friend bool operator==(const Generator&, const Generator&) = default;
};

// A finite group given by its multiplication table over dense element indices.
// Immutable; copies share the underlying table.
class FiniteGroup {
 public:
  // Validates `table` (closure, identity, inverses, associativity) and finds
  // the identity wherever it sits. Without hints a generating set is chosen
  // greedily by ascending index and labeled g1, g2, ...
  static FiniteGroup from_table(std::vector<std::vector<Element>> table,
                                std::optional<std::vector<Generator>> generator_hints = std::nullopt,
                                std::vector<std::string> element_labels = {});

  std::size_t order() const { return data_->order; }
  Element identity() const { return data_->identity; }
  Element mul(Element a, Element b) const { return data_->table[a * data_->order + b]; }
  Element inv(Element a) const { return data_->inverse[a]; }
  Element pow(Element a, long long exponent) const;
  Element commutator(Element a, Element b) const {
    return mul(mul(inv(a), inv(b)), mul(a, b));
  }
  bool commute(Element a, Element b) const { return mul(a, b) == mul(b, a); }
  std::size_t element_order(Element a) const;
  bool is_abelian() const;

  const std::vector<Generator>& generators() const { return data_->generators; }
  std::optional<Element> generator(std::string_view label) const;
  const std::vector<std::string>& element_labels() const { return data_->labels; }
  // Display label; falls back to "e<index>".
  std::string label(Element a) const;

  ElementSet all_elements() const { return ElementSet::full(order()); }
  ElementSet empty_set() const { return ElementSet(order()); }
  std::vector<std::vector<Element>> table() const;

  bool same_as(const FiniteGroup& other) const { return data_ == other.data_; }

 private:
  struct Data {
    std::size_t order = 0;
    std::vector<Element> table;
    std::vector<Element> inverse;
    Element identity = 0;
    std::vector<Generator> generators;
    std::vector<std::string> labels;
  };
  explicit FiniteGroup(std::shared_ptr<const Data> d) : data_(std::move(d)) {}

  std::shared_ptr<const Data> data_;
};

// An element subset of a specific group that is closed under products and
// inverses.
class SubgroupSet {
 public:
  // Validates closure, identity membership, and Lagrange.
  static SubgroupSet checked(FiniteGroup group, ElementSet members);

  const FiniteGroup& group() const { return group_; }
  const ElementSet& members() const { return members_; }
  std::size_t order() const { return members_.size(); }
  bool contains(Element e) const { return members_.contains(e); }
  bool is_trivial() const { return order() == 1; }
  bool is_whole() const { return order() == group_.order(); }

  friend bool operator==(const SubgroupSet& a, const SubgroupSet& b) {
    return a.group_.same_as(b.group_) && a.members_ == b.members_;
  }
  friend bool canonical_less(const SubgroupSet& a, const SubgroupSet& b) {
    return canonical_less(a.members_, b.members_);
  }

 private:
  friend SubgroupSet closure(const FiniteGroup&, const ElementSet&);
  friend SubgroupSet closure(const FiniteGroup&, std::span<const Element>);
  friend SubgroupSet centralizer(const FiniteGroup&, const ElementSet&);
  SubgroupSet(FiniteGroup g, ElementSet m) : group_(std::move(g)), members_(std::move(m)) {}

  FiniteGroup group_;
  ElementSet members_;
};

SubgroupSet closure(const FiniteGroup& group, const ElementSet& seed);
SubgroupSet closure(const FiniteGroup& group, std::span<const Element> seed);

// {g : gx = xg for all x in target}
SubgroupSet centralizer(const FiniteGroup& group, const ElementSet& target);
SubgroupSet centralizer(const FiniteGroup& group, std::span<const Element> target);
SubgroupSet center(const FiniteGroup& group);

// All commutators a^-1 b^-1 a b, identity included.
ElementSet commutator_set(const FiniteGroup& group);
SubgroupSet derived_subgroup(const FiniteGroup& group);

// Every subgroup, sorted canonically (order, then member list).
std::vector<SubgroupSet> all_subgroups(const FiniteGroup& group,
                                       std::size_t order_cap = kDefaultOrderCap);

bool is_central(const FiniteGroup& group, const SubgroupSet& s);

// First g (ascending) with g^-1 s g not inside s, if any.
std::optional<Element> find_non_normalizing(const SubgroupSet& s);
inline bool is_normal(const SubgroupSet& s) { return !find_non_normalizing(s).has_value(); }

// Greedy minimal generating set by ascending index.
std::vector<Element> greedy_generators(const FiniteGroup& group);

// Per-element centralizers C({g}), indexed by g.
std::vector<ElementSet> element_centralizers(const FiniteGroup& group);

}  // namespace centlat
