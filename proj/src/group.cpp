#include "centlat/group.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "centlat/error.hpp"

namespace centlat {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNotClosed: return "NotClosed";
    case ErrorKind::kNotAssociative: return "NotAssociative";
    case ErrorKind::kNoIdentity: return "NoIdentity";
    case ErrorKind::kNoInverse: return "NoInverse";
    case ErrorKind::kInvalidInput: return "InvalidInput";
    case ErrorKind::kOrderCapExceeded: return "OrderCapExceeded";
    case ErrorKind::kNodeCapExceeded: return "NodeCapExceeded";
    case ErrorKind::kUnsupportedParameter: return "UnsupportedParameter";
    case ErrorKind::kInvalidAction: return "InvalidAction";
    case ErrorKind::kNotHomomorphism: return "NotHomomorphism";
    case ErrorKind::kNotNormal: return "NotNormal";
    case ErrorKind::kDomainMismatch: return "DomainMismatch";
    case ErrorKind::kNotSurjective: return "NotSurjective";
    case ErrorKind::kKernelNotCentral: return "KernelNotCentral";
    case ErrorKind::kNotCrh: return "NotCrh";
    case ErrorKind::kImageNotANode: return "ImageNotANode";
    case ErrorKind::kParseError: return "ParseError";
    case ErrorKind::kUnknownGenerator: return "UnknownGenerator";
    case ErrorKind::kIo: return "Io";
    case ErrorKind::kUsage: return "Usage";
  }
  return "Unknown";
}

namespace {

// Saturates `start` (assumed closed) under right multiplication by `gens`.
ElementSet saturate(const FiniteGroup& g, ElementSet start, std::span<const Element> gens) {
  std::vector<Element> frontier = start.members();
  while (!frontier.empty()) {
    const Element e = frontier.back();
    frontier.pop_back();
    for (Element s : gens) {
      const Element p = g.mul(e, s);
      if (!start.contains(p)) {
        start.insert(p);
        frontier.push_back(p);
      }
    }
  }
  return start;
}

ElementSet closure_set(const FiniteGroup& g, std::span<const Element> seed) {
  ElementSet start(g.order());
  start.insert(g.identity());
  return saturate(g, std::move(start), seed);
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<Element>> table,
                                    std::optional<std::vector<Generator>> generator_hints,
                                    std::vector<std::string> element_labels) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(ErrorKind::kInvalidInput, "group order must be positive");
  auto d = std::make_shared<Data>();
  d->order = n;
  d->table.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n)
      throw Error(ErrorKind::kNotClosed,
                  "row " + std::to_string(a) + " has " + std::to_string(table[a].size()) +
                      " entries, expected " + std::to_string(n));
    for (std::size_t b = 0; b < n; ++b) {
      if (table[a][b] >= n)
        throw Error(ErrorKind::kNotClosed, "product " + std::to_string(a) + "*" + std::to_string(b) +
                                               " = " + std::to_string(table[a][b]) +
                                               " is outside 0.." + std::to_string(n - 1));
      d->table[a * n + b] = table[a][b];
    }
  }
  auto at = [&](std::size_t a, std::size_t b) { return d->table[a * n + b]; };

  std::optional<Element> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = at(e, a) == a && at(a, e) == a;
    if (ok) identity = static_cast<Element>(e);
  }
  if (!identity) throw Error(ErrorKind::kNoIdentity, "no element acts as a two-sided identity");
  d->identity = *identity;

  d->inverse.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < n && !found; ++b) {
      if (at(a, b) == *identity && at(b, a) == *identity) {
        d->inverse[a] = static_cast<Element>(b);
        found = true;
      }
    }
    if (!found) throw Error(ErrorKind::kNoInverse, "element " + std::to_string(a) + " has no inverse");
  }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Element ab = at(a, b);
      for (std::size_t c = 0; c < n; ++c)
        if (at(ab, c) != at(a, at(b, c)))
          throw Error(ErrorKind::kNotAssociative, "(" + std::to_string(a) + "*" + std::to_string(b) +
                                                      ")*" + std::to_string(c) + " != " + std::to_string(a) +
                                                      "*(" + std::to_string(b) + "*" + std::to_string(c) + ")");
    }

  if (!element_labels.empty() && element_labels.size() != n)
    throw Error(ErrorKind::kInvalidInput, "expected " + std::to_string(n) + " element labels, got " +
                                              std::to_string(element_labels.size()));
  d->labels = std::move(element_labels);

  FiniteGroup g{d};
  if (generator_hints) {
    std::vector<Element> elems;
    std::unordered_set<std::string> seen;
    for (const auto& gen : *generator_hints) {
      if (gen.element >= n)
        throw Error(ErrorKind::kInvalidInput,
                    "generator '" + gen.label + "' refers to element " + std::to_string(gen.element));
      if (!seen.insert(gen.label).second)
        throw Error(ErrorKind::kInvalidInput, "duplicate generator label '" + gen.label + "'");
      elems.push_back(gen.element);
    }
    if (closure_set(g, elems).size() != n)
      throw Error(ErrorKind::kInvalidInput, "named generators do not generate the whole group");
    d->generators = std::move(*generator_hints);
  } else {
    const auto gens = greedy_generators(g);
    for (std::size_t i = 0; i < gens.size(); ++i)
      d->generators.push_back({"g" + std::to_string(i + 1), gens[i]});
  }
  return g;
}

Element FiniteGroup::pow(Element a, long long exponent) const {
  const auto ord = static_cast<long long>(element_order(a));
  long long e = exponent % ord;
  if (e < 0) e += ord;
  Element r = identity();
  for (long long i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

std::size_t FiniteGroup::element_order(Element a) const {
  std::size_t k = 1;
  for (Element p = a; p != identity(); p = mul(p, a)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < order(); ++a)
    for (std::size_t b = a + 1; b < order(); ++b)
      if (!commute(static_cast<Element>(a), static_cast<Element>(b))) return false;
  return true;
}

std::optional<Element> FiniteGroup::generator(std::string_view label) const {
  for (const auto& g : data_->generators)
    if (g.label == label) return g.element;
  return std::nullopt;
}

std::string FiniteGroup::label(Element a) const {
  if (!data_->labels.empty()) return data_->labels[a];
  return "e" + std::to_string(a);
}

std::vector<std::vector<Element>> FiniteGroup::table() const {
  const std::size_t n = order();
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = data_->table[a * n + b];
  return t;
}

SubgroupSet SubgroupSet::checked(FiniteGroup group, ElementSet members) {
  const std::size_t n = group.order();
  if (members.universe() != n)
    throw Error(ErrorKind::kInvalidInput, "subset universe does not match group order");
  if (!members.contains(group.identity()))
    throw Error(ErrorKind::kNotClosed, "subset does not contain the identity");
  const auto elems = members.members();
  for (Element a : elems) {
    if (!members.contains(group.inv(a)))
      throw Error(ErrorKind::kNotClosed, "inverse of " + std::to_string(a) + " missing");
    for (Element b : elems)
      if (!members.contains(group.mul(a, b)))
        throw Error(ErrorKind::kNotClosed,
                    "product " + std::to_string(a) + "*" + std::to_string(b) + " leaves the subset");
  }
  if (n % elems.size() != 0)
    throw Error(ErrorKind::kNotClosed, "subset order does not divide group order");
  return SubgroupSet(std::move(group), std::move(members));
}

SubgroupSet closure(const FiniteGroup& group, const ElementSet& seed) {
  const auto elems = seed.members();
  return SubgroupSet(group, closure_set(group, elems));
}

SubgroupSet closure(const FiniteGroup& group, std::span<const Element> seed) {
  return SubgroupSet(group, closure_set(group, seed));
}

SubgroupSet centralizer(const FiniteGroup& group, const ElementSet& target) {
  const auto xs = target.members();
  ElementSet out(group.order());
  for (std::size_t g = 0; g < group.order(); ++g) {
    const auto ge = static_cast<Element>(g);
    bool ok = true;
    for (Element x : xs)
      if (!group.commute(ge, x)) {
        ok = false;
        break;
      }
    if (ok) out.insert(ge);
  }
  return SubgroupSet(group, std::move(out));
}

SubgroupSet centralizer(const FiniteGroup& group, std::span<const Element> target) {
  return centralizer(group, ElementSet::of(group.order(), target));
}

SubgroupSet center(const FiniteGroup& group) { return centralizer(group, group.all_elements()); }

ElementSet commutator_set(const FiniteGroup& group) {
  ElementSet out(group.order());
  for (std::size_t a = 0; a < group.order(); ++a)
    for (std::size_t b = 0; b < group.order(); ++b)
      out.insert(group.commutator(static_cast<Element>(a), static_cast<Element>(b)));
  return out;
}

SubgroupSet derived_subgroup(const FiniteGroup& group) { return closure(group, commutator_set(group)); }

std::vector<SubgroupSet> all_subgroups(const FiniteGroup& group, std::size_t order_cap) {
  if (group.order() > order_cap)
    throw Error(ErrorKind::kOrderCapExceeded, "subgroup enumeration of order " +
                                                  std::to_string(group.order()) + " exceeds cap " +
                                                  std::to_string(order_cap));
  struct Found {
    ElementSet members;
    std::vector<Element> gens;
  };
  std::vector<Found> found;
  std::unordered_set<ElementSet, ElementSetHash> seen;

  // Cyclic seeds; every subgroup is a join of cyclic ones.
  std::vector<std::size_t> cyclic;
  for (std::size_t g = 0; g < group.order(); ++g) {
    const Element e = static_cast<Element>(g);
    const Element one[] = {e};
    auto s = closure_set(group, one);
    if (seen.insert(s).second) {
      cyclic.push_back(found.size());
      found.push_back({std::move(s), {e}});
    }
  }

  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t c : cyclic) {
      const Element ce = found[c].gens.front();
      if (found[i].members.contains(ce)) continue;
      std::vector<Element> gens = found[i].gens;
      gens.push_back(ce);
      auto joined = saturate(group, found[i].members, gens);
      if (seen.insert(joined).second) found.push_back({std::move(joined), std::move(gens)});
    }
  }

  std::vector<SubgroupSet> out;
  out.reserve(found.size());
  for (auto& f : found) out.push_back(SubgroupSet::checked(group, std::move(f.members)));
  std::sort(out.begin(), out.end(),
            [](const SubgroupSet& a, const SubgroupSet& b) { return canonical_less(a, b); });
  return out;
}

bool is_central(const FiniteGroup& group, const SubgroupSet& s) {
  return s.members().is_subset_of(center(group).members());
}

std::optional<Element> find_non_normalizing(const SubgroupSet& s) {
  const auto& g = s.group();
  const auto elems = s.members().members();
  for (std::size_t c = 0; c < g.order(); ++c) {
    const auto ce = static_cast<Element>(c);
    for (Element a : elems)
      if (!s.contains(g.mul(g.mul(g.inv(ce), a), ce))) return ce;
  }
  return std::nullopt;
}

std::vector<Element> greedy_generators(const FiniteGroup& group) {
  std::vector<Element> gens;
  ElementSet current(group.order());
  current.insert(group.identity());
  for (std::size_t g = 0; g < group.order() && current.size() < group.order(); ++g) {
    const auto e = static_cast<Element>(g);
    if (current.contains(e)) continue;
    gens.push_back(e);
    current = saturate(group, std::move(current), gens);
  }
  return gens;
}

std::vector<ElementSet> element_centralizers(const FiniteGroup& group) {
  std::vector<ElementSet> out;
  out.reserve(group.order());
  for (std::size_t g = 0; g < group.order(); ++g) {
    const Element one[] = {static_cast<Element>(g)};
    out.push_back(centralizer(group, one).members());
  }
  return out;
}

}  // namespace centlat
