#include "relation.hpp"

#include <stdexcept>

namespace mixlat {

const char* violation_kind_name(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::Reflexivity: return "reflexivity";
    case ViolationKind::Antisymmetry: return "antisymmetry";
    case ViolationKind::Transitivity: return "transitivity";
  }
  return "?";
}

std::string OrderViolation::describe(std::span<const std::string> labels) const {
  std::string out = violation_kind_name(kind);
  out += " violated at (";
  for (std::size_t i = 0; i < witness.size(); ++i) {
    if (i) out += ", ";
    out += labels[witness[i]];
  }
  out += ")";
  return out;
}

Relation reflexive_transitive_closure(std::span<const ElementPair> pairs, std::size_t n) {
  Relation r = Relation::identity(n);
  for (const auto& [a, b] : pairs) {
    if (a >= n || b >= n)
      throw std::invalid_argument("relation pair index out of range: (" +
                                  std::to_string(a) + ", " + std::to_string(b) +
                                  ") with n = " + std::to_string(n));
    r.set(a, b);
  }
  // Floyd-Warshall style closure.
  for (Element k = 0; k < n; ++k)
    for (Element i = 0; i < n; ++i) {
      if (!r.at(i, k)) continue;
      for (Element j = 0; j < n; ++j)
        if (r.at(k, j)) r.set(i, j);
    }
  return r;
}

std::optional<OrderViolation> validate_partial_order(const Relation& r) {
  const std::size_t n = r.size();
  for (Element i = 0; i < n; ++i)
    if (!r.at(i, i)) return OrderViolation{ViolationKind::Reflexivity, {i}};
  for (Element i = 0; i < n; ++i)
    for (Element j = i + 1; j < n; ++j)
      if (r.at(i, j) && r.at(j, i))
        return OrderViolation{ViolationKind::Antisymmetry, {i, j}};
  for (Element i = 0; i < n; ++i)
    for (Element j = 0; j < n; ++j) {
      if (!r.at(i, j)) continue;
      for (Element k = 0; k < n; ++k)
        if (r.at(j, k) && !r.at(i, k))
          return OrderViolation{ViolationKind::Transitivity, {i, j, k}};
    }
  return std::nullopt;
}

std::optional<Element> least(const Relation& r, std::span<const Element> subset) {
  if (subset.empty()) return std::nullopt;
  // Candidate scan: any least element survives as the running candidate.
  Element m = subset[0];
  for (Element s : subset)
    if (r.at(s, m)) m = s;
  for (Element s : subset)
    if (!r.at(m, s)) return std::nullopt;
  return m;
}

std::optional<Element> greatest(const Relation& r, std::span<const Element> subset) {
  if (subset.empty()) return std::nullopt;
  Element m = subset[0];
  for (Element s : subset)
    if (r.at(m, s)) m = s;
  for (Element s : subset)
    if (!r.at(s, m)) return std::nullopt;
  return m;
}

std::vector<ElementPair> covers(const Relation& r) {
  const std::size_t n = r.size();
  std::vector<ElementPair> out;
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (x == y || !r.at(x, y)) continue;
      bool strict_between = false;
      for (Element z = 0; z < n && !strict_between; ++z)
        if (z != x && z != y && r.at(x, z) && r.at(z, y)) strict_between = true;
      if (!strict_between) out.emplace_back(x, y);
    }
  return out;
}

}  // namespace mixlat
