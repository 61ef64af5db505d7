#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace mixlat {

// Elements are dense indices 0..n-1; labels live in a separate table owned
// by whoever builds the structure. All algorithms work on indices.
using Element = std::size_t;
using ElementPair = std::pair<Element, Element>;

// A binary relation on {0..n-1} as a boolean adjacency matrix.
// at(i, j) means "i is related to j".
class Relation {
 public:
  Relation() = default;
  explicit Relation(std::size_t n) : n_(n), bits_(n * n, 0) {}

  static Relation identity(std::size_t n) {
    Relation r(n);
    for (Element i = 0; i < n; ++i) r.set(i, i);
    return r;
  }

  std::size_t size() const { return n_; }
  bool at(Element i, Element j) const { return bits_[i * n_ + j] != 0; }
  void set(Element i, Element j, bool v = true) { bits_[i * n_ + j] = v ? 1 : 0; }

  bool operator==(const Relation&) const = default;

  // Row-major lexicographic order; gives enumerations a canonical sequence.
  bool operator<(const Relation& other) const {
    if (n_ != other.n_) return n_ < other.n_;
    return bits_ < other.bits_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> bits_;
};

enum class ViolationKind { Reflexivity, Antisymmetry, Transitivity };

const char* violation_kind_name(ViolationKind kind);

// A witness that a relation is not a partial order: 1 element for a missing
// reflexive pair, 2 for an antisymmetry violation, 3 for transitivity.
struct OrderViolation {
  ViolationKind kind;
  std::vector<Element> witness;

  std::string describe(std::span<const std::string> labels) const;
};

// Smallest reflexive and transitive relation containing `pairs`.
// Throws std::invalid_argument if any index is >= n.
Relation reflexive_transitive_closure(std::span<const ElementPair> pairs, std::size_t n);

// Empty result means the relation is a valid partial order. Otherwise the
// first violation found by a fixed scan: missing reflexive pairs by index,
// then antisymmetric pairs (i < j), then transitivity triples, all in
// lexicographic order.
std::optional<OrderViolation> validate_partial_order(const Relation& r);

// Least element of `subset` under r: the unique m in subset related below
// every member. Absent for empty subsets and for subsets whose minimal
// elements are not comparable to everything. Requires r to be a partial
// order.
std::optional<Element> least(const Relation& r, std::span<const Element> subset);

// Dual of least.
std::optional<Element> greatest(const Relation& r, std::span<const Element> subset);

// Cover pairs (x, y): x != y, x related to y, and no z strictly between.
// Sorted lexicographically. Requires r to be a partial order.
std::vector<ElementPair> covers(const Relation& r);

}  // namespace mixlat
