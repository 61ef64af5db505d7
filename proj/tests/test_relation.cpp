#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "generate.hpp"
#include "relation.hpp"
#include "rng.hpp"

using namespace mixlat;

namespace {

// Divisibility on the labels {1, 2, 3, 4, 6, 12}, built pairwise; the
// independent reference for the closure and cover tests below.
const std::vector<std::uint64_t> kDiv12 = {1, 2, 3, 4, 6, 12};

Relation divisibility_by_scan(const std::vector<std::uint64_t>& values) {
  Relation r(values.size());
  for (Element i = 0; i < values.size(); ++i)
    for (Element j = 0; j < values.size(); ++j)
      r.set(i, j, values[j] % values[i] == 0);
  return r;
}

const std::vector<ElementPair> kDiv12Covers = {
    {0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 4}, {3, 5}, {4, 5}};

}  // namespace

TEST_CASE("closure of the empty generator set is the identity") {
  Relation r = reflexive_transitive_closure({}, 3);
  CHECK(r == Relation::identity(3));
}

TEST_CASE("closure adds transitive pairs along a chain") {
  std::vector<ElementPair> pairs = {{0, 1}, {1, 2}};
  Relation r = reflexive_transitive_closure(pairs, 3);
  CHECK(r.at(0, 1));
  CHECK(r.at(1, 2));
  CHECK(r.at(0, 2));
  CHECK_FALSE(r.at(1, 0));
  CHECK_FALSE(r.at(2, 0));
}

TEST_CASE("closure of divisibility covers matches the pairwise divisibility test") {
  Relation closed = reflexive_transitive_closure(kDiv12Covers, 6);
  CHECK(closed == divisibility_by_scan(kDiv12));

  int non_reflexive = 0;
  for (Element i = 0; i < 6; ++i)
    for (Element j = 0; j < 6; ++j)
      if (i != j && closed.at(i, j)) ++non_reflexive;
  CHECK(non_reflexive == 12);
}

TEST_CASE("closure rejects out-of-range indices") {
  std::vector<ElementPair> pairs = {{0, 3}};
  CHECK_THROWS_AS(reflexive_transitive_closure(pairs, 3), std::invalid_argument);
}

TEST_CASE("validate accepts the identity and full divisibility orders") {
  CHECK_FALSE(validate_partial_order(Relation::identity(3)).has_value());

  std::vector<std::uint64_t> upto12(12);
  for (std::size_t i = 0; i < 12; ++i) upto12[i] = i + 1;
  CHECK_FALSE(validate_partial_order(divisibility_by_scan(upto12)).has_value());
}

TEST_CASE("validate reports the first violation deterministically") {
  Relation r = Relation::identity(3);
  r.set(0, 1);
  r.set(1, 0);
  auto v = validate_partial_order(r);
  REQUIRE(v.has_value());
  CHECK(v->kind == ViolationKind::Antisymmetry);
  CHECK(v->witness == std::vector<Element>{0, 1});

  Relation missing(2);
  missing.set(0, 0);
  auto refl = validate_partial_order(missing);
  REQUIRE(refl.has_value());
  CHECK(refl->kind == ViolationKind::Reflexivity);
  CHECK(refl->witness == std::vector<Element>{1});

  Relation intr = Relation::identity(3);
  intr.set(0, 1);
  intr.set(1, 2);
  auto tr = validate_partial_order(intr);
  REQUIRE(tr.has_value());
  CHECK(tr->kind == ViolationKind::Transitivity);
  CHECK(tr->witness == std::vector<Element>{0, 1, 2});
}

TEST_CASE("least and greatest on chains and divisibility") {
  // Chain 1 < 2 < ... < 12 by value; indices are value-1.
  Relation chain(12);
  for (Element i = 0; i < 12; ++i)
    for (Element j = 0; j < 12; ++j) chain.set(i, j, i <= j);
  std::vector<Element> eight_twelve = {7, 11};
  CHECK(least(chain, eight_twelve) == Element{7});
  CHECK(greatest(chain, eight_twelve) == Element{11});

  Relation div = divisibility_by_scan(kDiv12);  // labels 1 2 3 4 6 12
  std::vector<Element> two_three = {1, 2};
  CHECK_FALSE(least(div, two_three).has_value());
  std::vector<Element> four_six = {3, 4};
  CHECK_FALSE(greatest(div, four_six).has_value());

  std::vector<Element> evens = {1, 3, 4, 5};  // 2, 4, 6, 12
  CHECK(least(div, evens) == Element{1});
  std::vector<Element> divisors_of_six = {0, 1, 2, 4};  // 1, 2, 3, 6
  CHECK(greatest(div, divisors_of_six) == Element{4});

  CHECK_FALSE(least(div, {}).has_value());
  CHECK_FALSE(greatest(div, {}).has_value());
}

TEST_CASE("least, when present, is a member below the whole subset") {
  Lcg64 rng(7);
  for (int round = 0; round < 200; ++round) {
    std::size_t n = 2 + rng.below(4);
    std::vector<ElementPair> pairs;
    for (int k = static_cast<int>(rng.below(6)); k > 0; --k)
      pairs.emplace_back(rng.below(n), rng.below(n));
    Relation r = reflexive_transitive_closure(pairs, n);
    if (validate_partial_order(r)) continue;

    std::vector<Element> subset;
    for (Element e = 0; e < n; ++e)
      if (rng.bernoulli(0.6)) subset.push_back(e);
    auto m = least(r, subset);
    if (!m) continue;
    bool member = false;
    for (Element s : subset) {
      CHECK(r.at(*m, s));
      member |= s == *m;
    }
    CHECK(member);
  }
}

TEST_CASE("covers of the identity and of a chain") {
  CHECK(covers(Relation::identity(3)).empty());

  Relation chain = reflexive_transitive_closure(
      std::vector<ElementPair>{{0, 1}, {1, 2}}, 3);
  CHECK(covers(chain) == std::vector<ElementPair>{{0, 1}, {1, 2}});
}

TEST_CASE("covers of divisibility reproduce the diagram edges") {
  CHECK(covers(divisibility_by_scan(kDiv12)) == kDiv12Covers);
}

TEST_CASE("closure is extensive, monotone and idempotent on small generator sets") {
  Lcg64 rng(21);
  for (int round = 0; round < 300; ++round) {
    std::size_t n = 1 + rng.below(5);
    std::vector<ElementPair> gen;
    for (int k = static_cast<int>(rng.below(7)); k > 0; --k)
      gen.emplace_back(rng.below(n), rng.below(n));

    Relation closed = reflexive_transitive_closure(gen, n);
    for (const auto& [a, b] : gen) CHECK(closed.at(a, b));  // extensive

    // Monotone: closing a superset dominates.
    std::vector<ElementPair> more = gen;
    more.emplace_back(rng.below(n), rng.below(n));
    Relation closed_more = reflexive_transitive_closure(more, n);
    for (Element i = 0; i < n; ++i)
      for (Element j = 0; j < n; ++j)
        if (closed.at(i, j)) CHECK(closed_more.at(i, j));

    // Idempotent: closing the closure changes nothing.
    std::vector<ElementPair> as_pairs;
    for (Element i = 0; i < n; ++i)
      for (Element j = 0; j < n; ++j)
        if (closed.at(i, j)) as_pairs.emplace_back(i, j);
    CHECK(reflexive_transitive_closure(as_pairs, n) == closed);
  }
}

TEST_CASE("closure of covers reconstructs every partial order up to n = 5") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const Relation& r : enumerate_posets(n)) {
      auto edge_list = covers(r);
      CHECK(reflexive_transitive_closure(edge_list, n) == r);
    }
  }
}
