#include "generate.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "errors.hpp"
#include "laws.hpp"
#include "rng.hpp"

namespace mixlat {

namespace {

// Single letters for small carriers, x<i> beyond.
std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i)
    labels[i] = i < 26 ? std::string(1, static_cast<char>('a' + i))
                       : "x" + std::to_string(i);
  return labels;
}

}  // namespace

Biposet divisor_mixed_lattice(std::uint64_t N) {
  if (N == 0) throw std::invalid_argument("divisor_mixed_lattice: N must be >= 1");
  std::vector<std::uint64_t> divs;
  for (std::uint64_t d = 1; d <= N; ++d)
    if (N % d == 0) divs.push_back(d);

  const std::size_t n = divs.size();
  std::vector<std::string> labels(n);
  Relation leq(n), sleq(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = std::to_string(divs[i]);
    for (std::size_t j = 0; j < n; ++j) {
      leq.set(i, j, divs[i] <= divs[j]);
      sleq.set(i, j, divs[j] % divs[i] == 0);
    }
  }
  return Biposet(std::move(labels), std::move(leq), std::move(sleq));
}

std::vector<Relation> enumerate_posets(std::size_t n) {
  if (n > 5)
    throw std::invalid_argument("enumerate_posets: n must be <= 5 (got " +
                                std::to_string(n) + ")");
  // Antisymmetry first: one ternary digit per unordered pair {i, j} with
  // i < j (none, i->j, j->i), then a transitivity filter. This visits
  // 3^(n(n-1)/2) candidates instead of 2^(n(n-1)).
  std::vector<std::pair<Element, Element>> slots;
  for (Element i = 0; i < n; ++i)
    for (Element j = i + 1; j < n; ++j) slots.emplace_back(i, j);

  std::vector<Relation> out;
  std::vector<int> digits(slots.size(), 0);
  for (;;) {
    Relation r = Relation::identity(n);
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if (digits[s] == 1) r.set(slots[s].first, slots[s].second);
      else if (digits[s] == 2) r.set(slots[s].second, slots[s].first);
    }
    if (!validate_partial_order(r)) out.push_back(std::move(r));

    std::size_t pos = 0;
    while (pos < digits.size() && digits[pos] == 2) digits[pos++] = 0;
    if (pos == digits.size()) break;
    ++digits[pos];
  }
  std::sort(out.begin(), out.end());
  return out;
}

MixedLatticeEnumeration enumerate_mixed_lattices(std::size_t n) {
  if (n > 4)
    throw std::invalid_argument("enumerate_mixed_lattices: n must be <= 4 (got " +
                                std::to_string(n) + ")");
  MixedLatticeEnumeration result;
  result.summary.n = n;

  std::vector<Relation> posets = enumerate_posets(n);
  result.summary.posets = posets.size();
  std::vector<std::string> labels = default_labels(n);

  for (const Relation& leq : posets)
    for (const Relation& sleq : posets) {
      ++result.summary.pairs_examined;
      Biposet b(labels, leq, sleq);
      if (!b.is_mixed_lattice()) continue;
      ++result.summary.mixed_lattices;
      if (check_law(b, LawId::Qr1).holds)
        ++result.summary.quasi_regular;
      else if (check_law(b, LawId::Prereg).holds)
        ++result.summary.pre_regular_only;
      else if (check_law(b, LawId::R0).holds)
        ++result.summary.r0_only;
      else
        ++result.summary.neither;
      result.structures.push_back(std::move(b));
    }
  return result;
}

Biposet random_biposet(std::size_t n, std::uint64_t seed, double density) {
  Lcg64 rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<ElementPair> leq_pairs, sleq_pairs;
    for (Element i = 0; i < n; ++i)
      for (Element j = 0; j < n; ++j) {
        if (i == j) continue;
        if (rng.bernoulli(density)) leq_pairs.emplace_back(i, j);
      }
    for (Element i = 0; i < n; ++i)
      for (Element j = 0; j < n; ++j) {
        if (i == j) continue;
        if (rng.bernoulli(density)) sleq_pairs.emplace_back(i, j);
      }
    Relation leq = reflexive_transitive_closure(leq_pairs, n);
    Relation sleq = reflexive_transitive_closure(sleq_pairs, n);
    if (!validate_partial_order(leq) && !validate_partial_order(sleq))
      return Biposet(default_labels(n), std::move(leq), std::move(sleq));
  }
  return Biposet(default_labels(n), Relation::identity(n), Relation::identity(n));
}

Biposet product(const Biposet& b1, const Biposet& b2) {
  require_mixed_lattice(b1, "product");
  require_mixed_lattice(b2, "product");

  const std::size_t n1 = b1.size(), n2 = b2.size();
  const std::size_t n = n1 * n2;
  std::vector<std::string> labels(n);
  Relation leq(n), sleq(n);
  auto idx = [n2](Element i, Element j) { return i * n2 + j; };

  for (Element i = 0; i < n1; ++i)
    for (Element j = 0; j < n2; ++j) {
      labels[idx(i, j)] = "(" + b1.label(i) + "," + b2.label(j) + ")";
      for (Element k = 0; k < n1; ++k)
        for (Element l = 0; l < n2; ++l) {
          leq.set(idx(i, j), idx(k, l), b1.leq(i, k) && b2.leq(j, l));
          sleq.set(idx(i, j), idx(k, l), b1.sleq(i, k) && b2.sleq(j, l));
        }
    }
  return Biposet(std::move(labels), std::move(leq), std::move(sleq));
}

std::optional<Element> oracle_envelope(const Biposet& b, Element x, Element y,
                                       EnvelopeKind kind) {
  const Relation& leq = b.leq_relation();
  const Relation& sleq = b.sleq_relation();
  const std::size_t n = b.size();

  std::vector<Element> filtered;
  for (Element w = 0; w < n; ++w) {
    bool in = kind == EnvelopeKind::Upper ? sleq.at(x, w) && leq.at(y, w)
                                          : sleq.at(w, x) && leq.at(w, y);
    if (in) filtered.push_back(w);
  }
  for (Element c : filtered) {
    bool extremal = true;
    for (Element s : filtered) {
      bool cmp = kind == EnvelopeKind::Upper ? leq.at(c, s) : leq.at(s, c);
      if (!cmp) {
        extremal = false;
        break;
      }
    }
    if (extremal) return c;
  }
  return std::nullopt;
}

}  // namespace mixlat
