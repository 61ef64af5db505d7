#include "biposet.hpp"

#include <algorithm>
#include <unordered_set>

#include "errors.hpp"

namespace mixlat {

namespace {

// Least (under leq) member of { w : x sleq w and y leq w }. Single pass to
// find the surviving candidate, second pass to confirm it is below the
// whole set; no least element means absent.
std::optional<Element> compute_upper(const Relation& leq, const Relation& sleq,
                                     Element x, Element y) {
  const std::size_t n = leq.size();
  bool have = false;
  Element m = 0;
  for (Element w = 0; w < n; ++w) {
    if (!sleq.at(x, w) || !leq.at(y, w)) continue;
    if (!have || leq.at(w, m)) {
      m = w;
      have = true;
    }
  }
  if (!have) return std::nullopt;
  for (Element w = 0; w < n; ++w) {
    if (!sleq.at(x, w) || !leq.at(y, w)) continue;
    if (!leq.at(m, w)) return std::nullopt;
  }
  return m;
}

std::optional<Element> compute_lower(const Relation& leq, const Relation& sleq,
                                     Element x, Element y) {
  const std::size_t n = leq.size();
  bool have = false;
  Element m = 0;
  for (Element w = 0; w < n; ++w) {
    if (!sleq.at(w, x) || !leq.at(w, y)) continue;
    if (!have || leq.at(m, w)) {
      m = w;
      have = true;
    }
  }
  if (!have) return std::nullopt;
  for (Element w = 0; w < n; ++w) {
    if (!sleq.at(w, x) || !leq.at(w, y)) continue;
    if (!leq.at(w, m)) return std::nullopt;
  }
  return m;
}

}  // namespace

Biposet::Biposet(std::vector<std::string> labels, Relation leq, Relation sleq)
    : labels_(std::move(labels)), leq_(std::move(leq)), sleq_(std::move(sleq)) {
  const std::size_t n = labels_.size();
  if (leq_.size() != n || sleq_.size() != n)
    throw structure_error("relation size does not match label count");
  {
    std::unordered_set<std::string> seen;
    for (const auto& l : labels_)
      if (!seen.insert(l).second)
        throw structure_error("duplicate label '" + l + "'");
  }
  if (auto v = validate_partial_order(leq_))
    throw structure_error("leq is not a partial order: " + v->describe(labels_));
  if (auto v = validate_partial_order(sleq_))
    throw structure_error("sleq is not a partial order: " + v->describe(labels_));

  tables_.n = n;
  tables_.upper.resize(n * n);
  tables_.lower.resize(n * n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      tables_.upper[x * n + y] = compute_upper(leq_, sleq_, x, y);
      tables_.lower[x * n + y] = compute_lower(leq_, sleq_, x, y);
    }
  for (Element x = 0; x < n && !missing_; ++x)
    for (Element y = 0; y < n && !missing_; ++y) {
      if (!tables_.up(x, y)) missing_ = MissingEnvelope{x, y, EnvelopeKind::Upper};
      else if (!tables_.lo(x, y)) missing_ = MissingEnvelope{x, y, EnvelopeKind::Lower};
    }
}

void require_mixed_lattice(const Biposet& b, const char* operation) {
  const auto& m = b.first_missing_envelope();
  if (!m) return;
  throw structure_error(std::string(operation) + ": not a mixed lattice, no " +
                        envelope_kind_name(m->kind) + " envelope for (" +
                        b.label(m->x) + ", " + b.label(m->y) + ")");
}

bool BasicIdentityReport::all_hold() const {
  return idempotence.holds && bounds.holds && monotonicity.holds &&
         characterization.holds && absorption.holds &&
         (!r0_absorption || r0_absorption->holds);
}

BasicIdentityReport check_basic_identities(const Biposet& b) {
  require_mixed_lattice(b, "check_basic_identities");
  const std::size_t n = b.size();
  BasicIdentityReport rep;

  auto fail = [](IdentityVerdict& v, std::initializer_list<Element> w) {
    if (!v.holds) return;
    v.holds = false;
    v.witness.assign(w);
  };

  for (Element x = 0; x < n && rep.idempotence.holds; ++x)
    if (b.up(x, x) != x || b.lo(x, x) != x) fail(rep.idempotence, {x});

  for (Element x = 0; x < n && rep.bounds.holds; ++x)
    for (Element y = 0; y < n && rep.bounds.holds; ++y) {
      Element u = b.up(x, y), l = b.lo(x, y);
      if (!(b.sleq(l, x) && b.sleq(x, u) && b.leq(l, y) && b.leq(y, u)))
        fail(rep.bounds, {x, y});
    }

  for (Element x = 0; x < n && rep.monotonicity.holds; ++x)
    for (Element y = 0; y < n && rep.monotonicity.holds; ++y)
      for (Element u = 0; u < n && rep.monotonicity.holds; ++u) {
        if (!b.sleq(x, u)) continue;
        for (Element v = 0; v < n && rep.monotonicity.holds; ++v) {
          if (!b.leq(y, v)) continue;
          if (!b.leq(b.up(x, y), b.up(u, v)) || !b.leq(b.lo(x, y), b.lo(u, v)))
            fail(rep.monotonicity, {x, y, u, v});
        }
      }

  for (Element x = 0; x < n && rep.characterization.holds; ++x)
    for (Element y = 0; y < n && rep.characterization.holds; ++y) {
      bool rel = b.sleq(x, y);
      if ((b.up(x, y) == y) != rel || (b.lo(y, x) == x) != rel)
        fail(rep.characterization, {x, y});
    }

  for (Element x = 0; x < n && rep.absorption.holds; ++x)
    for (Element y = 0; y < n && rep.absorption.holds; ++y)
      if (b.up(b.lo(x, y), x) != x || b.lo(b.up(x, y), x) != x)
        fail(rep.absorption, {x, y});

  // The dual absorption pair needs the r0 law; evaluate it inline (the laws
  // module depends on this one, not the other way around).
  rep.r0_holds = true;
  for (Element x = 0; x < n && rep.r0_holds; ++x)
    for (Element y = 0; y < n && rep.r0_holds; ++y) {
      bool rel = b.leq(x, y);
      if ((b.up(y, x) == y) != rel || (b.lo(x, y) == x) != rel) rep.r0_holds = false;
    }
  if (rep.r0_holds) {
    IdentityVerdict v;
    for (Element x = 0; x < n && v.holds; ++x)
      for (Element y = 0; y < n && v.holds; ++y)
        if (b.up(x, b.lo(y, x)) != x || b.lo(x, b.up(y, x)) != x) fail(v, {x, y});
    rep.r0_absorption = std::move(v);
  }
  return rep;
}

SublatticeVerdict is_mixed_sublattice(const Biposet& b, std::span<const Element> subset) {
  require_mixed_lattice(b, "is_mixed_sublattice");
  if (subset.empty()) throw structure_error("is_mixed_sublattice: empty subset");

  std::vector<bool> in(b.size(), false);
  for (Element e : subset) in[e] = true;
  std::vector<Element> members;
  for (Element e = 0; e < b.size(); ++e)
    if (in[e]) members.push_back(e);

  SublatticeVerdict verdict;
  for (Element x : members)
    for (Element y : members) {
      Element u = b.up(x, y);
      if (!in[u]) {
        verdict.closed = false;
        verdict.witness = SublatticeVerdict::Escape{x, y, EnvelopeKind::Upper, u};
        return verdict;
      }
      Element l = b.lo(x, y);
      if (!in[l]) {
        verdict.closed = false;
        verdict.witness = SublatticeVerdict::Escape{x, y, EnvelopeKind::Lower, l};
        return verdict;
      }
    }
  return verdict;
}

Biposet induced_substructure(const Biposet& b, std::span<const Element> subset) {
  if (subset.empty()) throw structure_error("induced_substructure: empty subset");
  std::vector<Element> members(subset.begin(), subset.end());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());

  const std::size_t m = members.size();
  std::vector<std::string> labels(m);
  Relation leq(m), sleq(m);
  for (std::size_t i = 0; i < m; ++i) {
    labels[i] = b.label(members[i]);
    for (std::size_t j = 0; j < m; ++j) {
      leq.set(i, j, b.leq(members[i], members[j]));
      sleq.set(i, j, b.sleq(members[i], members[j]));
    }
  }
  return Biposet(std::move(labels), std::move(leq), std::move(sleq));
}

}  // namespace mixlat
