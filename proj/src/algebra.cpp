#include "algebra.hpp"

#include <stdexcept>
#include <unordered_set>

#include "errors.hpp"
#include "laws.hpp"

namespace mixlat {

AlgebraTables::AlgebraTables(std::vector<std::string> labels,
                             std::vector<Element> upper, std::vector<Element> lower)
    : labels_(std::move(labels)), upper_(std::move(upper)), lower_(std::move(lower)) {
  const std::size_t n = labels_.size();
  if (upper_.size() != n * n || lower_.size() != n * n)
    throw structure_error("operation tables must be n x n");
  for (Element e : upper_)
    if (e >= n) throw structure_error("upper table entry out of range");
  for (Element e : lower_)
    if (e >= n) throw structure_error("lower table entry out of range");
  std::unordered_set<std::string> seen;
  for (const auto& l : labels_)
    if (!seen.insert(l).second) throw structure_error("duplicate label '" + l + "'");
}

std::string_view axiom_name(AxiomId id) {
  switch (id) {
    case AxiomId::M1: return "M1";
    case AxiomId::M2a: return "M2a";
    case AxiomId::M2b: return "M2b";
    case AxiomId::M3a: return "M3a";
    case AxiomId::M3b: return "M3b";
    case AxiomId::M4a: return "M4a";
    case AxiomId::M4b: return "M4b";
    case AxiomId::Q1: return "Q1";
    case AxiomId::Q2: return "Q2";
    case AxiomId::P: return "P";
    case AxiomId::R1: return "R1";
    case AxiomId::R2: return "R2";
  }
  return "?";
}

namespace {

template <typename F>
AxiomVerdict scan2(std::size_t n, F ok) {
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (!ok(x, y)) return {false, {x, y}};
  return {};
}

template <typename F>
AxiomVerdict scan3(std::size_t n, F ok) {
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        if (!ok(x, y, z)) return {false, {x, y, z}};
  return {};
}

template <typename F>
AxiomVerdict scan4(std::size_t n, F ok) {
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element u = 0; u < n; ++u)
        for (Element v = 0; v < n; ++v)
          if (!ok(x, y, u, v)) return {false, {x, y, u, v}};
  return {};
}

AxiomVerdict check_one(const AlgebraTables& a, AxiomId id) {
  const std::size_t n = a.size();
  switch (id) {
    case AxiomId::M1:
      return scan2(n, [&](Element x, Element y) {
        return (a.up(x, y) == a.lo(x, y)) == (x == y);
      });
    case AxiomId::M2a:
      return scan2(n, [&](Element x, Element y) {
        return a.up(a.lo(x, y), x) == x && a.lo(a.up(x, y), x) == x;
      });
    case AxiomId::M2b:
      return scan2(n, [&](Element x, Element y) {
        return a.up(x, a.lo(y, x)) == x && a.lo(x, a.up(y, x)) == x;
      });
    case AxiomId::M3a:
      return scan3(n, [&](Element x, Element y, Element z) {
        Element t = a.lo(z, a.up(x, y));
        return t == a.up(t, a.lo(z, y));
      });
    case AxiomId::M3b:
      return scan3(n, [&](Element x, Element y, Element z) {
        Element t = a.up(z, a.lo(x, y));
        return t == a.lo(t, a.up(z, y));
      });
    case AxiomId::M4a:
      return scan3(n, [&](Element x, Element y, Element z) {
        Element t = a.lo(a.up(x, y), z);
        return t == a.up(t, a.lo(x, z));
      });
    case AxiomId::M4b:
      return scan3(n, [&](Element x, Element y, Element z) {
        Element t = a.up(a.lo(x, y), z);
        return t == a.lo(t, a.up(x, z));
      });
    case AxiomId::Q1:
      return scan3(n, [&](Element x, Element y, Element z) {
        Element t = a.lo(z, a.up(x, y));
        return t == a.up(a.lo(z, x), t);
      });
    case AxiomId::Q2:
      return scan3(n, [&](Element x, Element y, Element z) {
        Element t = a.up(z, a.lo(x, y));
        return t == a.lo(a.up(z, x), t);
      });
    case AxiomId::P:
      return scan2(n, [&](Element x, Element y) {
        return a.lo(y, x) != x || a.lo(x, y) == x;
      });
    case AxiomId::R1:
      return scan4(n, [&](Element x, Element y, Element u, Element v) {
        return a.lo(a.lo(x, v), a.lo(a.up(x, y), a.up(u, v))) == a.lo(x, v);
      });
    case AxiomId::R2:
      return scan4(n, [&](Element x, Element y, Element u, Element v) {
        return a.up(a.up(x, v), a.up(a.lo(x, y), a.lo(u, v))) == a.up(x, v);
      });
  }
  throw std::invalid_argument("unknown axiom id");
}

}  // namespace

const AxiomVerdict& AxiomReport::operator[](AxiomId id) const {
  for (std::size_t i = 0; i < kAllAxioms.size(); ++i)
    if (kAllAxioms[i] == id) return verdicts[i];
  throw std::invalid_argument("unknown axiom id");
}

bool AxiomReport::core_holds() const {
  for (AxiomId id : {AxiomId::M1, AxiomId::M2a, AxiomId::M2b, AxiomId::M3a,
                     AxiomId::M3b, AxiomId::M4a, AxiomId::M4b})
    if (!(*this)[id].holds) return false;
  return true;
}

AxiomReport check_axioms(const AlgebraTables& a) {
  AxiomReport rep;
  for (std::size_t i = 0; i < kAllAxioms.size(); ++i)
    rep.verdicts[i] = check_one(a, kAllAxioms[i]);
  return rep;
}

DerivedIdentityReport derived_identities(const AlgebraTables& a) {
  DerivedIdentityReport rep;
  AxiomReport axioms = check_axioms(a);
  for (AxiomId id : {AxiomId::M1, AxiomId::M2a, AxiomId::M2b, AxiomId::M3a,
                     AxiomId::M3b, AxiomId::M4a, AxiomId::M4b}) {
    if (!axioms[id].holds) {
      rep.applicable = false;
      rep.failed_axiom = id;
      rep.failed_witness = axioms[id].witness;
      return rep;
    }
  }
  rep.applicable = true;

  const std::size_t n = a.size();
  auto fail = [](IdentityVerdict& v, std::vector<Element> w) {
    if (!v.holds) return;
    v.holds = false;
    v.witness = std::move(w);
  };

  for (Element x = 0; x < n && rep.idempotence.holds; ++x)
    if (a.lo(x, x) != x || a.up(x, x) != x) fail(rep.idempotence, {x});

  for (Element x = 0; x < n && rep.equivalences.holds; ++x)
    for (Element y = 0; y < n && rep.equivalences.holds; ++y) {
      bool ok = ((a.lo(y, x) == x) == (a.up(x, y) == y)) &&
                ((a.lo(y, x) == y) == (a.up(x, y) == x));
      if (!ok) fail(rep.equivalences, {x, y});
    }

  for (Element x = 0; x < n && rep.lower_iteration.holds; ++x)
    for (Element y = 0; y < n && rep.lower_iteration.holds; ++y)
      if (a.lo(x, a.lo(x, y)) != a.lo(x, y) || a.lo(a.lo(x, y), y) != a.lo(x, y))
        fail(rep.lower_iteration, {x, y});

  for (Element x = 0; x < n && rep.upper_iteration.holds; ++x)
    for (Element y = 0; y < n && rep.upper_iteration.holds; ++y)
      if (a.up(x, a.up(x, y)) != a.up(x, y) || a.up(a.up(x, y), y) != a.up(x, y))
        fail(rep.upper_iteration, {x, y});

  return rep;
}

Biposet orders_from_algebra(const AlgebraTables& a) {
  AxiomReport axioms = check_axioms(a);
  for (AxiomId id : {AxiomId::M1, AxiomId::M2a, AxiomId::M2b, AxiomId::M3a,
                     AxiomId::M3b, AxiomId::M4a, AxiomId::M4b}) {
    const AxiomVerdict& v = axioms[id];
    if (!v.holds) {
      std::string msg = "orders_from_algebra: axiom ";
      msg += axiom_name(id);
      msg += " fails at (";
      for (std::size_t i = 0; i < v.witness.size(); ++i) {
        if (i) msg += ", ";
        msg += a.label(v.witness[i]);
      }
      msg += ")";
      throw structure_error(msg);
    }
  }

  const std::size_t n = a.size();
  Relation leq(n), sleq(n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (a.lo(x, y) == x) leq.set(x, y);
      if (a.lo(y, x) == x) sleq.set(x, y);
    }

  // The axioms guarantee both relations are partial orders; a failure here
  // means the checker or the derivation above is broken, not the input.
  if (auto v = validate_partial_order(leq))
    throw std::logic_error("orders_from_algebra: derived leq invalid despite axioms: " +
                           v->describe(a.labels()));
  if (auto v = validate_partial_order(sleq))
    throw std::logic_error("orders_from_algebra: derived sleq invalid despite axioms: " +
                           v->describe(a.labels()));
  return Biposet(a.labels(), std::move(leq), std::move(sleq));
}

AlgebraTables algebra_from_biposet(const Biposet& b) {
  require_mixed_lattice(b, "algebra_from_biposet");
  LawVerdict r0 = check_law(b, LawId::R0Char);
  if (!r0.holds)
    throw structure_error("algebra_from_biposet: r0 does not hold, witness ('" +
                          b.label(r0.witness[0]) + "' leq '" + b.label(r0.witness[1]) +
                          "' and '" + b.label(r0.witness[1]) + "' sleq '" +
                          b.label(r0.witness[0]) + "' with distinct elements)");

  const std::size_t n = b.size();
  std::vector<Element> upper(n * n), lower(n * n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      upper[x * n + y] = b.up(x, y);
      lower[x * n + y] = b.lo(x, y);
    }
  return AlgebraTables(b.labels(), std::move(upper), std::move(lower));
}

}  // namespace mixlat
