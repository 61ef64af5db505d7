#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "biposet.hpp"

namespace mixlat {

// A candidate mixed-lattice algebra: two total n x n operation tables.
// Tables are accepted as data and checked on demand, so near-miss algebras
// can be diagnosed (which axiom breaks, and where).
class AlgebraTables {
 public:
  // upper/lower are row-major: entry (x, y) = row x, column y.
  // Throws structure_error if the tables are not n x n with entries < n or
  // if labels repeat.
  AlgebraTables(std::vector<std::string> labels, std::vector<Element> upper,
                std::vector<Element> lower);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Element x) const { return labels_[x]; }

  Element up(Element x, Element y) const { return upper_[x * labels_.size() + y]; }
  Element lo(Element x, Element y) const { return lower_[x * labels_.size() + y]; }

  const std::vector<Element>& upper_table() const { return upper_; }
  const std::vector<Element>& lower_table() const { return lower_; }

  bool operator==(const AlgebraTables&) const = default;

 private:
  std::vector<std::string> labels_;
  std::vector<Element> upper_;
  std::vector<Element> lower_;
};

// The axiom suite. ^ is the upper table, v the lower table.
//
//   M1    x^y = xvy  <=>  x = y
//   M2a   (xvy)^x = x   and  (x^y)vx = x
//   M2b   x^(yvx) = x   and  xv(y^x) = x
//   M3a   zv(x^y) = [zv(x^y)]^(zvy)
//   M3b   z^(xvy) = [z^(xvy)]v(z^y)
//   M4a   (x^y)vz = [(x^y)vz]^(xvz)
//   M4b   (xvy)^z = [(xvy)^z]v(x^z)
//   Q1    zv(x^y) = (zvx)^[zv(x^y)]        (quasi-regularity)
//   Q2    z^(xvy) = (z^x)v[z^(xvy)]
//   P     yvx = x  implies  xvy = x        (pre-regularity)
//   R1    (xvw)v[(x^y)v(u^w)] = xvw        (M3a/M4a combined, vars x y u w)
//   R2    (x^w)^[(xvy)^(uvw)] = x^w        (M3b/M4b combined, vars x y u w)
enum class AxiomId { M1, M2a, M2b, M3a, M3b, M4a, M4b, Q1, Q2, P, R1, R2 };

inline constexpr std::array<AxiomId, 12> kAllAxioms = {
    AxiomId::M1, AxiomId::M2a, AxiomId::M2b, AxiomId::M3a,
    AxiomId::M3b, AxiomId::M4a, AxiomId::M4b, AxiomId::Q1,
    AxiomId::Q2, AxiomId::P,   AxiomId::R1,  AxiomId::R2,
};

std::string_view axiom_name(AxiomId id);

struct AxiomVerdict {
  bool holds = true;
  std::vector<Element> witness;  // lexicographically first falsifying tuple
};

struct AxiomReport {
  std::array<AxiomVerdict, kAllAxioms.size()> verdicts;  // indexed like kAllAxioms

  const AxiomVerdict& operator[](AxiomId id) const;
  // M1 through M4b: the defining axioms.
  bool core_holds() const;
};

// Exhaustive evaluation over all tuples each axiom quantifies.
AxiomReport check_axioms(const AlgebraTables& a);

// Identities every algebra satisfying M1-M4b inherits:
//   idempotence       xvx = x and x^x = x
//   equivalences      x = yvx <=> y = x^y,  y = yvx <=> x = x^y
//   lower_iteration   xv(xvy) = xvy and (xvy)vy = xvy
//   upper_iteration   x^(x^y) = x^y and (x^y)^y = x^y
struct DerivedIdentityReport {
  bool applicable = false;       // false when an M axiom fails
  AxiomId failed_axiom{};        // which one, when !applicable
  std::vector<Element> failed_witness;
  IdentityVerdict idempotence, equivalences, lower_iteration, upper_iteration;

  bool all_hold() const {
    return applicable && idempotence.holds && equivalences.holds &&
           lower_iteration.holds && upper_iteration.holds;
  }
};

DerivedIdentityReport derived_identities(const AlgebraTables& a);

// Partial orders recovered from the tables:
//   x sleq y  <=>  yvx = x        x leq y  <=>  xvy = x
// Requires M1-M4b (checked; refusal via structure_error otherwise). If the
// axioms pass but a derived relation fails validation the engine itself is
// at fault, reported as std::logic_error.
Biposet orders_from_algebra(const AlgebraTables& a);

// Envelope tables of a mixed lattice satisfying the r0 law, packaged as an
// algebra. Refuses (structure_error) naming the first missing envelope or
// the r0 witness pair.
AlgebraTables algebra_from_biposet(const Biposet& b);

}  // namespace mixlat
