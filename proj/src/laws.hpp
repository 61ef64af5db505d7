#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "biposet.hpp"

namespace mixlat {

// Every named law the engine can check on a mixed lattice. In the formulas
// below ^ is the upper envelope, v the lower envelope.
//
//   R0         x leq y <=> y^x = y <=> xvy = x
//   R0Char     y sleq x and x leq y  imply  x = y   (equivalent to R0)
//   Prereg     x sleq y  implies  x leq y
//   Qr1        x sleq z and y sleq z  imply  x^y sleq z
//   Qr2        z sleq x and z sleq y  imply  z sleq xvy
//   MonoLower  x sleq y  implies  zvx sleq zvy
//   MonoUpper  x sleq y  implies  z^x sleq z^y
//   Dist1      (zvx)^(zvy) leq zv(x^y)
//   Dist2      z^(xvy) leq (z^x)v(z^y)
//   Ass1       xv(yvz) leq (xvy)vz
//   Ass2       (x^y)^z leq x^(y^z)
//   Mod1       (zvx)^(zvy) leq zv((zvx)^y)
//   CondJ      x sleq z  implies  x^(zvy) leq zv(x^y)
//
// Qr1 through CondJ are the ten conditions that are equivalent on every
// mixed lattice; a structure satisfying them is called quasi-regular.
enum class LawId {
  R0,
  R0Char,
  Prereg,
  Qr1,
  Qr2,
  MonoLower,
  MonoUpper,
  Dist1,
  Dist2,
  Ass1,
  Ass2,
  Mod1,
  CondJ,
};

inline constexpr std::array<LawId, 13> kAllLaws = {
    LawId::R0,       LawId::R0Char,    LawId::Prereg, LawId::Qr1,
    LawId::Qr2,      LawId::MonoLower, LawId::MonoUpper,
    LawId::Dist1,    LawId::Dist2,     LawId::Ass1,   LawId::Ass2,
    LawId::Mod1,     LawId::CondJ,
};

// The ten equivalent conditions, in report order.
inline constexpr std::array<LawId, 10> kEquivalentLaws = {
    LawId::Qr1,   LawId::MonoLower, LawId::Dist1, LawId::Ass1,
    LawId::Qr2,   LawId::MonoUpper, LawId::Dist2, LawId::Ass2,
    LawId::Mod1,  LawId::CondJ,
};

std::string_view law_name(LawId id);

struct LawVerdict {
  bool holds = true;
  // Lexicographically first falsifying assignment, in (x), (x, y) or
  // (x, y, z) order depending on the law's arity. Empty when it holds.
  std::vector<Element> witness;
};

// Exhaustive evaluation of one law. Requires b to be a mixed lattice.
LawVerdict check_law(const Biposet& b, LawId id);

struct LawReport {
  std::array<LawVerdict, kAllLaws.size()> verdicts;  // indexed like kAllLaws
  bool quasi_regular = false;           // verdict of Qr1
  bool equivalence_consistent = false;  // the ten share one boolean

  const LawVerdict& operator[](LawId id) const;
};

LawReport full_report(const Biposet& b);

// The conditional associativity / distributivity equalities that hold on
// quasi-regular mixed lattices:
//   assoc_lower  y sleq x or z sleq y or y leq z   =>  xv(yvz) = (xvy)vz
//   dist_lower   x sleq y or y leq x               =>  (zvx)^(zvy) = zv(x^y)
//   assoc_upper  x sleq y or y sleq z or z leq y   =>  x^(y^z) = (x^y)^z
//   dist_upper   y sleq x or x leq y               =>  (z^x)v(z^y) = z^(xvy)
// When the structure is not quasi-regular the report is marked not
// applicable and carries the Qr1 witness instead.
struct ConditionalEqualityReport {
  bool applicable = false;
  std::vector<Element> qr1_witness;  // engaged only when !applicable
  LawVerdict assoc_lower, dist_lower, assoc_upper, dist_upper;

  bool all_hold() const {
    return applicable && assoc_lower.holds && dist_lower.holds &&
           assoc_upper.holds && dist_upper.holds;
  }
};

ConditionalEqualityReport check_conditional_equalities(const Biposet& b);

}  // namespace mixlat
