#include "laws.hpp"

#include <stdexcept>

namespace mixlat {

std::string_view law_name(LawId id) {
  switch (id) {
    case LawId::R0: return "r0";
    case LawId::R0Char: return "r0char";
    case LawId::Prereg: return "prereg";
    case LawId::Qr1: return "qr1";
    case LawId::Qr2: return "qr2";
    case LawId::MonoLower: return "mono_lower";
    case LawId::MonoUpper: return "mono_upper";
    case LawId::Dist1: return "dist1";
    case LawId::Dist2: return "dist2";
    case LawId::Ass1: return "ass1";
    case LawId::Ass2: return "ass2";
    case LawId::Mod1: return "mod1";
    case LawId::CondJ: return "cond_j";
  }
  return "?";
}

namespace {

// Evaluate a two-variable law; `ok(x, y)` must return whether the formula
// holds at the assignment. Scan order fixes the witness.
template <typename F>
LawVerdict scan2(std::size_t n, F ok) {
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (!ok(x, y)) return {false, {x, y}};
  return {};
}

template <typename F>
LawVerdict scan3(std::size_t n, F ok) {
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        if (!ok(x, y, z)) return {false, {x, y, z}};
  return {};
}

}  // namespace

LawVerdict check_law(const Biposet& b, LawId id) {
  require_mixed_lattice(b, "check_law");
  const std::size_t n = b.size();

  switch (id) {
    case LawId::R0:
      return scan2(n, [&](Element x, Element y) {
        const bool rel = b.leq(x, y);
        return (b.up(y, x) == y) == rel && (b.lo(x, y) == x) == rel;
      });
    case LawId::R0Char:
      return scan2(n, [&](Element x, Element y) {
        return !(b.sleq(y, x) && b.leq(x, y)) || x == y;
      });
    case LawId::Prereg:
      return scan2(n, [&](Element x, Element y) {
        return !b.sleq(x, y) || b.leq(x, y);
      });
    case LawId::Qr1:
      return scan3(n, [&](Element x, Element y, Element z) {
        return !(b.sleq(x, z) && b.sleq(y, z)) || b.sleq(b.up(x, y), z);
      });
    case LawId::Qr2:
      return scan3(n, [&](Element x, Element y, Element z) {
        return !(b.sleq(z, x) && b.sleq(z, y)) || b.sleq(z, b.lo(x, y));
      });
    case LawId::MonoLower:
      return scan3(n, [&](Element x, Element y, Element z) {
        return !b.sleq(x, y) || b.sleq(b.lo(z, x), b.lo(z, y));
      });
    case LawId::MonoUpper:
      return scan3(n, [&](Element x, Element y, Element z) {
        return !b.sleq(x, y) || b.sleq(b.up(z, x), b.up(z, y));
      });
    case LawId::Dist1:
      return scan3(n, [&](Element x, Element y, Element z) {
        return b.leq(b.up(b.lo(z, x), b.lo(z, y)), b.lo(z, b.up(x, y)));
      });
    case LawId::Dist2:
      return scan3(n, [&](Element x, Element y, Element z) {
        return b.leq(b.up(z, b.lo(x, y)), b.lo(b.up(z, x), b.up(z, y)));
      });
    case LawId::Ass1:
      return scan3(n, [&](Element x, Element y, Element z) {
        return b.leq(b.lo(x, b.lo(y, z)), b.lo(b.lo(x, y), z));
      });
    case LawId::Ass2:
      return scan3(n, [&](Element x, Element y, Element z) {
        return b.leq(b.up(b.up(x, y), z), b.up(x, b.up(y, z)));
      });
    case LawId::Mod1:
      return scan3(n, [&](Element x, Element y, Element z) {
        return b.leq(b.up(b.lo(z, x), b.lo(z, y)), b.lo(z, b.up(b.lo(z, x), y)));
      });
    case LawId::CondJ:
      return scan3(n, [&](Element x, Element y, Element z) {
        return !b.sleq(x, z) || b.leq(b.up(x, b.lo(z, y)), b.lo(z, b.up(x, y)));
      });
  }
  throw std::invalid_argument("unknown law id");
}

const LawVerdict& LawReport::operator[](LawId id) const {
  for (std::size_t i = 0; i < kAllLaws.size(); ++i)
    if (kAllLaws[i] == id) return verdicts[i];
  throw std::invalid_argument("unknown law id");
}

LawReport full_report(const Biposet& b) {
  require_mixed_lattice(b, "full_report");
  LawReport rep;
  for (std::size_t i = 0; i < kAllLaws.size(); ++i)
    rep.verdicts[i] = check_law(b, kAllLaws[i]);
  rep.quasi_regular = rep[LawId::Qr1].holds;
  rep.equivalence_consistent = true;
  for (LawId id : kEquivalentLaws)
    if (rep[id].holds != rep.quasi_regular) rep.equivalence_consistent = false;
  return rep;
}

ConditionalEqualityReport check_conditional_equalities(const Biposet& b) {
  require_mixed_lattice(b, "check_conditional_equalities");
  ConditionalEqualityReport rep;

  LawVerdict qr1 = check_law(b, LawId::Qr1);
  if (!qr1.holds) {
    rep.applicable = false;
    rep.qr1_witness = std::move(qr1.witness);
    return rep;
  }
  rep.applicable = true;

  const std::size_t n = b.size();
  auto scan = [&](auto ok) {
    LawVerdict v;
    for (Element x = 0; x < n && v.holds; ++x)
      for (Element y = 0; y < n && v.holds; ++y)
        for (Element z = 0; z < n && v.holds; ++z)
          if (!ok(x, y, z)) v = {false, {x, y, z}};
    return v;
  };

  rep.assoc_lower = scan([&](Element x, Element y, Element z) {
    if (!(b.sleq(y, x) || b.sleq(z, y) || b.leq(y, z))) return true;
    return b.lo(x, b.lo(y, z)) == b.lo(b.lo(x, y), z);
  });
  rep.dist_lower = scan([&](Element x, Element y, Element z) {
    if (!(b.sleq(x, y) || b.leq(y, x))) return true;
    return b.up(b.lo(z, x), b.lo(z, y)) == b.lo(z, b.up(x, y));
  });
  rep.assoc_upper = scan([&](Element x, Element y, Element z) {
    if (!(b.sleq(x, y) || b.sleq(y, z) || b.leq(z, y))) return true;
    return b.up(x, b.up(y, z)) == b.up(b.up(x, y), z);
  });
  rep.dist_upper = scan([&](Element x, Element y, Element z) {
    if (!(b.sleq(y, x) || b.leq(x, y))) return true;
    return b.lo(b.up(z, x), b.up(z, y)) == b.up(z, b.lo(x, y));
  });
  return rep;
}

}  // namespace mixlat
