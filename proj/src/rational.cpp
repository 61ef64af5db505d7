#include "rational.hpp"

#include <stdexcept>
#include <utility>

#include "errors.hpp"
#include "rng.hpp"

namespace mixlat {

PosRational::PosRational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (num_ < 1 || den_ < 1)
    throw std::invalid_argument("positive rational requires numerator and denominator >= 1");
  BigInt g = boost::multiprecision::gcd(num_, den_);
  num_ /= g;
  den_ /= g;
}

PosRational PosRational::parse(std::string_view text) {
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string_view num_part = text, den_part = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num_part = text.substr(0, slash);
    den_part = text.substr(slash + 1);
  }
  if (!digits(num_part) || !digits(den_part))
    throw parse_error("malformed rational '" + std::string(text) +
                      "' (expected p or p/q, decimal digits)");
  BigInt n(std::string(num_part)), d(std::string(den_part));
  if (n < 1 || d < 1)
    throw parse_error("rational '" + std::string(text) + "' must be positive");
  return PosRational(std::move(n), std::move(d));
}

std::string PosRational::str() const {
  return den_ == 1 ? num_.str() : num_.str() + "/" + den_.str();
}

bool leq(const PosRational& p, const PosRational& q) {
  return p.num() * q.den() <= q.num() * p.den();
}

bool sleq(const PosRational& p, const PosRational& q) {
  // q/p = (q.num * p.den) / (q.den * p.num); integral iff the denominator
  // divides the numerator.
  return (q.num() * p.den()) % (q.den() * p.num()) == 0;
}

BigInt ceil_quotient(const PosRational& a, const PosRational& b) {
  BigInt num = a.num() * b.den();
  BigInt den = a.den() * b.num();
  return (num + den - 1) / den;
}

PosRational env_upper(const PosRational& r, const PosRational& q) {
  BigInt k = ceil_quotient(q, r);
  return PosRational(r.num() * k, r.den());
}

PosRational env_lower(const PosRational& r, const PosRational& q) {
  BigInt k = ceil_quotient(r, q);
  return PosRational(r.num(), r.den() * k);
}

GroupLawReport check_group_laws(std::uint64_t seed, std::uint64_t count,
                                std::uint64_t bound) {
  if (count < 1) throw std::invalid_argument("check_group_laws: count must be >= 1");
  if (bound < 1) throw std::invalid_argument("check_group_laws: bound must be >= 1");

  Lcg64 rng(seed);
  auto draw = [&] {
    BigInt n(rng.below(bound) + 1);
    BigInt d(rng.below(bound) + 1);
    return PosRational(std::move(n), std::move(d));
  };

  GroupLawReport rep;
  auto up = [](const PosRational& a, const PosRational& b) { return env_upper(a, b); };
  auto lo = [](const PosRational& a, const PosRational& b) { return env_lower(a, b); };

  for (std::uint64_t i = 0; i < count; ++i) {
    PosRational x = draw(), y = draw(), z = draw();
    ++rep.triples;

    auto record = [&](const char* what, bool ok) {
      ++rep.checks;
      if (ok) return;
      ++rep.failures;
      if (rep.first_failure.empty())
        rep.first_failure = std::string(what) + " at (" + x.str() + ", " + y.str() +
                            ", " + z.str() + ")";
    };

    record("leq translation invariance", !leq(x, y) || leq(x * z, y * z));
    record("sleq translation invariance", !sleq(x, y) || sleq(x * z, y * z));
    record("upper envelope distributivity", up(x, y) * z == up(x * z, y * z));
    record("lower envelope distributivity", lo(x, y) * z == lo(x * z, y * z));

    record("M1", (up(x, y) == lo(x, y)) == (x == y));
    record("M2a", up(lo(x, y), x) == x && lo(up(x, y), x) == x);
    record("M2b", up(x, lo(y, x)) == x && lo(x, up(y, x)) == x);
    {
      PosRational t = lo(z, up(x, y));
      record("M3a", t == up(t, lo(z, y)));
    }
    {
      PosRational t = up(z, lo(x, y));
      record("M3b", t == lo(t, up(z, y)));
    }
    {
      PosRational t = lo(up(x, y), z);
      record("M4a", t == up(t, lo(x, z)));
    }
    {
      PosRational t = up(lo(x, y), z);
      record("M4b", t == lo(t, up(x, z)));
    }
  }
  return rep;
}

}  // namespace mixlat
