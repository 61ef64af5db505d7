#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace mixlat {

using BigInt = boost::multiprecision::cpp_int;

// An exact positive rational in lowest terms: num, den >= 1, gcd = 1.
// The multiplicative group of these carries two orders: the numeric one
// (leq) and divisibility (sleq, where p divides q iff q/p is an integer).
class PosRational {
 public:
  PosRational() : num_(1), den_(1) {}
  explicit PosRational(BigInt n) : PosRational(std::move(n), 1) {}
  PosRational(BigInt num, BigInt den);  // normalizes; throws on num or den < 1

  // "p" or "p/q", ASCII decimal, no whitespace. Throws parse_error.
  static PosRational parse(std::string_view text);
  std::string str() const;

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  friend PosRational operator*(const PosRational& a, const PosRational& b) {
    return PosRational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend PosRational operator/(const PosRational& a, const PosRational& b) {
    return PosRational(a.num_ * b.den_, a.den_ * b.num_);
  }
  PosRational inverse() const { return PosRational(den_, num_); }

  bool operator==(const PosRational&) const = default;

 private:
  BigInt num_, den_;
};

// Numeric order: a/b leq c/d iff ad <= bc.
bool leq(const PosRational& p, const PosRational& q);

// Divisibility order: p sleq q iff q/p is a positive integer.
bool sleq(const PosRational& p, const PosRational& q);

// Smallest t with t >= q and r divides t; closed form r * ceil(q/r).
PosRational env_upper(const PosRational& r, const PosRational& q);

// Largest s with s <= q and s divides r; closed form r / ceil(r/q).
PosRational env_lower(const PosRational& r, const PosRational& q);

// Ceiling of a/b as a positive integer (>= 1 for positive rationals).
// Exposed so the minimality certificates of the closed forms can be
// checked directly: env_upper(r, q) = r * ceil_quotient(q, r) and
// env_lower(r, q) = r / ceil_quotient(r, q).
BigInt ceil_quotient(const PosRational& a, const PosRational& b);

// Sampled verification of the group laws over `count` pseudorandom triples
// (x, y, z) with numerators and denominators drawn uniformly from
// [1, bound]. Per triple: translation invariance of both orders,
// distributivity of multiplication over both envelopes, and the algebra
// axioms M1-M4b instantiated at the sample. Arithmetic is exact, so any
// failure disproves the implementation rather than the sampling.
struct GroupLawReport {
  std::uint64_t triples = 0;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::string first_failure;  // empty when all checks passed
};

// Throws std::invalid_argument unless count >= 1 and bound >= 1.
GroupLawReport check_group_laws(std::uint64_t seed, std::uint64_t count,
                                std::uint64_t bound);

}  // namespace mixlat
