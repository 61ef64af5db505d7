#pragma once

#include <cstdint>
#include <vector>

#include "biposet.hpp"

namespace mixlat {

// Divisors of N in increasing order; leq is the numeric order, sleq is
// divisibility. Always a mixed lattice (leq is total, N bounds every upper
// filter, 1 every lower one). Throws std::invalid_argument for N = 0.
Biposet divisor_mixed_lattice(std::uint64_t N);

// All labeled partial orders on n elements, sorted by row-major matrix
// bits. Guarded at n <= 5; larger carriers blow up combinatorially.
std::vector<Relation> enumerate_posets(std::size_t n);

// Labeled-structure counts from one enumeration run. Classes are the
// exclusive partition by strongest law satisfied; quasi-regular implies
// pre-regular implies r0, so the partition is well defined.
struct EnumerationSummary {
  std::size_t n = 0;
  std::uint64_t posets = 0;
  std::uint64_t pairs_examined = 0;
  std::uint64_t mixed_lattices = 0;
  std::uint64_t quasi_regular = 0;
  std::uint64_t pre_regular_only = 0;
  std::uint64_t r0_only = 0;
  std::uint64_t neither = 0;
};

struct MixedLatticeEnumeration {
  std::vector<Biposet> structures;
  EnumerationSummary summary;
};

// Every ordered pair (leq, sleq) of labeled partial orders on n elements
// whose envelope tables are total, in enumeration order of the pair.
// Guarded at n <= 4.
MixedLatticeEnumeration enumerate_mixed_lattices(std::size_t n);

// Deterministic pseudorandom biposet: generator pairs drawn per ordered
// pair with probability `density` (Lcg64 seeded with `seed`), closed, and
// retried until both closures are antisymmetric; falls back to discrete
// orders after 1000 attempts. Identical output for identical inputs.
Biposet random_biposet(std::size_t n, std::uint64_t seed, double density);

// Componentwise product. Both inputs must be mixed lattices; the result is
// one, with componentwise envelopes.
Biposet product(const Biposet& b1, const Biposet& b2);

// Independent envelope oracle: materializes the defining filtered set and
// tests every member for leastness/greatestness by pairwise comparison.
// Deliberately naive, and deliberately sharing no code with the engine's
// envelope construction; acceptance checks compare the two.
std::optional<Element> oracle_envelope(const Biposet& b, Element x, Element y,
                                       EnvelopeKind kind);

}  // namespace mixlat
