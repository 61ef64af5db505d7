#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "relation.hpp"

namespace mixlat {

enum class EnvelopeKind { Upper, Lower };

inline const char* envelope_kind_name(EnvelopeKind k) {
  return k == EnvelopeKind::Upper ? "upper" : "lower";
}

// Full n x n envelope tables. Entry (x, y) of `upper` is the least element
// (under leq) of { w : x sleq w and y leq w }, when that least element
// exists; `lower` is the dual with greatest / { w : w sleq x and w leq y }.
// Nonexistence is data, not failure: entries are optional.
struct EnvelopeTables {
  std::size_t n = 0;
  std::vector<std::optional<Element>> upper;
  std::vector<std::optional<Element>> lower;

  const std::optional<Element>& up(Element x, Element y) const { return upper[x * n + y]; }
  const std::optional<Element>& lo(Element x, Element y) const { return lower[x * n + y]; }
};

struct MissingEnvelope {
  Element x, y;
  EnvelopeKind kind;
};

// A finite carrier with two partial orders, written leq and sleq. Envelope
// tables are built eagerly at construction (carriers are small) and the
// whole object is immutable afterwards, so instances can be shared freely
// across threads.
class Biposet {
 public:
  // Throws structure_error unless both relations are partial orders of the
  // same size as `labels` and the labels are pairwise distinct.
  Biposet(std::vector<std::string> labels, Relation leq, Relation sleq);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Element x) const { return labels_[x]; }
  const Relation& leq_relation() const { return leq_; }
  const Relation& sleq_relation() const { return sleq_; }

  bool leq(Element x, Element y) const { return leq_.at(x, y); }
  bool sleq(Element x, Element y) const { return sleq_.at(x, y); }

  const EnvelopeTables& envelopes() const { return tables_; }
  std::optional<Element> upper_envelope(Element x, Element y) const { return tables_.up(x, y); }
  std::optional<Element> lower_envelope(Element x, Element y) const { return tables_.lo(x, y); }

  // True iff every entry of both envelope tables is present.
  bool is_mixed_lattice() const { return !missing_.has_value(); }

  // First absent entry in scan order: pairs (x, y) lexicographically,
  // upper before lower within a pair.
  const std::optional<MissingEnvelope>& first_missing_envelope() const { return missing_; }

  // Shorthand for structures known to be mixed lattices; call only after
  // checking is_mixed_lattice().
  Element up(Element x, Element y) const { return *tables_.up(x, y); }
  Element lo(Element x, Element y) const { return *tables_.lo(x, y); }

 private:
  std::vector<std::string> labels_;
  Relation leq_;
  Relation sleq_;
  EnvelopeTables tables_;
  std::optional<MissingEnvelope> missing_;
};

// Throws structure_error naming the first missing envelope when `b` is not
// a mixed lattice. Used as the common precondition guard for the law and
// identity suites.
void require_mixed_lattice(const Biposet& b, const char* operation);

// One verdict of the basic-identity suite; `witness` is empty when the
// identity holds, otherwise the lexicographically first falsifying tuple.
struct IdentityVerdict {
  bool holds = true;
  std::vector<Element> witness;
};

// Verdicts for the identities every mixed lattice satisfies:
//   idempotence        x^x = x and xvx = x
//   bounds             xvy sleq x sleq x^y, xvy leq y leq x^y
//   monotonicity       x sleq u, y leq v  =>  x^y leq u^v and xvy leq uvv
//   characterization   x sleq y <=> x^y = y <=> yvx = x
//   absorption         (xvy)^x = x and (x^y)vx = x
// When the r0 law holds, the dual absorption pair xv(y^x) = x, x^(yvx) = x
// is checked as well; otherwise `r0_absorption` stays disengaged.
struct BasicIdentityReport {
  IdentityVerdict idempotence;
  IdentityVerdict bounds;
  IdentityVerdict monotonicity;
  IdentityVerdict characterization;
  IdentityVerdict absorption;
  bool r0_holds = false;
  std::optional<IdentityVerdict> r0_absorption;

  bool all_hold() const;
};

BasicIdentityReport check_basic_identities(const Biposet& b);

struct SublatticeVerdict {
  struct Escape {
    Element x, y;
    EnvelopeKind kind;
    Element value;  // envelope value that falls outside the subset
  };
  bool closed = true;
  std::optional<Escape> witness;
};

// Closure of `subset` under both envelopes computed in `b`. Requires `b`
// to be a mixed lattice and `subset` nonempty.
SublatticeVerdict is_mixed_sublattice(const Biposet& b, std::span<const Element> subset);

// Carrier restricted to `subset` (nonempty), both orders restricted.
Biposet induced_substructure(const Biposet& b, std::span<const Element> subset);

}  // namespace mixlat
