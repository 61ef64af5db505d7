#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "algebra.hpp"
#include "biposet.hpp"
#include "rational.hpp"

namespace mixlat {

// Parsed form of a .mlx structure document:
//
//   # comment to end of line
//   elements: 1 2 3 4 6 12
//   leq:
//   1 2
//   2 3
//   sleq:
//   1 2
//   closure: off        (optional; default on)
//
// Pairs are generators; unless closure is off, the reflexive-transitive
// closure is applied to each section before validation. With closure off
// the pairs are the full relation and must already form partial orders.
struct MlxDocument {
  struct Pair {
    std::string from, to;
    int line;
  };
  std::vector<std::string> labels;
  std::vector<Pair> leq_pairs;
  std::vector<Pair> sleq_pairs;
  bool closure = true;
  int leq_line = 0;   // line of the section header, for diagnostics
  int sleq_line = 0;
};

MlxDocument parse_mlx_document(std::string_view text);
Biposet biposet_from_document(const MlxDocument& doc);
Biposet parse_mlx(std::string_view text);

// Cover-pair generator form; parse(emit(b)) reproduces b exactly.
std::string emit_mlx(const Biposet& b);

// .mla operation-table document:
//
//   elements: a b c
//   upper:
//   a b c        (row x lists x^y across columns y, in elements order)
//   ...
//   lower:
//   ...
AlgebraTables parse_mla(std::string_view text);
std::string emit_mla(const AlgebraTables& a);

// Order diagram in DOT, byte-stable for a given structure. Edge styles:
//   solid   cover pair of sleq with x leq y
//   dashed  cover pair of leq with x, y unrelated under sleq
//   dotted  cover pair of sleq without x leq y (empty when prereg holds)
std::string emit_dot(const Biposet& b);

// Map labels to element indices; throws parse_error on unknown labels.
std::vector<Element> resolve_labels(const Biposet& b,
                                    std::span<const std::string> labels);

// JSON reports (pretty-printed, stable key order). Verdict entries are
// {"holds": bool, "witness": [labels] | null} throughout.
std::string validate_report_json(const Biposet& b);
std::string laws_report_json(const Biposet& b);
std::string axioms_report_json(const AlgebraTables& a);
std::string sublattice_report_json(const Biposet& b, std::span<const Element> subset,
                                   bool with_induced);
std::string enumeration_report_json(std::size_t n, bool include_structures);
std::string group_law_report_json(const GroupLawReport& rep);

}  // namespace mixlat
