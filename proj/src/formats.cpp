#include "formats.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

#include "errors.hpp"
#include "generate.hpp"
#include "laws.hpp"

namespace mixlat {

namespace {

using Json = nlohmann::ordered_json;

std::vector<std::string> split_tokens(std::string_view line) {
  std::vector<std::string> tokens;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

// Lines of `text` with comments stripped; CRLF accepted.
std::vector<std::pair<int, std::vector<std::string>>> logical_lines(std::string_view text) {
  std::vector<std::pair<int, std::vector<std::string>>> out;
  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    std::string_view line = text.substr(pos, end == std::string_view::npos
                                                 ? std::string_view::npos
                                                 : end - pos);
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    auto tokens = split_tokens(line);
    if (!tokens.empty()) out.emplace_back(lineno, std::move(tokens));
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return out;
}

std::map<std::string, Element> label_index(const std::vector<std::string>& labels,
                                           int line) {
  std::map<std::string, Element> index;
  for (Element i = 0; i < labels.size(); ++i)
    if (!index.emplace(labels[i], i).second)
      throw parse_error("duplicate label '" + labels[i] + "'", line);
  return index;
}

}  // namespace

MlxDocument parse_mlx_document(std::string_view text) {
  MlxDocument doc;
  bool saw_elements = false, saw_leq = false, saw_sleq = false, saw_closure = false;
  int elements_line = 0;
  std::vector<MlxDocument::Pair>* section = nullptr;

  for (const auto& [lineno, tokens] : logical_lines(text)) {
    const std::string& head = tokens.front();
    if (head == "elements:") {
      if (saw_elements) throw parse_error("duplicate elements line", lineno);
      saw_elements = true;
      elements_line = lineno;
      doc.labels.assign(tokens.begin() + 1, tokens.end());
      continue;
    }
    if (head == "leq:" || head == "sleq:") {
      if (tokens.size() != 1)
        throw parse_error("unexpected tokens after section header", lineno);
      bool& seen = head == "leq:" ? saw_leq : saw_sleq;
      if (seen) throw parse_error("duplicate section " + head, lineno);
      seen = true;
      (head == "leq:" ? doc.leq_line : doc.sleq_line) = lineno;
      section = head == "leq:" ? &doc.leq_pairs : &doc.sleq_pairs;
      continue;
    }
    if (head == "closure:") {
      if (saw_closure) throw parse_error("duplicate closure line", lineno);
      saw_closure = true;
      if (tokens.size() != 2 || (tokens[1] != "on" && tokens[1] != "off"))
        throw parse_error("closure takes a single value, on or off", lineno);
      doc.closure = tokens[1] == "on";
      continue;
    }
    if (tokens.size() != 2)
      throw parse_error("expected a pair of labels 'x y'", lineno);
    if (!section)
      throw parse_error("pair before any leq:/sleq: section header", lineno);
    section->push_back({tokens[0], tokens[1], lineno});
  }

  if (!saw_elements) throw parse_error("missing elements: line");
  label_index(doc.labels, elements_line);  // rejects duplicates
  return doc;
}

namespace {

Relation relation_from_pairs(const std::vector<MlxDocument::Pair>& pairs,
                             const std::map<std::string, Element>& index,
                             bool closure, const char* section, int section_line,
                             const std::vector<std::string>& labels) {
  std::vector<ElementPair> resolved;
  resolved.reserve(pairs.size());
  for (const auto& p : pairs) {
    auto from = index.find(p.from);
    if (from == index.end()) throw parse_error("unknown label '" + p.from + "'", p.line);
    auto to = index.find(p.to);
    if (to == index.end()) throw parse_error("unknown label '" + p.to + "'", p.line);
    resolved.emplace_back(from->second, to->second);
  }

  Relation r(labels.size());
  if (closure) {
    r = reflexive_transitive_closure(resolved, labels.size());
  } else {
    for (const auto& [a, b] : resolved) r.set(a, b);
  }
  if (auto v = validate_partial_order(r))
    throw parse_error(std::string(section) +
                          (closure ? ": after closure, " : ": ") + v->describe(labels),
                      section_line);
  return r;
}

}  // namespace

Biposet biposet_from_document(const MlxDocument& doc) {
  auto index = label_index(doc.labels, 0);
  Relation leq = relation_from_pairs(doc.leq_pairs, index, doc.closure, "leq",
                                     doc.leq_line, doc.labels);
  Relation sleq = relation_from_pairs(doc.sleq_pairs, index, doc.closure, "sleq",
                                      doc.sleq_line, doc.labels);
  return Biposet(doc.labels, std::move(leq), std::move(sleq));
}

Biposet parse_mlx(std::string_view text) {
  return biposet_from_document(parse_mlx_document(text));
}

std::string emit_mlx(const Biposet& b) {
  std::string out = "elements:";
  for (const auto& l : b.labels()) out += " " + l;
  out += "\nleq:\n";
  for (const auto& [x, y] : covers(b.leq_relation()))
    out += b.label(x) + " " + b.label(y) + "\n";
  out += "sleq:\n";
  for (const auto& [x, y] : covers(b.sleq_relation()))
    out += b.label(x) + " " + b.label(y) + "\n";
  return out;
}

AlgebraTables parse_mla(std::string_view text) {
  std::vector<std::string> labels;
  bool saw_elements = false;
  int elements_line = 0;
  std::vector<Element> upper, lower;
  int rows_needed = 0;
  std::vector<Element>* table = nullptr;
  const char* table_name = "";
  int rows_seen = 0;
  bool saw_upper = false, saw_lower = false;

  auto finish_section = [&](int lineno) {
    if (table && rows_seen != rows_needed)
      throw parse_error(std::string(table_name) + " table has " +
                            std::to_string(rows_seen) + " rows, expected " +
                            std::to_string(rows_needed),
                        lineno);
  };

  std::map<std::string, Element> index;
  for (const auto& [lineno, tokens] : logical_lines(text)) {
    const std::string& head = tokens.front();
    if (head == "elements:") {
      if (saw_elements) throw parse_error("duplicate elements line", lineno);
      saw_elements = true;
      elements_line = lineno;
      labels.assign(tokens.begin() + 1, tokens.end());
      index = label_index(labels, lineno);
      rows_needed = static_cast<int>(labels.size());
      continue;
    }
    if (head == "upper:" || head == "lower:") {
      if (tokens.size() != 1)
        throw parse_error("unexpected tokens after section header", lineno);
      if (!saw_elements) throw parse_error("elements: must precede tables", lineno);
      bool& seen = head == "upper:" ? saw_upper : saw_lower;
      if (seen) throw parse_error("duplicate section " + head, lineno);
      seen = true;
      finish_section(lineno);
      table = head == "upper:" ? &upper : &lower;
      table_name = head == "upper:" ? "upper" : "lower";
      rows_seen = 0;
      continue;
    }
    if (!table) throw parse_error("table row before any upper:/lower: header", lineno);
    if (static_cast<int>(tokens.size()) != rows_needed)
      throw parse_error("row " + std::to_string(rows_seen + 1) + " of " + table_name +
                            " has " + std::to_string(tokens.size()) +
                            " entries, expected " + std::to_string(rows_needed),
                        lineno);
    if (rows_seen == rows_needed)
      throw parse_error(std::string(table_name) + " table has too many rows", lineno);
    for (const auto& tok : tokens) {
      auto it = index.find(tok);
      if (it == index.end()) throw parse_error("unknown label '" + tok + "'", lineno);
      table->push_back(it->second);
    }
    ++rows_seen;
  }
  if (!saw_elements) throw parse_error("missing elements: line");
  finish_section(elements_line);
  if (!saw_upper) throw parse_error("missing upper: table");
  if (!saw_lower) throw parse_error("missing lower: table");
  return AlgebraTables(std::move(labels), std::move(upper), std::move(lower));
}

std::string emit_mla(const AlgebraTables& a) {
  const std::size_t n = a.size();
  std::string out = "elements:";
  for (const auto& l : a.labels()) out += " " + l;
  out += "\nupper:\n";
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) out += (y ? " " : "") + a.label(a.up(x, y));
    out += "\n";
  }
  out += "lower:\n";
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) out += (y ? " " : "") + a.label(a.lo(x, y));
    out += "\n";
  }
  return out;
}

std::string emit_dot(const Biposet& b) {
  std::vector<ElementPair> solid, dashed, dotted;
  for (const auto& [x, y] : covers(b.sleq_relation()))
    (b.leq(x, y) ? solid : dotted).emplace_back(x, y);
  for (const auto& [x, y] : covers(b.leq_relation()))
    if (!b.sleq(x, y)) dashed.emplace_back(x, y);

  std::string out = "graph {\n";
  for (const auto& l : b.labels()) out += "  \"" + l + "\";\n";
  auto emit_edges = [&](const std::vector<ElementPair>& edges, const char* style) {
    for (const auto& [x, y] : edges)
      out += "  \"" + b.label(x) + "\" -- \"" + b.label(y) + "\" [style=" + style + "];\n";
  };
  emit_edges(solid, "solid");
  emit_edges(dashed, "dashed");
  emit_edges(dotted, "dotted");
  out += "}\n";
  return out;
}

std::vector<Element> resolve_labels(const Biposet& b,
                                    std::span<const std::string> labels) {
  std::vector<Element> out;
  out.reserve(labels.size());
  for (const auto& want : labels) {
    bool found = false;
    for (Element i = 0; i < b.size(); ++i)
      if (b.label(i) == want) {
        out.push_back(i);
        found = true;
        break;
      }
    if (!found) throw parse_error("unknown label '" + want + "'");
  }
  return out;
}

namespace {

Json witness_json(const std::vector<std::string>& labels,
                  const std::vector<Element>& witness) {
  Json arr = Json::array();
  for (Element e : witness) arr.push_back(labels[e]);
  return arr;
}

Json verdict_json(const std::vector<std::string>& labels, bool holds,
                  const std::vector<Element>& witness) {
  Json v;
  v["holds"] = holds;
  v["witness"] = holds ? Json(nullptr) : witness_json(labels, witness);
  return v;
}

}  // namespace

std::string validate_report_json(const Biposet& b) {
  Json doc;
  doc["mixed_lattice"] = b.is_mixed_lattice();
  if (const auto& m = b.first_missing_envelope()) {
    doc["witness"] = {{"x", b.label(m->x)},
                      {"y", b.label(m->y)},
                      {"kind", envelope_kind_name(m->kind)}};
  } else {
    doc["witness"] = nullptr;
  }
  return doc.dump(2);
}

std::string laws_report_json(const Biposet& b) {
  LawReport report = full_report(b);
  ConditionalEqualityReport cond = check_conditional_equalities(b);
  const auto& labels = b.labels();

  Json doc;
  doc["mixed_lattice"] = true;
  Json laws;
  for (std::size_t i = 0; i < kAllLaws.size(); ++i) {
    const LawVerdict& v = report.verdicts[i];
    laws[std::string(law_name(kAllLaws[i]))] = verdict_json(labels, v.holds, v.witness);
  }
  doc["laws"] = std::move(laws);
  doc["quasi_regular"] = report.quasi_regular;
  doc["equivalence_consistent"] = report.equivalence_consistent;

  Json ce;
  ce["applicable"] = cond.applicable;
  ce["qr1_witness"] =
      cond.applicable ? Json(nullptr) : witness_json(labels, cond.qr1_witness);
  if (cond.applicable) {
    Json ids;
    ids["assoc_lower"] = verdict_json(labels, cond.assoc_lower.holds, cond.assoc_lower.witness);
    ids["dist_lower"] = verdict_json(labels, cond.dist_lower.holds, cond.dist_lower.witness);
    ids["assoc_upper"] = verdict_json(labels, cond.assoc_upper.holds, cond.assoc_upper.witness);
    ids["dist_upper"] = verdict_json(labels, cond.dist_upper.holds, cond.dist_upper.witness);
    ce["identities"] = std::move(ids);
  } else {
    ce["identities"] = nullptr;
  }
  doc["conditional_equalities"] = std::move(ce);
  return doc.dump(2);
}

std::string axioms_report_json(const AlgebraTables& a) {
  AxiomReport report = check_axioms(a);
  DerivedIdentityReport derived = derived_identities(a);
  const auto& labels = a.labels();

  Json doc;
  Json axioms;
  for (std::size_t i = 0; i < kAllAxioms.size(); ++i) {
    const AxiomVerdict& v = report.verdicts[i];
    axioms[std::string(axiom_name(kAllAxioms[i]))] =
        verdict_json(labels, v.holds, v.witness);
  }
  doc["axioms"] = std::move(axioms);

  Json der;
  der["applicable"] = derived.applicable;
  if (!derived.applicable) {
    der["failed_axiom"] = std::string(axiom_name(derived.failed_axiom));
    der["failed_witness"] = witness_json(labels, derived.failed_witness);
    der["identities"] = nullptr;
  } else {
    der["failed_axiom"] = nullptr;
    der["failed_witness"] = nullptr;
    Json ids;
    ids["idempotence"] =
        verdict_json(labels, derived.idempotence.holds, derived.idempotence.witness);
    ids["equivalences"] =
        verdict_json(labels, derived.equivalences.holds, derived.equivalences.witness);
    ids["lower_iteration"] = verdict_json(labels, derived.lower_iteration.holds,
                                          derived.lower_iteration.witness);
    ids["upper_iteration"] = verdict_json(labels, derived.upper_iteration.holds,
                                          derived.upper_iteration.witness);
    der["identities"] = std::move(ids);
  }
  doc["derived_identities"] = std::move(der);
  return doc.dump(2);
}

std::string sublattice_report_json(const Biposet& b, std::span<const Element> subset,
                                   bool with_induced) {
  SublatticeVerdict verdict = is_mixed_sublattice(b, subset);

  Json doc;
  Json sub;
  sub["closed"] = verdict.closed;
  if (verdict.witness) {
    sub["witness"] = {{"x", b.label(verdict.witness->x)},
                      {"y", b.label(verdict.witness->y)},
                      {"kind", envelope_kind_name(verdict.witness->kind)},
                      {"value", b.label(verdict.witness->value)}};
  } else {
    sub["witness"] = nullptr;
  }
  doc["sublattice"] = std::move(sub);

  if (with_induced) {
    Biposet induced = induced_substructure(b, subset);
    Json ind;
    ind["mixed_lattice"] = induced.is_mixed_lattice();
    if (const auto& m = induced.first_missing_envelope()) {
      ind["witness"] = {{"x", induced.label(m->x)},
                        {"y", induced.label(m->y)},
                        {"kind", envelope_kind_name(m->kind)}};
    } else {
      ind["witness"] = nullptr;
    }
    doc["induced"] = std::move(ind);
  }
  return doc.dump(2);
}

std::string enumeration_report_json(std::size_t n, bool include_structures) {
  MixedLatticeEnumeration result = enumerate_mixed_lattices(n);

  Json doc;
  Json summary;
  summary["n"] = result.summary.n;
  summary["posets"] = result.summary.posets;
  summary["pairs_examined"] = result.summary.pairs_examined;
  summary["mixed_lattices"] = result.summary.mixed_lattices;
  summary["by_class"] = {{"quasi_regular", result.summary.quasi_regular},
                         {"pre_regular_only", result.summary.pre_regular_only},
                         {"r0_only", result.summary.r0_only},
                         {"neither", result.summary.neither}};
  doc["summary"] = std::move(summary);
  if (include_structures) {
    Json arr = Json::array();
    for (const Biposet& b : result.structures) arr.push_back(emit_mlx(b));
    doc["structures"] = std::move(arr);
  }
  return doc.dump(2);
}

std::string group_law_report_json(const GroupLawReport& rep) {
  Json doc;
  doc["summary"] = {{"triples", rep.triples},
                    {"checks", rep.checks},
                    {"failures", rep.failures},
                    {"first_failure", rep.failures == 0 ? Json(nullptr)
                                                        : Json(rep.first_failure)}};
  return doc.dump(2);
}

}  // namespace mixlat
