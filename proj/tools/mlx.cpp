// mlx: command-line front end for the mixedlattice shared library.
//
// Exit status: 0 = query answered (law failures are answers, not errors),
// 1 = parse or structure error, 2 = usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mixedlattice/mixedlattice.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitAnswered = 0;
constexpr int kExitInputError = 1;
constexpr int kExitUsage = 2;

int exit_code_for(mlx_status status) {
  return status == MLX_ERR_ARGUMENT ? kExitUsage : kExitInputError;
}

// Owned C string from the library.
struct ApiString {
  char* ptr = nullptr;
  ~ApiString() { mlx_string_free(ptr); }
  std::string str() const { return ptr ? ptr : ""; }
};

struct BiposetHandle {
  mlx_biposet* ptr = nullptr;
  ~BiposetHandle() { mlx_biposet_free(ptr); }
};

struct AlgebraHandle {
  mlx_algebra* ptr = nullptr;
  ~AlgebraHandle() { mlx_algebra_free(ptr); }
};

int report_error(mlx_status status, const ApiString& err) {
  std::cerr << "mlx: " << mlx_status_name(status);
  if (err.ptr) std::cerr << ": " << err.ptr;
  std::cerr << "\n";
  return exit_code_for(status);
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  return true;
}

int write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return kExitAnswered;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "mlx: cannot write '" << path << "'\n";
    return kExitInputError;
  }
  out << content;
  return kExitAnswered;
}

int load_biposet(const std::string& path, BiposetHandle& handle) {
  std::string text;
  if (!read_file(path, text)) {
    std::cerr << "mlx: cannot read '" << path << "'\n";
    return kExitInputError;
  }
  ApiString err;
  mlx_status st = mlx_biposet_parse(text.c_str(), &handle.ptr, &err.ptr);
  if (st != MLX_OK) return report_error(st, err);
  return kExitAnswered;
}

int load_algebra(const std::string& path, AlgebraHandle& handle) {
  std::string text;
  if (!read_file(path, text)) {
    std::cerr << "mlx: cannot read '" << path << "'\n";
    return kExitInputError;
  }
  ApiString err;
  mlx_status st = mlx_algebra_parse(text.c_str(), &handle.ptr, &err.ptr);
  if (st != MLX_OK) return report_error(st, err);
  return kExitAnswered;
}

std::string witness_text(const Json& witness) {
  if (witness.is_null()) return "-";
  std::string out = "(";
  bool first = true;
  for (const auto& w : witness) {
    if (!first) out += ", ";
    out += w.get<std::string>();
    first = false;
  }
  return out + ")";
}

void print_verdict_table(const Json& verdicts, const char* heading) {
  std::printf("%-16s %-6s %s\n", heading, "holds", "witness");
  for (const auto& [name, verdict] : verdicts.items()) {
    std::printf("%-16s %-6s %s\n", name.c_str(),
                verdict.at("holds").get<bool>() ? "yes" : "no",
                witness_text(verdict.at("witness")).c_str());
  }
}

int run_validate(const std::string& path) {
  BiposetHandle b;
  if (int rc = load_biposet(path, b); rc != kExitAnswered) return rc;
  ApiString out;
  mlx_status st = mlx_biposet_validate_json(b.ptr, &out.ptr);
  if (st != MLX_OK) return report_error(st, ApiString{});
  Json doc = Json::parse(out.str());
  if (doc.at("mixed_lattice").get<bool>()) {
    std::cout << "mixed lattice: yes\n";
    return kExitAnswered;
  }
  const Json& w = doc.at("witness");
  std::cout << "mixed lattice: no (missing " << w.at("kind").get<std::string>()
            << " envelope for (" << w.at("x").get<std::string>() << ", "
            << w.at("y").get<std::string>() << "))\n";
  return kExitInputError;
}

int run_laws(const std::string& path, bool json) {
  BiposetHandle b;
  if (int rc = load_biposet(path, b); rc != kExitAnswered) return rc;
  ApiString out, err;
  mlx_status st = mlx_biposet_laws_json(b.ptr, &out.ptr, &err.ptr);
  if (st != MLX_OK) return report_error(st, err);
  if (json) {
    std::cout << out.str() << "\n";
    return kExitAnswered;
  }
  Json doc = Json::parse(out.str());
  std::cout << "mixed lattice: yes\n";
  print_verdict_table(doc.at("laws"), "law");
  std::cout << "quasi-regular: " << (doc.at("quasi_regular").get<bool>() ? "yes" : "no")
            << "\n";
  std::cout << "equivalent conditions agree: "
            << (doc.at("equivalence_consistent").get<bool>() ? "yes" : "no") << "\n";
  const Json& ce = doc.at("conditional_equalities");
  if (!ce.at("applicable").get<bool>()) {
    std::cout << "conditional equalities: not applicable (not quasi-regular, qr1 witness "
              << witness_text(ce.at("qr1_witness")) << ")\n";
  } else {
    std::cout << "conditional equalities:\n";
    print_verdict_table(ce.at("identities"), "identity");
  }
  return kExitAnswered;
}

int run_axioms(const std::string& path, bool json) {
  AlgebraHandle a;
  if (int rc = load_algebra(path, a); rc != kExitAnswered) return rc;
  ApiString out;
  mlx_status st = mlx_algebra_axioms_json(a.ptr, &out.ptr);
  if (st != MLX_OK) return report_error(st, ApiString{});
  if (json) {
    std::cout << out.str() << "\n";
    return kExitAnswered;
  }
  Json doc = Json::parse(out.str());
  print_verdict_table(doc.at("axioms"), "axiom");
  const Json& der = doc.at("derived_identities");
  if (!der.at("applicable").get<bool>()) {
    std::cout << "derived identities: not applicable (axiom "
              << der.at("failed_axiom").get<std::string>() << " fails at "
              << witness_text(der.at("failed_witness")) << ")\n";
  } else {
    std::cout << "derived identities:\n";
    print_verdict_table(der.at("identities"), "identity");
  }
  return kExitAnswered;
}

int run_convert(const std::string& path, const std::string& to, const std::string& out_path) {
  bool from_mlx = path.size() >= 4 && path.substr(path.size() - 4) == ".mlx";
  bool from_mla = path.size() >= 4 && path.substr(path.size() - 4) == ".mla";
  if (!from_mlx && !from_mla) {
    std::cerr << "mlx: cannot tell input kind of '" << path
              << "' (expected .mlx or .mla extension)\n";
    return kExitUsage;
  }
  if (from_mlx && to == "orders") {
    std::cerr << "mlx: '" << path << "' already holds an order presentation\n";
    return kExitUsage;
  }
  if (from_mla && to == "algebra") {
    std::cerr << "mlx: '" << path << "' already holds an algebra presentation\n";
    return kExitUsage;
  }

  if (from_mlx) {
    BiposetHandle b;
    if (int rc = load_biposet(path, b); rc != kExitAnswered) return rc;
    AlgebraHandle a;
    ApiString err;
    mlx_status st = mlx_biposet_to_algebra(b.ptr, &a.ptr, &err.ptr);
    if (st != MLX_OK) return report_error(st, err);
    ApiString text;
    mlx_algebra_emit(a.ptr, &text.ptr);
    return write_output(out_path, text.str());
  }
  AlgebraHandle a;
  if (int rc = load_algebra(path, a); rc != kExitAnswered) return rc;
  BiposetHandle b;
  ApiString err;
  mlx_status st = mlx_algebra_to_orders(a.ptr, &b.ptr, &err.ptr);
  if (st != MLX_OK) return report_error(st, err);
  ApiString text;
  mlx_biposet_emit(b.ptr, &text.ptr);
  return write_output(out_path, text.str());
}

int run_divisor(unsigned long long n, const std::string& out_path) {
  BiposetHandle b;
  ApiString err;
  mlx_status st = mlx_biposet_divisor(n, &b.ptr, &err.ptr);
  if (st != MLX_OK) return report_error(st, err);
  ApiString text;
  mlx_biposet_emit(b.ptr, &text.ptr);
  return write_output(out_path, text.str());
}

int run_dot(const std::string& path, const std::string& out_path) {
  BiposetHandle b;
  if (int rc = load_biposet(path, b); rc != kExitAnswered) return rc;
  ApiString text;
  mlx_status st = mlx_biposet_dot(b.ptr, &text.ptr);
  if (st != MLX_OK) return report_error(st, ApiString{});
  return write_output(out_path, text.str());
}

int run_sublattice(const std::string& path, const std::string& subset, bool induced,
                   bool json) {
  BiposetHandle b;
  if (int rc = load_biposet(path, b); rc != kExitAnswered) return rc;
  ApiString out, err;
  mlx_status st =
      mlx_biposet_sublattice_json(b.ptr, subset.c_str(), induced ? 1 : 0, &out.ptr, &err.ptr);
  if (st != MLX_OK) return report_error(st, err);
  if (json) {
    std::cout << out.str() << "\n";
    return kExitAnswered;
  }
  Json doc = Json::parse(out.str());
  const Json& sub = doc.at("sublattice");
  if (sub.at("closed").get<bool>()) {
    std::cout << "sublattice: closed\n";
  } else {
    const Json& w = sub.at("witness");
    std::cout << "sublattice: not closed (" << w.at("kind").get<std::string>()
              << " envelope of (" << w.at("x").get<std::string>() << ", "
              << w.at("y").get<std::string>() << ") is "
              << w.at("value").get<std::string>() << ", outside the subset)\n";
  }
  if (doc.contains("induced")) {
    const Json& ind = doc.at("induced");
    std::cout << "induced substructure: "
              << (ind.at("mixed_lattice").get<bool>() ? "mixed lattice"
                                                      : "not a mixed lattice")
              << "\n";
  }
  return kExitAnswered;
}

int run_enumerate(size_t n, bool summary_only, bool json) {
  ApiString out, err;
  mlx_status st = mlx_enumerate_json(n, summary_only ? 0 : 1, &out.ptr, &err.ptr);
  if (st != MLX_OK) return report_error(st, err);
  if (json) {
    std::cout << out.str() << "\n";
    return kExitAnswered;
  }
  Json doc = Json::parse(out.str());
  if (doc.contains("structures")) {
    size_t k = 0;
    for (const auto& s : doc.at("structures")) {
      std::cout << "# structure " << ++k << "\n" << s.get<std::string>() << "\n";
    }
  }
  const Json& s = doc.at("summary");
  std::cout << "summary:\n";
  std::cout << "  n: " << s.at("n").get<size_t>() << "\n";
  std::cout << "  posets: " << s.at("posets").get<std::uint64_t>() << "\n";
  std::cout << "  pairs examined: " << s.at("pairs_examined").get<std::uint64_t>() << "\n";
  std::cout << "  mixed lattices: " << s.at("mixed_lattices").get<std::uint64_t>() << "\n";
  const Json& c = s.at("by_class");
  std::cout << "  quasi-regular: " << c.at("quasi_regular").get<std::uint64_t>() << "\n";
  std::cout << "  pre-regular only: " << c.at("pre_regular_only").get<std::uint64_t>() << "\n";
  std::cout << "  r0 only: " << c.at("r0_only").get<std::uint64_t>() << "\n";
  std::cout << "  neither: " << c.at("neither").get<std::uint64_t>() << "\n";
  return kExitAnswered;
}

int run_rat_envelope(bool upper, const std::string& r, const std::string& q) {
  ApiString out, err;
  mlx_status st = mlx_rat_envelope(upper ? 1 : 0, r.c_str(), q.c_str(), &out.ptr, &err.ptr);
  if (st != MLX_OK) return report_error(st, err);
  std::cout << out.str() << "\n";
  return kExitAnswered;
}

int run_rat_check(unsigned long long seed, unsigned long long count,
                  unsigned long long bound, bool json) {
  ApiString out, err;
  mlx_status st = mlx_rat_check_json(seed, count, bound, &out.ptr, &err.ptr);
  if (st != MLX_OK) return report_error(st, err);
  if (json) {
    std::cout << out.str() << "\n";
    return kExitAnswered;
  }
  Json doc = Json::parse(out.str());
  const Json& s = doc.at("summary");
  std::cout << "triples=" << s.at("triples").get<std::uint64_t>()
            << " checks=" << s.at("checks").get<std::uint64_t>()
            << " failures=" << s.at("failures").get<std::uint64_t>() << "\n";
  if (!s.at("first_failure").is_null())
    std::cout << "first failure: " << s.at("first_failure").get<std::string>() << "\n";
  return kExitAnswered;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mixed-lattice toolkit: build structures, compute envelopes, "
               "check laws and axioms, convert presentations"};
  app.require_subcommand(1);

  std::string file, out_path, to, subset, rat_r, rat_q;
  bool json = false, induced = false, summary_only = false;
  unsigned long long divisor_n = 0, seed = 0, count = 0, bound = 0;
  size_t enum_n = 0;

  auto* validate = app.add_subcommand("validate", "parse a .mlx file and decide mixed-lattice-ness");
  validate->add_option("file", file, ".mlx structure file")->required();

  auto* laws = app.add_subcommand("laws", "full law report with counterexample witnesses");
  laws->add_option("file", file, ".mlx structure file")->required();
  laws->add_flag("--json", json, "emit the JSON report");

  auto* axioms = app.add_subcommand("axioms", "axiom suite and derived identities for operation tables");
  axioms->add_option("file", file, ".mla table file")->required();
  axioms->add_flag("--json", json, "emit the JSON report");

  auto* convert = app.add_subcommand("convert", "convert between order and algebra presentations");
  convert->add_option("file", file, ".mlx or .mla input file")->required();
  convert->add_option("--to", to, "target presentation: algebra or orders")
      ->required()
      ->check(CLI::IsMember({"algebra", "orders"}));
  convert->add_option("-o,--output", out_path, "output file (default stdout)");

  auto* divisor = app.add_subcommand("divisor", "emit the divisor structure of N");
  divisor->add_option("N", divisor_n, "positive integer")->required()
      ->check(CLI::PositiveNumber);
  divisor->add_option("-o,--output", out_path, "output file (default stdout)");

  auto* dot = app.add_subcommand("dot", "emit the order diagram in DOT");
  dot->add_option("file", file, ".mlx structure file")->required();
  dot->add_option("-o,--output", out_path, "output file (default stdout)");

  auto* sublattice = app.add_subcommand("sublattice", "closure of a subset under the envelopes");
  sublattice->add_option("file", file, ".mlx structure file")->required();
  sublattice->add_option("--subset", subset, "comma-separated labels")->required();
  sublattice->add_flag("--induced", induced, "also check the induced substructure");
  sublattice->add_flag("--json", json, "emit the JSON report");

  auto* enumerate = app.add_subcommand("enumerate", "all labeled mixed lattices on n elements");
  enumerate->add_option("n", enum_n, "carrier size (at most 4)")->required();
  enumerate->add_flag("--summary-only", summary_only, "omit the structures");
  enumerate->add_flag("--json", json, "emit the JSON report");

  auto* rat = app.add_subcommand("rat", "positive rationals under divisibility");
  rat->require_subcommand(1);
  auto* rat_upper = rat->add_subcommand("upper", "smallest t >= q with r dividing t");
  rat_upper->add_option("r", rat_r, "positive rational p or p/q")->required();
  rat_upper->add_option("q", rat_q, "positive rational p or p/q")->required();
  auto* rat_lower = rat->add_subcommand("lower", "largest s <= q dividing r");
  rat_lower->add_option("r", rat_r, "positive rational p or p/q")->required();
  rat_lower->add_option("q", rat_q, "positive rational p or p/q")->required();
  auto* rat_check = rat->add_subcommand("check", "sampled group-law verification");
  rat_check->add_option("--seed", seed, "generator seed")->required();
  rat_check->add_option("--count", count, "number of triples")->required();
  rat_check->add_option("--bound", bound, "numerator/denominator bound")->required();
  rat_check->add_flag("--json", json, "emit the JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "mlx: " << e.what() << "\n";
    return kExitUsage;
  }

  if (validate->parsed()) return run_validate(file);
  if (laws->parsed()) return run_laws(file, json);
  if (axioms->parsed()) return run_axioms(file, json);
  if (convert->parsed()) return run_convert(file, to, out_path);
  if (divisor->parsed()) return run_divisor(divisor_n, out_path);
  if (dot->parsed()) return run_dot(file, out_path);
  if (sublattice->parsed()) return run_sublattice(file, subset, induced, json);
  if (enumerate->parsed()) return run_enumerate(enum_n, summary_only, json);
  if (rat->parsed()) {
    if (rat_upper->parsed()) return run_rat_envelope(true, rat_r, rat_q);
    if (rat_lower->parsed()) return run_rat_envelope(false, rat_r, rat_q);
    if (rat_check->parsed()) return run_rat_check(seed, count, bound, json);
  }
  return kExitUsage;
}
