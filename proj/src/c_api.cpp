#include "mixedlattice/mixedlattice.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "errors.hpp"
#include "formats.hpp"
#include "generate.hpp"
#include "rational.hpp"

using namespace mixlat;

extern "C" {

struct mlx_biposet {
  Biposet rep;
};

struct mlx_algebra {
  AlgebraTables rep;
};

}  // extern "C"

namespace {

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_err(char** err, const std::string& msg) {
  if (err) *err = copy_string(msg);
}

// Translate C++ failures into status codes; the callable does the work and
// returns MLX_OK on success.
template <typename F>
mlx_status guarded(char** err, F f) {
  try {
    return f();
  } catch (const parse_error& e) {
    set_err(err, e.what());
    return MLX_ERR_PARSE;
  } catch (const structure_error& e) {
    set_err(err, e.what());
    return MLX_ERR_STRUCTURE;
  } catch (const std::invalid_argument& e) {
    set_err(err, e.what());
    return MLX_ERR_ARGUMENT;
  } catch (const std::exception& e) {
    set_err(err, e.what());
    return MLX_ERR_INTERNAL;
  }
}

}  // namespace

extern "C" {

const char* mlx_status_name(mlx_status status) {
  switch (status) {
    case MLX_OK: return "ok";
    case MLX_ERR_ARGUMENT: return "argument error";
    case MLX_ERR_PARSE: return "parse error";
    case MLX_ERR_STRUCTURE: return "structure error";
    case MLX_ERR_INTERNAL: return "internal error";
  }
  return "?";
}

void mlx_string_free(char* s) { std::free(s); }
void mlx_biposet_free(mlx_biposet* b) { delete b; }
void mlx_algebra_free(mlx_algebra* a) { delete a; }

mlx_status mlx_biposet_parse(const char* text, mlx_biposet** out, char** err) {
  if (!text || !out) {
    set_err(err, "null argument");
    return MLX_ERR_ARGUMENT;
  }
  return guarded(err, [&] {
    *out = new mlx_biposet{parse_mlx(text)};
    return MLX_OK;
  });
}

mlx_status mlx_biposet_divisor(unsigned long long n, mlx_biposet** out, char** err) {
  if (!out) {
    set_err(err, "null argument");
    return MLX_ERR_ARGUMENT;
  }
  return guarded(err, [&] {
    *out = new mlx_biposet{divisor_mixed_lattice(n)};
    return MLX_OK;
  });
}

size_t mlx_biposet_size(const mlx_biposet* b) { return b ? b->rep.size() : 0; }

int mlx_biposet_is_mixed_lattice(const mlx_biposet* b) {
  return b && b->rep.is_mixed_lattice() ? 1 : 0;
}

mlx_status mlx_biposet_emit(const mlx_biposet* b, char** out) {
  if (!b || !out) return MLX_ERR_ARGUMENT;
  return guarded(nullptr, [&] {
    *out = copy_string(emit_mlx(b->rep));
    return MLX_OK;
  });
}

mlx_status mlx_biposet_dot(const mlx_biposet* b, char** out) {
  if (!b || !out) return MLX_ERR_ARGUMENT;
  return guarded(nullptr, [&] {
    *out = copy_string(emit_dot(b->rep));
    return MLX_OK;
  });
}

mlx_status mlx_biposet_validate_json(const mlx_biposet* b, char** out) {
  if (!b || !out) return MLX_ERR_ARGUMENT;
  return guarded(nullptr, [&] {
    *out = copy_string(validate_report_json(b->rep));
    return MLX_OK;
  });
}

mlx_status mlx_biposet_laws_json(const mlx_biposet* b, char** out, char** err) {
  if (!b || !out) {
    set_err(err, "null argument");
    return MLX_ERR_ARGUMENT;
  }
  return guarded(err, [&] {
    *out = copy_string(laws_report_json(b->rep));
    return MLX_OK;
  });
}

mlx_status mlx_biposet_sublattice_json(const mlx_biposet* b, const char* labels_csv,
                                       int induced, char** out, char** err) {
  if (!b || !labels_csv || !out) {
    set_err(err, "null argument");
    return MLX_ERR_ARGUMENT;
  }
  return guarded(err, [&] {
    std::vector<std::string> labels;
    std::stringstream in(labels_csv);
    std::string item;
    while (std::getline(in, item, ',')) {
      if (!item.empty()) labels.push_back(item);
    }
    if (labels.empty()) throw std::invalid_argument("empty subset");
    std::vector<Element> subset = resolve_labels(b->rep, labels);
    *out = copy_string(sublattice_report_json(b->rep, subset, induced != 0));
    return MLX_OK;
  });
}

mlx_status mlx_biposet_to_algebra(const mlx_biposet* b, mlx_algebra** out, char** err) {
  if (!b || !out) {
    set_err(err, "null argument");
    return MLX_ERR_ARGUMENT;
  }
  return guarded(err, [&] {
    *out = new mlx_algebra{algebra_from_biposet(b->rep)};
    return MLX_OK;
  });
}

mlx_status mlx_algebra_parse(const char* text, mlx_algebra** out, char** err) {
  if (!text || !out) {
    set_err(err, "null argument");
    return MLX_ERR_ARGUMENT;
  }
  return guarded(err, [&] {
    *out = new mlx_algebra{parse_mla(text)};
    return MLX_OK;
  });
}

mlx_status mlx_algebra_emit(const mlx_algebra* a, char** out) {
  if (!a || !out) return MLX_ERR_ARGUMENT;
  return guarded(nullptr, [&] {
    *out = copy_string(emit_mla(a->rep));
    return MLX_OK;
  });
}

size_t mlx_algebra_size(const mlx_algebra* a) { return a ? a->rep.size() : 0; }

mlx_status mlx_algebra_axioms_json(const mlx_algebra* a, char** out) {
  if (!a || !out) return MLX_ERR_ARGUMENT;
  return guarded(nullptr, [&] {
    *out = copy_string(axioms_report_json(a->rep));
    return MLX_OK;
  });
}

mlx_status mlx_algebra_to_orders(const mlx_algebra* a, mlx_biposet** out, char** err) {
  if (!a || !out) {
    set_err(err, "null argument");
    return MLX_ERR_ARGUMENT;
  }
  return guarded(err, [&] {
    *out = new mlx_biposet{orders_from_algebra(a->rep)};
    return MLX_OK;
  });
}

mlx_status mlx_enumerate_json(size_t n, int include_structures, char** out,
                              char** err) {
  if (!out) {
    set_err(err, "null argument");
    return MLX_ERR_ARGUMENT;
  }
  return guarded(err, [&] {
    *out = copy_string(enumeration_report_json(n, include_structures != 0));
    return MLX_OK;
  });
}

mlx_status mlx_rat_envelope(int kind_upper, const char* r, const char* q,
                            char** result, char** err) {
  if (!r || !q || !result) {
    set_err(err, "null argument");
    return MLX_ERR_ARGUMENT;
  }
  return guarded(err, [&] {
    PosRational rr = PosRational::parse(r);
    PosRational qq = PosRational::parse(q);
    PosRational value = kind_upper ? env_upper(rr, qq) : env_lower(rr, qq);
    *result = copy_string(value.str());
    return MLX_OK;
  });
}

mlx_status mlx_rat_check_json(unsigned long long seed, unsigned long long count,
                              unsigned long long bound, char** out, char** err) {
  if (!out) {
    set_err(err, "null argument");
    return MLX_ERR_ARGUMENT;
  }
  return guarded(err, [&] {
    *out = copy_string(group_law_report_json(check_group_laws(seed, count, bound)));
    return MLX_OK;
  });
}

}  // extern "C"
