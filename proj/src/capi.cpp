// C interface: thin, exception-safe wrappers over the C++ core. Every entry
// point catches library errors and maps them onto status codes, stashing the
// message in a thread-local slot for ringlcp_last_error().
#include "ringlcp.h"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "config.hpp"
#include "lcp.hpp"
#include "reproduce.hpp"

using nlohmann::ordered_json;
using namespace ringlcp;

struct ringlcp_ring {
  alg::AlgebraPtr a;
};

struct ringlcp_code {
  codes::LinearCode c;
};

namespace {

thread_local std::string g_last_error;

int status_of(ErrorKind k) {
  switch (k) {
    case ErrorKind::Invalid: return RINGLCP_EINVAL;
    case ErrorKind::Budget: return RINGLCP_EBUDGET;
    case ErrorKind::Unsupported: return RINGLCP_EUNSUPPORTED;
    case ErrorKind::Internal: return RINGLCP_EINTERNAL;
  }
  return RINGLCP_EINTERNAL;
}

/// Runs `body`, translating exceptions into status codes.
template <typename Fn>
int guarded(Fn&& body) {
  g_last_error.clear();
  try {
    body();
    return RINGLCP_OK;
  } catch (const Error& e) {
    g_last_error = e.message;
    return status_of(e.kind);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return RINGLCP_EINTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return RINGLCP_EINTERNAL;
  }
}

int invalid(const char* message) {
  g_last_error = message;
  return RINGLCP_EINVAL;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string text_or(const char* s, const char* fallback) {
  return (s && *s) ? std::string(s) : std::string(fallback);
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  size_t start = 0;
  while (start <= text.size()) {
    size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    std::string tok = text.substr(start, comma - start);
    size_t a = tok.find_first_not_of(" \t");
    size_t b = tok.find_last_not_of(" \t");
    if (a != std::string::npos) out.push_back(tok.substr(a, b - a + 1));
    start = comma + 1;
  }
  return out;
}

uint64_t budget_uint(const nlohmann::json& v, const char* key) {
  if (!v.is_number_integer() || v.template get<int64_t>() < 0)
    fail(ErrorKind::Invalid,
         std::string("budget: '") + key + "' must be a non-negative integer");
  return v.template get<uint64_t>();
}

bool budget_bool(const nlohmann::json& v, const char* key) {
  if (!v.is_boolean())
    fail(ErrorKind::Invalid, std::string("budget: '") + key + "' must be a boolean");
  return v.template get<bool>();
}

rmod::Budget budget_from_json(const char* budget_json) {
  rmod::Budget b = rmod::Budget::from_env();
  if (!budget_json || !*budget_json) return b;
  nlohmann::json spec;
  try {
    spec = nlohmann::json::parse(budget_json);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Invalid, std::string("budget: ") + e.what());
  }
  if (!spec.is_object()) fail(ErrorKind::Invalid, "budget: expected a JSON object");
  for (const auto& [key, value] : spec.items()) {
    if (key == "scan_cap") b.scan_cap = budget_uint(value, "scan_cap");
    else if (key == "distance_cap") b.distance_cap = budget_uint(value, "distance_cap");
    else if (key == "sampling") b.sampling = budget_bool(value, "sampling");
    else if (key == "sample_count") b.sample_count = budget_uint(value, "sample_count");
    else if (key == "seed") b.seed = budget_uint(value, "seed");
    else if (key == "threads") b.threads = static_cast<int>(budget_uint(value, "threads"));
    else if (key == "timings") b.timings = budget_bool(value, "timings");
    else fail(ErrorKind::Invalid, "budget: unknown member '" + key + "'");
  }
  return b;
}

std::vector<int> parse_sweep(const char* q_sweep_csv) {
  std::vector<int> sweep;
  for (const auto& tok : split_csv(text_or(q_sweep_csv, ""))) {
    try {
      size_t used = 0;
      int q = std::stoi(tok, &used);
      if (used != tok.size() || q < 2) throw std::invalid_argument(tok);
      sweep.push_back(q);
    } catch (const std::exception&) {
      fail(ErrorKind::Invalid, "q-sweep: '" + tok + "' is not an integer >= 2");
    }
  }
  return sweep;
}

rmod::RingVector unflatten_row(const alg::Algebra& a, int n, const uint32_t* row) {
  rmod::RingVector v(n, a.zero());
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < a.dim(); ++k) v[i][static_cast<size_t>(k)] = row[i * a.dim() + k];
  return v;
}

ordered_json matrix_rows(const alg::Algebra& a, const codes::RingMatrix& m) {
  auto rows = ordered_json::array();
  for (int i = 0; i < m.rows; ++i) {
    auto row = ordered_json::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(a.format_elem(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

ordered_json submodule_rows(const rmod::Submodule& m) {
  const alg::Algebra& a = *m.algebra();
  auto rows = ordered_json::array();
  const fq::Mat& basis = m.flat_basis();
  for (int r = 0; r < basis.rows; ++r) {
    auto vec = unflatten_row(a, m.length(), &basis.a[static_cast<size_t>(r) * basis.cols]);
    auto row = ordered_json::array();
    for (const auto& entry : vec) row.push_back(a.format_elem(entry));
    rows.push_back(row);
  }
  return rows;
}

/// Re-homes `other` onto `base`'s algebra handle when the presentations
/// match; coordinates are presentation-level so the rows transfer verbatim.
codes::LinearCode align_code(const codes::LinearCode& base,
                             const codes::LinearCode& other) {
  if (base.algebra().get() == other.algebra().get()) return other;
  if (!config::same_presentation(*base.algebra(), *other.algebra()))
    fail(ErrorKind::Invalid, "the two codes live over different rings");
  std::vector<rmod::RingVector> rows;
  for (int i = 0; i < other.generators().rows; ++i)
    rows.push_back(other.generators().row(i));
  return codes::LinearCode::from_generators(base.algebra(), other.length(), rows);
}

const codes::LinearCode& code_of(const ringlcp_code* c) { return c->c; }

// ---- check-lcp with a method subset -------------------------------------

enum MethodBit {
  kDefinition = 1,
  kPi = 2,
  kParity = 4,
  kStack = 8,
  kStructural = 16,
  kHull = 32,
  kAll = 63,
};

unsigned parse_methods(const char* methods_csv) {
  std::string text = text_or(methods_csv, "all");
  unsigned mask = 0;
  for (const auto& tok : split_csv(text)) {
    if (tok == "all") mask |= kAll;
    else if (tok == "definition") mask |= kDefinition;
    else if (tok == "pi_reduction" || tok == "pi") mask |= kPi;
    else if (tok == "parity_product" || tok == "parity") mask |= kParity;
    else if (tok == "generator_stack" || tok == "stack") mask |= kStack;
    else if (tok == "structural") mask |= kStructural;
    else if (tok == "injective_hull" || tok == "hull") mask |= kHull;
    else fail(ErrorKind::Invalid, "unknown method '" + tok + "'");
  }
  if (mask == 0) fail(ErrorKind::Invalid, "no methods selected");
  return mask;
}

template <typename Fn>
lcp::CriterionResult timed_criterion(bool timings, Fn&& fn) {
  auto start = std::chrono::steady_clock::now();
  lcp::CriterionResult r = fn();
  if (timings) {
    r.timing_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  }
  return r;
}

std::string check_lcp_subset(const codes::LinearCode& C,
                             const codes::LinearCode& D, unsigned mask,
                             const rmod::Budget& budget) {
  const alg::Algebra& a = *C.algebra();
  auto criteria = ordered_json::array();
  std::vector<lcp::Verdict> definite;
  std::optional<lcp::CriterionResult> definition;

  auto push = [&](const lcp::CriterionResult& r) {
    criteria.push_back(ordered_json::parse(lcp::criterion_json(a, r)));
    if (r.definite()) definite.push_back(r.verdict);
  };

  if (mask & kDefinition) {
    auto r = timed_criterion(budget.timings,
                             [&] { return lcp::is_lcp_definition(C, D); });
    definition = r;
    push(r);
  }
  if (mask & kPi)
    push(timed_criterion(budget.timings, [&] { return lcp::lcp_by_pi(C, D); }));
  if (mask & kParity)
    push(timed_criterion(budget.timings,
                         [&] { return lcp::lcp_by_parity_product(C, D); }));
  if (mask & kStack)
    push(timed_criterion(budget.timings,
                         [&] { return lcp::lcp_by_generator_stack(C, D); }));
  if (mask & kStructural) {
    auto start = std::chrono::steady_clock::now();
    lcp::StructuralBundle bundle = lcp::lcp_structural(C, D, budget);
    if (budget.timings) {
      bundle.combined.timing_ms = std::chrono::duration<double, std::milli>(
                                      std::chrono::steady_clock::now() - start)
                                      .count();
    }
    auto structural = ordered_json::parse(lcp::criterion_json(a, bundle.combined));
    structural["cardinality_ok"] = bundle.cardinality_ok;
    structural["disjoint"] = bundle.disjoint;
    auto slots = ordered_json::array();
    for (const auto& s : bundle.slots)
      slots.push_back(ordered_json::parse(lcp::criterion_json(a, s)));
    structural["slots"] = slots;
    criteria.push_back(structural);
    if (bundle.combined.definite()) definite.push_back(bundle.combined.verdict);
  }
  if (mask & kHull)
    push(timed_criterion(budget.timings,
                         [&] { return lcp::lcp_by_injective_hull(C, D, budget); }));

  bool consistent = true;
  for (const auto& v : definite)
    if (v != definite.front()) consistent = false;

  ordered_json j;
  j["ring"] = a.name();
  j["criteria"] = criteria;
  j["consistent"] = consistent;
  j["security"] = nullptr;
  if (definition && definition->yes() && consistent && !C.module().is_zero() &&
      !D.module().is_full()) {
    try {
      lcp::LcpSecurity sec = lcp::security_parameter(C, D, budget);
      j["security"] = {{"d_C", sec.d_C}, {"d_D_dual", sec.d_D_dual}};
    } catch (const Error& e) {
      if (e.kind != ErrorKind::Budget) throw;
    }
  }
  return j.dump();
}

}  // namespace

extern "C" {

const char* ringlcp_version(void) { return "0.1.0"; }

const char* ringlcp_last_error(void) { return g_last_error.c_str(); }

void ringlcp_string_free(char* s) { std::free(s); }

int ringlcp_ring_from_spec(const char* spec_text, const char* filename_hint,
                           ringlcp_ring** out) {
  if (!spec_text || !out) return invalid("null argument");
  return guarded([&] {
    auto a = config::ring_from_text(spec_text, text_or(filename_hint, "config"));
    *out = new ringlcp_ring{std::move(a)};
  });
}

int ringlcp_ring_from_preset(const char* preset, ringlcp_ring** out) {
  if (!preset || !out) return invalid("null argument");
  return guarded([&] { *out = new ringlcp_ring{alg::Algebra::preset(preset)}; });
}

void ringlcp_ring_free(ringlcp_ring* ring) { delete ring; }

int ringlcp_ring_info_json(const ringlcp_ring* ring, const char* budget_json,
                           char** out_json) {
  if (!ring || !out_json) return invalid("null argument");
  return guarded([&] {
    rmod::Budget budget = budget_from_json(budget_json);
    const alg::Algebra& a = *ring->a;

    ordered_json j;
    j["name"] = a.name();
    j["field"] = {{"p", a.field().p()}, {"m", a.field().m()}, {"q", a.field().q()}};
    j["dim"] = a.dim();
    j["size"] = rmod::Submodule::full(ring->a, 1, rmod::Side::Right).cardinality();
    j["commutative"] = a.is_commutative();
    j["local"] = a.is_local();

    const alg::IdealSubspace& J = a.jacobson_radical();
    auto jbasis = ordered_json::array();
    for (int r = 0; r < J.basis.rows; ++r) {
      alg::RingElem x(J.basis.a.begin() + static_cast<size_t>(r) * J.basis.cols,
                      J.basis.a.begin() + static_cast<size_t>(r + 1) * J.basis.cols);
      jbasis.push_back(a.format_elem(x));
    }
    j["jacobson"] = {{"dim", J.basis.rows},
                     {"nilpotency_index", a.nilpotency_index()},
                     {"basis", jbasis}};

    alg::FrobeniusCertificate cert = a.frobenius_certificate();
    j["socle"] = {{"right_dim", cert.dim_socle_right},
                  {"left_dim", cert.dim_socle_left}};
    j["residue"] = {{"map_available", a.residue_map_available()},
                    {"dim_residue", cert.dim_residue}};

    std::optional<uint64_t> total = rmod::vector_space_size(a, 1);
    if (total && *total <= budget.scan_cap) {
      uint64_t units = 0;
      for (uint64_t idx = 0; idx < *total; ++idx)
        if (a.is_unit(a.elem_from_index(idx))) ++units;
      j["unit_count"] = units;
    } else {
      j["unit_count"] = nullptr;
    }

    j["frobenius_necessary"] = {{"passed", cert.passed},
                                {"dim_socle_right", cert.dim_socle_right},
                                {"dim_socle_left", cert.dim_socle_left},
                                {"dim_residue", cert.dim_residue},
                                {"socle_right_cyclic", cert.socle_right_cyclic}};
    *out_json = dup_string(j.dump());
  });
}

int ringlcp_code_from_spec(const ringlcp_ring* ring, const char* spec_text,
                           const char* filename_hint, ringlcp_code** out) {
  if (!ring || !spec_text || !out) return invalid("null argument");
  return guarded([&] {
    auto code = config::code_from_text(ring->a, spec_text,
                                       text_or(filename_hint, "config"));
    *out = new ringlcp_code{std::move(code)};
  });
}

void ringlcp_code_free(ringlcp_code* code) { delete code; }

int ringlcp_check_lcp_json(const ringlcp_code* c, const ringlcp_code* d,
                           const char* methods_csv, const char* budget_json,
                           char** out_json) {
  if (!c || !d || !out_json) return invalid("null argument");
  return guarded([&] {
    unsigned mask = parse_methods(methods_csv);
    rmod::Budget budget = budget_from_json(budget_json);
    codes::LinearCode D = align_code(code_of(c), code_of(d));
    if (mask == kAll) {
      lcp::LcpReport report = lcp::check_lcp(code_of(c), D, budget);
      *out_json = dup_string(lcp::report_json(*code_of(c).algebra(), report));
    } else {
      *out_json = dup_string(check_lcp_subset(code_of(c), D, mask, budget));
    }
  });
}

int ringlcp_dual_json(const ringlcp_code* code, const char* budget_json,
                      char** out_json) {
  if (!code || !out_json) return invalid("null argument");
  return guarded([&] {
    rmod::Budget budget = budget_from_json(budget_json);
    const rmod::Submodule& dual = code_of(code).dual();
    ordered_json j;
    j["n"] = dual.length();
    j["side"] = dual.side() == rmod::Side::Left ? "left" : "right";
    j["dim"] = dual.dim();
    j["cardinality"] = dual.cardinality();
    j["generators"] = submodule_rows(dual);
    if (dual.is_zero()) {
      j["min_distance"] = nullptr;
    } else {
      try {
        j["min_distance"] = codes::min_distance_of(dual, budget);
      } catch (const Error& e) {
        if (e.kind != ErrorKind::Budget) throw;
        j["min_distance"] = nullptr;
      }
    }
    *out_json = dup_string(j.dump());
  });
}

int ringlcp_min_distance(const ringlcp_code* code, const char* budget_json,
                         int* out_distance) {
  if (!code || !out_distance) return invalid("null argument");
  return guarded([&] {
    rmod::Budget budget = budget_from_json(budget_json);
    *out_distance = code_of(code).min_distance(budget);
  });
}

int ringlcp_security_json(const ringlcp_code* c, const ringlcp_code* d,
                          const char* budget_json, char** out_json) {
  if (!c || !d || !out_json) return invalid("null argument");
  return guarded([&] {
    rmod::Budget budget = budget_from_json(budget_json);
    codes::LinearCode D = align_code(code_of(c), code_of(d));
    lcp::LcpSecurity sec = lcp::security_parameter(code_of(c), D, budget);
    ordered_json j;
    j["d_C"] = sec.d_C;
    j["d_D_dual"] = sec.d_D_dual;
    *out_json = dup_string(j.dump());
  });
}

int ringlcp_idempotent_json(const ringlcp_code* c, const ringlcp_code* d,
                            const char* budget_json, char** out_json) {
  if (!c || !d || !out_json) return invalid("null argument");
  return guarded([&] {
    (void)budget_from_json(budget_json);  // validated for interface uniformity
    codes::LinearCode D = align_code(code_of(c), code_of(d));
    lcp::ProjectionIdempotent proj = lcp::projection_idempotent(code_of(c), D);
    const alg::Algebra& a = *code_of(c).algebra();
    ordered_json j;
    j["e"] = matrix_rows(a, proj.e);
    j["E"] = matrix_rows(a, proj.E);
    j["e_squared"] = proj.e_squared;
    *out_json = dup_string(j.dump());
  });
}

int ringlcp_equivalence_json(const ringlcp_code* c, const ringlcp_code* d,
                             const char* budget_json, char** out_json) {
  if (!c || !d || !out_json) return invalid("null argument");
  return guarded([&] {
    rmod::Budget budget = budget_from_json(budget_json);
    codes::LinearCode D = align_code(code_of(c), code_of(d));
    equiv::EquivalenceResult r =
        equiv::equivalent(code_of(c).module(), D.module(), budget);
    *out_json = dup_string(equiv::certificate_json(*code_of(c).algebra(), r));
  });
}

int ringlcp_duality_json(const ringlcp_code* c, const ringlcp_code* d,
                         const char* supplied_e_json, const char* budget_json,
                         char** out_json) {
  if (!c || !d || !out_json) return invalid("null argument");
  return guarded([&] {
    rmod::Budget budget = budget_from_json(budget_json);
    codes::LinearCode D = align_code(code_of(c), code_of(d));
    const alg::Algebra& a = *code_of(c).algebra();

    std::optional<codes::RingMatrix> supplied;
    if (supplied_e_json && *supplied_e_json) {
      nlohmann::json rows;
      try {
        rows = nlohmann::json::parse(supplied_e_json);
      } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::Invalid, std::string("idempotent: ") + e.what());
      }
      if (!rows.is_array() || rows.empty())
        fail(ErrorKind::Invalid, "idempotent: expected an array of rows");
      int n = static_cast<int>(rows.size());
      codes::RingMatrix m = codes::RingMatrix::make(code_of(c).algebra(), n, n);
      for (int i = 0; i < n; ++i) {
        const auto& row = rows[static_cast<size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != n)
          fail(ErrorKind::Invalid, "idempotent: expected a square matrix");
        for (int jj = 0; jj < n; ++jj) {
          const auto& cell = row[static_cast<size_t>(jj)];
          if (cell.is_string())
            m.at(i, jj) = a.parse_elem(cell.template get<std::string>());
          else if (cell.is_number_integer())
            m.at(i, jj) = a.parse_elem(std::to_string(cell.template get<int64_t>()));
          else
            fail(ErrorKind::Invalid, "idempotent: entries must be literals");
        }
      }
      supplied = std::move(m);
    }

    lcp::DualityReport rep =
        lcp::dual_equivalence_pipeline(code_of(c), D, budget, supplied);
    *out_json = dup_string(lcp::duality_json(a, rep));
  });
}

int ringlcp_reproduce_json(const char* examples_csv, const char* q_sweep_csv,
                           const char* budget_json, char** out_json) {
  if (!out_json) return invalid("null argument");
  return guarded([&] {
    rmod::Budget budget = budget_from_json(budget_json);
    std::string examples = text_or(examples_csv, "all");
    std::vector<std::string> ids =
        examples == "all" ? repro::example_ids() : split_csv(examples);
    auto rep = repro::run(ids, parse_sweep(q_sweep_csv), budget);
    *out_json = dup_string(repro::report_json(rep));
  });
}

int ringlcp_reproduce_text(const char* examples_csv, const char* q_sweep_csv,
                           const char* budget_json, char** out_text) {
  if (!out_text) return invalid("null argument");
  return guarded([&] {
    rmod::Budget budget = budget_from_json(budget_json);
    std::string examples = text_or(examples_csv, "all");
    std::vector<std::string> ids =
        examples == "all" ? repro::example_ids() : split_csv(examples);
    auto rep = repro::run(ids, parse_sweep(q_sweep_csv), budget);
    *out_text = dup_string(repro::report_text(rep));
  });
}

int ringlcp_example_ids(char** out_csv) {
  if (!out_csv) return invalid("null argument");
  return guarded([&] {
    std::string joined;
    for (const auto& id : repro::example_ids()) {
      if (!joined.empty()) joined += ",";
      joined += id;
    }
    *out_csv = dup_string(joined);
  });
}

}  // extern "C"
