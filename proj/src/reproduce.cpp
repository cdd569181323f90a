#include "reproduce.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "json.hpp"

namespace ringlcp::repro {

namespace {

using alg::Algebra;
using alg::AlgebraPtr;
using codes::LinearCode;
using codes::RingMatrix;
using rmod::RingVector;
using rmod::Side;
using rmod::Submodule;

struct Eval {
  bool ok = false;
  std::string verdict;
  std::string witness;
};

struct Claim {
  std::string text;
  std::function<Eval(int q, const Budget&)> fn;
};

struct ExampleDef {
  std::string id;
  std::vector<int> fixed_qs;  // empty = use the sweep
  std::vector<Claim> claims;
};

std::string fmt_vec(const Algebra& a, const RingVector& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += a.format_elem(v[i]);
  }
  return out + ")";
}

LinearCode make_code(const AlgebraPtr& a, int n,
                     const std::vector<std::vector<const char*>>& rows) {
  std::vector<RingVector> rv;
  for (const auto& r : rows) {
    RingVector v;
    for (const char* lit : r) v.push_back(a->parse_elem(lit));
    rv.push_back(std::move(v));
  }
  return LinearCode::from_generators(a, n, rv);
}

std::pair<LinearCode, LinearCode> pair31(int q) {
  auto a = Algebra::preset("ut2(" + std::to_string(q) + ")");
  return {make_code(a, 4, {{"1", "0", "1", "0"}, {"0", "1", "0", "1"}}),
          make_code(a, 4, {{"1", "1", "1", "1"}, {"0", "1", "1", "1"}})};
}

std::pair<LinearCode, LinearCode> pair41(int q) {
  auto a = Algebra::preset("blockpair(" + std::to_string(q) + ")");
  return {make_code(a, 1, {{"e1"}}), make_code(a, 1, {{"e2"}})};
}

std::pair<LinearCode, LinearCode> pair54() {
  auto a = Algebra::preset("ut2(3)");
  return {make_code(a, 3, {{"1", "2", "0"}, {"0", "1", "2"}}),
          make_code(a, 3, {{"1", "2", "1"}})};
}

RingMatrix idem54(const AlgebraPtr& a) {
  return RingMatrix::from_rows(
      a, 3,
      {{a->parse_elem("1"), a->parse_elem("0"), a->parse_elem("2")},
       {a->parse_elem("0"), a->parse_elem("1"), a->parse_elem("2")},
       {a->parse_elem("0"), a->parse_elem("0"), a->parse_elem("0")}});
}

std::pair<LinearCode, LinearCode> pair55(int q) {
  auto a = Algebra::preset("blockpair(" + std::to_string(q) + ")");
  return {make_code(a, 4, {{"1", "0", "1", "1"}, {"0", "1", "1", "1"}}),
          make_code(a, 4, {{"1", "1", "1", "0"}, {"1", "1", "0", "1"}})};
}

/// The generator-padded idempotent for the swept example: the two generator
/// rows of C on top, zero rows below.
RingMatrix idem55(const AlgebraPtr& a) {
  auto lit = [&](const char* s) { return a->parse_elem(s); };
  return RingMatrix::from_rows(
      a, 4,
      {{lit("1"), lit("0"), lit("1"), lit("1")},
       {lit("0"), lit("1"), lit("1"), lit("1")},
       {lit("0"), lit("0"), lit("0"), lit("0")},
       {lit("0"), lit("0"), lit("0"), lit("0")}});
}

Eval eval_sum_full(const LinearCode& C, const LinearCode& D) {
  const Algebra& a = *C.algebra();
  Submodule sum = C.module().sum(D.module());
  int total = C.length() * a.dim();
  Eval e;
  e.ok = sum.is_full();
  e.verdict = "dim(C + D) = " + std::to_string(sum.dim()) + " of " +
              std::to_string(total);
  if (!e.ok) {
    for (int j = 0; j < C.length() && e.witness.empty(); ++j)
      for (int b = 0; b < a.dim(); ++b) {
        RingVector v = rmod::zero_vector(a, C.length());
        v[static_cast<size_t>(j)] = a.basis_elem(b);
        if (!sum.contains(v)) {
          e.witness = fmt_vec(a, v) + " lies outside C + D";
          break;
        }
      }
  }
  return e;
}

Eval eval_lcp(const LinearCode& C, const LinearCode& D, bool expect_yes) {
  auto def = lcp::is_lcp_definition(C, D);
  Eval e;
  e.ok = def.yes() == expect_yes;
  e.verdict = std::string("complementary pair: ") +
              lcp::verdict_name(def.verdict);
  if (def.witness)
    e.witness = fmt_vec(*C.algebra(), *def.witness) + " (" + def.note + ")";
  return e;
}

Eval eval_commutativity_label(const AlgebraPtr& a) {
  Eval e;
  e.ok = !a->is_commutative();
  e.verdict = std::string("observed multiplication is ") +
              (a->is_commutative() ? "commutative" : "non-commutative");
  return e;
}

Eval eval_idempotent(const RingMatrix& m) {
  Eval e;
  e.ok = codes::is_idempotent(m);
  e.verdict = e.ok ? "e * e = e" : "e * e != e";
  return e;
}

Eval eval_image_is_C(const RingMatrix& e_mat, const LinearCode& C) {
  Eval e;
  LinearCode image = LinearCode::from_column_span(codes::transpose(e_mat));
  e.ok = image.module().equals(C.module());
  e.verdict = "column span of e^T has dimension " +
              std::to_string(image.module().dim()) + ", C has " +
              std::to_string(C.module().dim());
  return e;
}

Eval eval_dual_formula(const RingMatrix& e_mat, const LinearCode& C) {
  const AlgebraPtr& a = C.algebra();
  int n = C.length();
  RingMatrix E = codes::transpose(e_mat);
  RingMatrix co = codes::mat_sub(RingMatrix::identity(a, n), E);
  Submodule formula = Submodule::from_generators(a, n, co.row_list(),
                                                 Side::Left);
  Eval ev;
  ev.ok = equiv::same_tuple_set(C.dual(), formula);
  ev.verdict = ev.ok ? "annihilator dual equals the row span of 1 - e^T"
                     : "annihilator dual differs from the row span of 1 - e^T";
  return ev;
}

Eval eval_dual_equiv_to(const Submodule& dual, const Submodule& target,
                        const Budget& budget) {
  const Algebra& a = *dual.algebra();
  auto res = equiv::equivalent(dual, target, budget);
  Eval e;
  e.ok = res.found();
  e.verdict = std::string("equivalence search: ") + equiv::kind_name(res.kind);
  if (res.found() && !res.permutation.empty()) {
    std::string w = "sigma = [";
    for (size_t i = 0; i < res.permutation.size(); ++i) {
      if (i) w += ", ";
      w += std::to_string(res.permutation[i]);
    }
    w += "], scalars = (";
    for (size_t i = 0; i < res.scalars.size(); ++i) {
      if (i) w += ", ";
      w += a.format_elem(res.scalars[i]);
    }
    e.witness = w + ")";
  }
  return e;
}

Eval eval_distance_pair(const Submodule& x, const char* xname,
                        const Submodule& y, const char* yname,
                        const Budget& budget) {
  Eval e;
  int dx = codes::min_distance_of(x, budget);
  int dy = codes::min_distance_of(y, budget);
  e.ok = dx == dy;
  e.verdict = std::string(xname) + " = " + std::to_string(dx) + ", " + yname +
              " = " + std::to_string(dy);
  return e;
}

std::vector<ExampleDef> build_examples() {
  std::vector<ExampleDef> defs;

  // ---- example 3.1: overlapping free pair over the chain ring -------------
  ExampleDef e31{"3.1", {2, 3}, {}};
  e31.claims.push_back({"C + D = R^n", [](int q, const Budget&) {
                          auto [C, D] = pair31(q);
                          return eval_sum_full(C, D);
                        }});
  e31.claims.push_back(
      {"C intersect D != {0}", [](int q, const Budget&) {
         auto [C, D] = pair31(q);
         Submodule meet = C.module().intersect(D.module());
         Eval e;
         e.ok = !meet.is_zero();
         e.verdict = "dim(C intersect D) = " + std::to_string(meet.dim());
         if (e.ok) {
           const fq::Mat& b = meet.flat_basis();
           e.witness = fmt_vec(*C.algebra(),
                               meet.unflatten(std::vector<uint32_t>(
                                   b.a.begin(), b.a.begin() + b.cols)));
         }
         return e;
       }});
  e31.claims.push_back(
      {"(1,1,1,1) lies in C intersect D", [](int q, const Budget&) {
         auto [C, D] = pair31(q);
         RingVector ones(4, C.algebra()->unity());
         Eval e;
         e.ok = C.module().contains(ones) && D.module().contains(ones);
         e.verdict = e.ok ? "membership holds in both codes"
                          : "membership fails";
         return e;
       }});
  e31.claims.push_back({"C and D are free modules", [](int q, const Budget&) {
                          auto [C, D] = pair31(q);
                          auto [cf, ck] = C.module().is_free();
                          auto [df, dk] = D.module().is_free();
                          Eval e;
                          e.ok = cf && df;
                          e.verdict = "C free: " + std::string(cf ? "yes" : "no") +
                                      " (rank " + std::to_string(ck) +
                                      "), D free: " + (df ? "yes" : "no") +
                                      " (rank " + std::to_string(dk) + ")";
                          return e;
                        }});
  e31.claims.push_back(
      {"(C, D) is not a complementary pair", [](int q, const Budget&) {
         auto [C, D] = pair31(q);
         return eval_lcp(C, D, /*expect_yes=*/false);
       }});
  e31.claims.push_back(
      {"the ring is non-commutative (as labeled)", [](int q, const Budget&) {
         return eval_commutativity_label(
             Algebra::preset("ut2(" + std::to_string(q) + ")"));
       }});
  defs.push_back(std::move(e31));

  // ---- example 4.1: idempotent pair of non-free codes ---------------------
  ExampleDef e41{"4.1", {2, 3}, {}};
  e41.claims.push_back(
      {"(C, D) is a complementary pair", [](int q, const Budget&) {
         auto [C, D] = pair41(q);
         return eval_lcp(C, D, /*expect_yes=*/true);
       }});
  e41.claims.push_back(
      {"neither C nor D is free", [](int q, const Budget&) {
         auto [C, D] = pair41(q);
         int d = C.algebra()->dim();
         Eval e;
         // A free module's scalar dimension is a multiple of dim R.
         e.ok = C.module().dim() % d != 0 && D.module().dim() % d != 0;
         e.verdict = "dim C = " + std::to_string(C.module().dim()) +
                     ", dim D = " + std::to_string(D.module().dim()) +
                     "; dim R = " + std::to_string(d);
         return e;
       }});
  e41.claims.push_back(
      {"C and D are direct summands of R^n", [](int q, const Budget& b) {
         auto [C, D] = pair41(q);
         auto cs = C.module().direct_summand(b).first;
         auto ds = D.module().direct_summand(b).first;
         Eval e;
         e.ok = cs.yes() && ds.yes();
         e.verdict = std::string("C summand: ") + rmod::tri_name(cs.verdict) +
                     ", D summand: " + rmod::tri_name(ds.verdict);
         return e;
       }});
  e41.claims.push_back(
      {"C + D is essential in R^n", [](int q, const Budget& b) {
         auto [C, D] = pair41(q);
         auto ess = C.module().sum(D.module()).is_essential(b);
         Eval e;
         e.ok = ess.yes();
         e.verdict = std::string("essential: ") + rmod::tri_name(ess.verdict);
         return e;
       }});
  e41.claims.push_back(
      {"C + D is closed in R^n", [](int q, const Budget& b) {
         auto [C, D] = pair41(q);
         auto cl = C.module().sum(D.module()).is_closed(b);
         Eval e;
         e.ok = cl.yes();
         e.verdict = std::string("closed: ") + rmod::tri_name(cl.verdict);
         return e;
       }});
  e41.claims.push_back(
      {"R is not local and R/J(R) has scalar dimension 2",
       [](int q, const Budget&) {
         auto a = Algebra::preset("blockpair(" + std::to_string(q) + ")");
         auto cert = a->frobenius_certificate();
         Eval e;
         e.ok = !a->is_local() && cert.dim_residue == 2;
         e.verdict = std::string("local: ") + (a->is_local() ? "yes" : "no") +
                     ", dim R/J = " + std::to_string(cert.dim_residue);
         return e;
       }});
  e41.claims.push_back(
      {"the projection onto C along D is (e1)", [](int q, const Budget&) {
         auto [C, D] = pair41(q);
         auto proj = lcp::projection_idempotent(C, D);
         const Algebra& a = *C.algebra();
         Eval e;
         e.ok = proj.E.rows == 1 && proj.E.at(0, 0) == a.parse_elem("e1");
         e.verdict = "computed projection entry: " +
                     a.format_elem(proj.E.at(0, 0));
         return e;
       }});
  e41.claims.push_back(
      {"the ring is non-commutative (as labeled)", [](int q, const Budget&) {
         return eval_commutativity_label(
             Algebra::preset("blockpair(" + std::to_string(q) + ")"));
       }});
  defs.push_back(std::move(e41));

  // ---- example 5.4: duality pipeline over the 9-element chain ring --------
  ExampleDef e54{"5.4", {3}, {}};
  e54.claims.push_back(
      {"(C, D) is a complementary pair", [](int, const Budget&) {
         auto [C, D] = pair54();
         auto stack = lcp::lcp_by_generator_stack(C, D);
         Eval e = eval_lcp(C, D, /*expect_yes=*/true);
         e.verdict += std::string("; generator stack: ") +
                      lcp::verdict_name(stack.verdict);
         e.ok = e.ok && stack.yes();
         return e;
       }});
  e54.claims.push_back({"e * e = e for the printed idempotent",
                        [](int, const Budget&) {
                          auto [C, D] = pair54();
                          return eval_idempotent(idem54(C.algebra()));
                        }});
  e54.claims.push_back({"the image of e^T equals C", [](int, const Budget&) {
                          auto [C, D] = pair54();
                          return eval_image_is_C(idem54(C.algebra()), C);
                        }});
  e54.claims.push_back(
      {"C-dual = {b (1 - e^T) : b in R^n}", [](int, const Budget&) {
         auto [C, D] = pair54();
         return eval_dual_formula(idem54(C.algebra()), C);
       }});
  e54.claims.push_back(
      {"C-dual is equivalent to D", [](int, const Budget& b) {
         auto [C, D] = pair54();
         return eval_dual_equiv_to(C.dual(), D.module(), b);
       }});
  defs.push_back(std::move(e54));

  // ---- example 5.5: characteristic-swept pair over the product ring -------
  ExampleDef e55{"5.5", {}, {}};
  e55.claims.push_back(
      {"C (+) D = R^n (complementary pair)", [](int q, const Budget&) {
         auto [C, D] = pair55(q);
         return eval_lcp(C, D, /*expect_yes=*/true);
       }});
  e55.claims.push_back({"e * e = e for the printed idempotent",
                        [](int q, const Budget&) {
                          auto [C, D] = pair55(q);
                          return eval_idempotent(idem55(C.algebra()));
                        }});
  e55.claims.push_back({"the image of e^T equals C", [](int q, const Budget&) {
                          auto [C, D] = pair55(q);
                          return eval_image_is_C(idem55(C.algebra()), C);
                        }});
  e55.claims.push_back(
      {"C-dual = {b (1 - e^T) : b in R^n}", [](int q, const Budget&) {
         auto [C, D] = pair55(q);
         return eval_dual_formula(idem55(C.algebra()), C);
       }});
  e55.claims.push_back(
      {"d(C-dual) = d(D)", [](int q, const Budget& b) {
         auto [C, D] = pair55(q);
         return eval_distance_pair(C.dual(), "d(C-dual)", D.module(), "d(D)",
                                   b);
       }});
  e55.claims.push_back(
      {"d(D-dual) = d(C)", [](int q, const Budget& b) {
         auto [C, D] = pair55(q);
         return eval_distance_pair(D.dual(), "d(D-dual)", C.module(), "d(C)",
                                   b);
       }});
  defs.push_back(std::move(e55));

  return defs;
}

}  // namespace

const std::vector<std::string>& example_ids() {
  static const std::vector<std::string> ids = {"3.1", "4.1", "5.4", "5.5"};
  return ids;
}

ReproReport run(const std::vector<std::string>& examples,
                const std::vector<int>& q_sweep, const Budget& budget) {
  for (const auto& ex : examples) {
    bool known = false;
    for (const auto& id : example_ids()) known |= id == ex;
    if (!known) fail(ErrorKind::Invalid, "unknown example '" + ex + "'");
  }
  std::vector<int> sweep = q_sweep.empty() ? std::vector<int>{2, 3, 5}
                                           : q_sweep;
  ReproReport report;
  for (const auto& def : build_examples()) {
    if (std::find(examples.begin(), examples.end(), def.id) == examples.end())
      continue;
    const std::vector<int>& qs = def.fixed_qs.empty() ? sweep : def.fixed_qs;
    for (const auto& claim : def.claims) {
      // Evaluate at every characteristic first so that a failure can be
      // downgraded to "confirmed-at-other-q" when a sibling run passes.
      std::vector<std::pair<int, Eval>> evals;
      bool any_ok = false;
      for (int q : qs) {
        evals.emplace_back(q, claim.fn(q, budget));
        any_ok |= evals.back().second.ok;
      }
      for (const auto& [q, ev] : evals) {
        ClaimRow row;
        row.example = def.id;
        row.claim = claim.text;
        row.q = q;
        row.verdict = ev.verdict;
        row.status = ev.ok ? "confirmed"
                           : (any_ok ? "confirmed-at-other-q" : "refuted");
        row.witness = ev.witness;
        report.rows.push_back(std::move(row));
      }
    }
  }
  return report;
}

std::string report_json(const ReproReport& r) {
  nlohmann::ordered_json j;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : r.rows) {
    nlohmann::ordered_json o;
    o["example"] = row.example;
    o["claim"] = row.claim;
    o["q"] = row.q;
    o["verdict"] = row.verdict;
    o["status"] = row.status;
    if (!row.witness.empty()) o["witness"] = row.witness;
    rows.push_back(std::move(o));
  }
  j["rows"] = rows;
  return j.dump();
}

std::string report_text(const ReproReport& r) {
  std::ostringstream out;
  std::string last_example;
  for (const auto& row : r.rows) {
    if (row.example != last_example) {
      out << "example " << row.example << "\n";
      last_example = row.example;
    }
    out << "  [q=" << row.q << "] ";
    std::string tag = row.status;
    std::transform(tag.begin(), tag.end(), tag.begin(), ::toupper);
    out << tag << "  " << row.claim << " -- " << row.verdict;
    if (!row.witness.empty()) out << " [witness: " << row.witness << "]";
    out << "\n";
  }
  return out.str();
}

}  // namespace ringlcp::repro
