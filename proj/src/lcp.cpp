#include "lcp.hpp"

#include <chrono>

#include "json.hpp"

namespace ringlcp::lcp {

namespace {

void require_pair(const LinearCode& C, const LinearCode& D) {
  if (C.algebra().get() != D.algebra().get())
    fail(ErrorKind::Invalid, "the codes live over different ring instances");
  if (C.length() != D.length())
    fail(ErrorKind::Invalid, "the codes have different lengths");
}

RingVector first_basis_vector(const Submodule& m) {
  const fq::Mat& b = m.flat_basis();
  return m.unflatten(
      std::vector<uint32_t>(b.a.begin(), b.a.begin() + b.cols));
}

/// Lexicographically first coordinate vector e_j * (basis element) lying
/// outside `m`; exists whenever m is proper.
RingVector coordinate_vector_outside(const Submodule& m) {
  const Algebra& a = *m.algebra();
  int n = m.length();
  for (int j = 0; j < n; ++j) {
    for (int b = 0; b < a.dim(); ++b) {
      RingVector v = rmod::zero_vector(a, n);
      v[static_cast<size_t>(j)] = a.basis_elem(b);
      if (!m.contains(v)) return v;
    }
  }
  fail(ErrorKind::Internal, "no coordinate vector outside a proper submodule");
}

RingVector embed_scalars(const Algebra& a, const std::vector<uint32_t>& row) {
  RingVector v;
  v.reserve(row.size());
  for (uint32_t c : row) v.push_back(a.scalar(c));
  return v;
}

CriterionResult from_predicate(const std::string& name,
                               const rmod::PredicateResult& p) {
  CriterionResult r;
  r.criterion = name;
  switch (p.verdict) {
    case rmod::Tri::Yes: r.verdict = Verdict::Yes; break;
    case rmod::Tri::No: r.verdict = Verdict::No; break;
    case rmod::Tri::BudgetExceeded: r.verdict = Verdict::BudgetExceeded; break;
    case rmod::Tri::Skipped: r.verdict = Verdict::NotApplicable; break;
  }
  r.witness = p.witness;
  r.note = p.note;
  return r;
}

RingMatrix minimal_generator_matrix(const LinearCode& c) {
  return RingMatrix::from_rows(c.algebra(), c.length(),
                               c.module().minimal_generators());
}

/// Invertibility over R with the empty-matrix convention: a 0x0 product or
/// stack is the identity of the zero module, hence invertible.
bool invertible_with_convention(const RingMatrix& m) {
  if (m.rows != m.cols) return false;
  if (m.rows == 0) return true;
  return codes::invertible_over_R(m);
}

/// Common gate evaluation for the matrix criteria. Returns true when every
/// gate passed; flags are appended in evaluation order either way.
bool matrix_criteria_gates(const LinearCode& C, const LinearCode& D,
                           bool need_cardinality, CriterionResult& r) {
  const Algebra& a = *C.algebra();
  bool local = a.is_local();
  r.preconditions.emplace_back("local_ring", local);
  bool residue = local && a.residue_map_available();
  r.preconditions.emplace_back("residue_map", residue);
  if (!local || !residue) {
    r.note = "the residue-map machinery needs a local ring with a prime "
             "residue field";
    return false;
  }
  bool cf = C.module().is_free().first;
  bool df = D.module().is_free().first;
  r.preconditions.emplace_back("C_free", cf);
  r.preconditions.emplace_back("D_free", df);
  if (!cf || !df) {
    r.note = "non-free codes fall outside this criterion";
    return false;
  }
  if (need_cardinality) {
    int nd = C.length() * a.dim();
    bool card = C.module().dim() + D.module().dim() == nd;
    r.preconditions.emplace_back("cardinality", card);
    if (!card) {
      r.note = "|C| * |D| != |R^n|";
      return false;
    }
  }
  return true;
}

std::optional<int> guarded_distance(const Submodule& m, const Budget& budget) {
  if (m.is_zero()) return std::nullopt;
  try {
    return codes::min_distance_of(m, budget);
  } catch (const Error& e) {
    if (e.kind == ErrorKind::Budget) return std::nullopt;
    throw;
  }
}

nlohmann::ordered_json vector_json(const Algebra& a, const RingVector& v) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& x : v) arr.push_back(a.format_elem(x));
  return arr;
}

nlohmann::ordered_json criterion_obj(const Algebra& a,
                                     const CriterionResult& r) {
  nlohmann::ordered_json j;
  j["criterion"] = r.criterion;
  j["verdict"] = verdict_name(r.verdict);
  auto pre = nlohmann::ordered_json::object();
  for (const auto& [name, ok] : r.preconditions) pre[name] = ok;
  j["preconditions"] = pre;
  if (!r.note.empty()) j["note"] = r.note;
  if (r.witness) j["witness"] = {{"vector", vector_json(a, *r.witness)}};
  if (r.timing_ms >= 0) j["timing_ms"] = r.timing_ms;
  return j;
}

nlohmann::ordered_json matrix_json(const Algebra& a, const RingMatrix& m) {
  auto rows = nlohmann::ordered_json::array();
  for (int i = 0; i < m.rows; ++i) rows.push_back(vector_json(a, m.row(i)));
  return rows;
}

}  // namespace

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::NotApplicable: return "not-applicable";
    case Verdict::BudgetExceeded: return "budget-exceeded";
  }
  return "?";
}

CriterionResult is_lcp_definition(const LinearCode& C, const LinearCode& D) {
  require_pair(C, D);
  CriterionResult r;
  r.criterion = "definition";
  Submodule meet = C.module().intersect(D.module());
  if (!meet.is_zero()) {
    r.verdict = Verdict::No;
    r.witness = first_basis_vector(meet);
    r.note = "nonzero vector lying in both codes";
    return r;
  }
  Submodule sum = C.module().sum(D.module());
  if (sum.is_full()) {
    r.verdict = Verdict::Yes;
    return r;
  }
  r.verdict = Verdict::No;
  r.witness = coordinate_vector_outside(sum);
  r.note = "coordinate vector outside C + D";
  return r;
}

CriterionResult lcp_by_pi(const LinearCode& C, const LinearCode& D) {
  require_pair(C, D);
  CriterionResult r;
  r.criterion = "pi_reduction";
  if (!matrix_criteria_gates(C, D, /*need_cardinality=*/false, r)) return r;
  const Algebra& a = *C.algebra();
  const fq::Field& F = a.field();
  int n = C.length();
  fq::Mat pc = C.module().pi_image();
  fq::Mat pd = D.module().pi_image();
  fq::Mat meet = fq::subspace_intersect(F, pc, pd);
  if (meet.rows > 0) {
    r.verdict = Verdict::No;
    r.witness = embed_scalars(
        a, std::vector<uint32_t>(meet.a.begin(), meet.a.begin() + meet.cols));
    r.note = "scalar embedding of a common residue-image vector";
    return r;
  }
  if (pc.rows + pd.rows == n) {
    r.verdict = Verdict::Yes;
    return r;
  }
  r.verdict = Verdict::No;
  fq::Rref span = fq::rref(F, fq::vstack(pc, pd));
  for (int j = 0; j < n; ++j) {
    std::vector<uint32_t> unit(static_cast<size_t>(n), 0);
    unit[static_cast<size_t>(j)] = 1;
    if (!fq::in_rowspace(F, span, unit)) {
      r.witness = embed_scalars(a, unit);
      break;
    }
  }
  r.note = "scalar embedding of a residue vector outside im(C) + im(D)";
  return r;
}

CriterionResult lcp_by_parity_product(const LinearCode& C,
                                      const LinearCode& D) {
  require_pair(C, D);
  CriterionResult r;
  r.criterion = "parity_product";
  if (!matrix_criteria_gates(C, D, /*need_cardinality=*/true, r)) return r;
  const Algebra& a = *C.algebra();
  RingMatrix G1 = minimal_generator_matrix(C);
  RingMatrix G2 = minimal_generator_matrix(D);
  RingMatrix H1 = C.parity_generators().first;
  RingMatrix H2 = D.parity_generators().first;
  RingMatrix P1 = codes::mat_mul(H2, codes::transpose(G1));
  RingMatrix P2 = codes::mat_mul(H1, codes::transpose(G2));
  if (invertible_with_convention(P1) || invertible_with_convention(P2)) {
    r.verdict = Verdict::Yes;
    return r;
  }
  r.verdict = Verdict::No;
  if (P1.rows == P1.cols && P1.rows > 0) {
    fq::Mat ker = fq::kernel(a.field(), codes::pi_matrix(P1));
    if (ker.rows > 0) {
      r.witness = embed_scalars(
          a, std::vector<uint32_t>(ker.a.begin(), ker.a.begin() + ker.cols));
      r.note = "residue image of H_D * G_C^T annihilates this scalar vector "
               "on the right";
      return r;
    }
  }
  r.note = "neither parity-generator product is invertible";
  return r;
}

CriterionResult lcp_by_generator_stack(const LinearCode& C,
                                       const LinearCode& D) {
  require_pair(C, D);
  CriterionResult r;
  r.criterion = "generator_stack";
  if (!matrix_criteria_gates(C, D, /*need_cardinality=*/true, r)) return r;
  const Algebra& a = *C.algebra();
  int n = C.length();
  RingMatrix G1 = minimal_generator_matrix(C);
  RingMatrix G2 = minimal_generator_matrix(D);
  if (G1.rows + G2.rows != n) {
    r.verdict = Verdict::No;
    r.note = "the generator stack is not square";
    return r;
  }
  RingMatrix S = codes::stack(G1, G2);
  bool gv = invertible_with_convention(S);
  RingMatrix H1 = C.parity_generators().first;
  RingMatrix H2 = D.parity_generators().first;
  bool hv = H1.rows + H2.rows == n &&
            invertible_with_convention(codes::stack(H1, H2));
  if (gv != hv)
    fail(ErrorKind::Internal,
         "the generator stack and the parity stack disagree");
  if (gv) {
    r.verdict = Verdict::Yes;
    return r;
  }
  r.verdict = Verdict::No;
  if (S.rows > 0) {
    fq::Mat ker = fq::kernel(a.field(), codes::pi_matrix(S));
    if (ker.rows > 0) {
      r.witness = embed_scalars(
          a, std::vector<uint32_t>(ker.a.begin(), ker.a.begin() + ker.cols));
      r.note = "residue image of the generator stack annihilates this "
               "scalar vector on the right";
    }
  }
  return r;
}

StructuralBundle lcp_structural(const LinearCode& C, const LinearCode& D,
                                const Budget& budget) {
  require_pair(C, D);
  const Algebra& a = *C.algebra();
  StructuralBundle b;
  Submodule meet = C.module().intersect(D.module());
  Submodule sum = C.module().sum(D.module());
  b.disjoint = meet.is_zero();
  b.cardinality_ok =
      C.module().dim() + D.module().dim() == C.length() * a.dim();

  b.slots.push_back(is_lcp_definition(C, D));
  b.slots.push_back(from_predicate("sum_essential", sum.is_essential(budget)));
  Submodule zero = Submodule::zero(C.algebra(), C.length(), Side::Right);
  b.slots.push_back(from_predicate("zero_maximal_disjoint",
                                   zero.is_maximal_disjoint_from(sum, budget)));
  b.slots.push_back(from_predicate(
      "complement", D.module().is_maximal_disjoint_from(C.module(), budget)));
  b.slots.push_back(from_predicate("sum_closed", sum.is_closed(budget)));

  b.combined.criterion = "structural";
  b.combined.preconditions.emplace_back("cardinality", b.cardinality_ok);
  b.combined.preconditions.emplace_back("disjoint", b.disjoint);
  if (!b.disjoint) {
    b.combined.verdict = Verdict::No;
    b.combined.witness = first_basis_vector(meet);
    b.combined.note = "nonzero vector lying in both codes";
    return b;
  }
  if (!b.cardinality_ok) {
    b.combined.verdict = Verdict::NotApplicable;
    b.combined.note = "the five-way equivalence needs |C| * |D| = |R^n|";
    return b;
  }
  std::optional<Verdict> consensus;
  for (const auto& s : b.slots) {
    if (!s.definite()) continue;
    if (!consensus) {
      consensus = s.verdict;
    } else if (*consensus != s.verdict) {
      fail(ErrorKind::Internal,
           "structural slots disagree on a pair meeting the hypotheses");
    }
  }
  if (!consensus) {
    b.combined.verdict = Verdict::BudgetExceeded;
    b.combined.note = "every slot exceeded the scan budget";
    return b;
  }
  b.combined.verdict = *consensus;
  if (b.combined.no()) {
    for (const auto& s : b.slots) {
      if (s.no() && s.witness) {
        b.combined.witness = s.witness;
        b.combined.note = "witnessed by the " + s.criterion + " slot";
        break;
      }
    }
  }
  return b;
}

CriterionResult lcp_by_injective_hull(const LinearCode& C, const LinearCode& D,
                                      const Budget& budget) {
  require_pair(C, D);
  CriterionResult r;
  r.criterion = "injective_hull";
  bool frob = C.algebra()->frobenius_certificate().passed;
  r.preconditions.emplace_back("frobenius_necessary", frob);
  if (!frob) {
    r.note = "the ring failed the necessary self-injectivity certificates";
    return r;
  }
  Submodule meet = C.module().intersect(D.module());
  if (!meet.is_zero()) {
    r.verdict = Verdict::No;
    r.witness = first_basis_vector(meet);
    r.note = "nonzero vector lying in both codes";
    return r;
  }
  Submodule sum = C.module().sum(D.module());
  auto ess = sum.is_essential(budget);
  auto cs = C.module().direct_summand(budget).first;
  auto ds = D.module().direct_summand(budget).first;
  if (ess.no()) {
    r.verdict = Verdict::No;
    r.witness = ess.witness;
    r.note = "the cyclic module of this vector misses C + D";
    return r;
  }
  if (cs.no() || ds.no()) {
    r.verdict = Verdict::No;
    r.note = cs.no() ? "C is not a direct summand of the ambient module"
                     : "D is not a direct summand of the ambient module";
    return r;
  }
  if (ess.verdict == rmod::Tri::BudgetExceeded ||
      cs.verdict == rmod::Tri::BudgetExceeded ||
      ds.verdict == rmod::Tri::BudgetExceeded) {
    r.verdict = Verdict::BudgetExceeded;
    r.note = "a summand or essentiality scan exceeded the budget";
    return r;
  }
  r.verdict = Verdict::Yes;
  return r;
}

ProjectionIdempotent projection_idempotent(const LinearCode& C,
                                           const LinearCode& D) {
  CriterionResult def = is_lcp_definition(C, D);
  if (!def.yes())
    fail(ErrorKind::Invalid,
         "the projection idempotent requires an LCP pair");
  const AlgebraPtr& ap = C.algebra();
  const Algebra& a = *ap;
  const fq::Field& F = a.field();
  int n = C.length(), d = a.dim(), nd = n * d;
  const fq::Mat& cb = C.module().flat_basis();
  const fq::Mat& db = D.module().flat_basis();
  // Columns of the solve matrix: the F_q-basis of C, then of D.
  fq::Mat M(nd, cb.rows + db.rows);
  for (int c = 0; c < cb.rows; ++c)
    for (int t = 0; t < nd; ++t) M.at(t, c) = cb.at(c, t);
  for (int c = 0; c < db.rows; ++c)
    for (int t = 0; t < nd; ++t) M.at(t, cb.rows + c) = db.at(c, t);
  RingMatrix E = RingMatrix::make(ap, n, n);
  for (int j = 0; j < n; ++j) {
    std::vector<uint32_t> target(static_cast<size_t>(nd), 0);
    const RingElem& one = a.unity();
    for (int t = 0; t < d; ++t)
      target[static_cast<size_t>(j) * d + t] = one[static_cast<size_t>(t)];
    auto x = fq::solve(F, M, target);
    if (!x)
      fail(ErrorKind::Internal,
           "a coordinate vector failed to decompose across C and D");
    std::vector<uint32_t> cpart(static_cast<size_t>(nd), 0);
    for (int c = 0; c < cb.rows; ++c) {
      if ((*x)[static_cast<size_t>(c)] == 0) continue;
      for (int t = 0; t < nd; ++t)
        cpart[static_cast<size_t>(t)] =
            F.add(cpart[static_cast<size_t>(t)],
                  F.mul((*x)[static_cast<size_t>(c)], cb.at(c, t)));
    }
    RingVector cj = C.module().unflatten(cpart);
    for (int i = 0; i < n; ++i) E.at(i, j) = cj[static_cast<size_t>(i)];
  }
  if (!codes::is_idempotent(E))
    fail(ErrorKind::Internal, "the assembled projection is not idempotent");
  if (!LinearCode::from_column_span(E).module().equals(C.module()))
    fail(ErrorKind::Internal, "the projection image differs from C");
  RingMatrix co = codes::mat_sub(RingMatrix::identity(ap, n), E);
  if (!LinearCode::from_column_span(co).module().equals(D.module()))
    fail(ErrorKind::Internal, "the complementary image differs from D");
  ProjectionIdempotent out{codes::transpose(E), E, false};
  out.e_squared = codes::is_idempotent(out.e);
  return out;
}

DualityReport dual_equivalence_pipeline(
    const LinearCode& C, const LinearCode& D, const Budget& budget,
    const std::optional<RingMatrix>& supplied_e) {
  CriterionResult def = is_lcp_definition(C, D);
  if (!def.yes())
    fail(ErrorKind::Invalid, "the duality pipeline requires an LCP pair");
  const AlgebraPtr& ap = C.algebra();
  int n = C.length();
  DualityReport rep;
  rep.e = RingMatrix::make(ap, n, n);
  RingMatrix E = RingMatrix::make(ap, n, n);
  if (supplied_e) {
    if (supplied_e->alg.get() != ap.get() || supplied_e->rows != n ||
        supplied_e->cols != n)
      fail(ErrorKind::Invalid, "the supplied matrix does not fit the codes");
    if (!codes::is_idempotent(*supplied_e))
      fail(ErrorKind::Invalid, "the supplied matrix is not idempotent");
    rep.e = *supplied_e;
    rep.supplied = true;
    rep.e_squared = true;
    E = codes::transpose(rep.e);
  } else {
    ProjectionIdempotent proj = projection_idempotent(C, D);
    rep.e = proj.e;
    rep.e_squared = proj.e_squared;
    E = proj.E;
  }
  rep.transpose_idempotent = codes::is_idempotent(E);
  rep.image_matches =
      LinearCode::from_column_span(E).module().equals(C.module());

  const Submodule& dual_kernel = C.dual();
  RingMatrix co = codes::mat_sub(RingMatrix::identity(ap, n), E);
  if (rep.transpose_idempotent) {
    Submodule formula =
        Submodule::from_generators(ap, n, co.row_list(), Side::Left);
    rep.dual_formula_checked = true;
    rep.dual_formula_agrees = equiv::same_tuple_set(dual_kernel, formula);
    if (rep.image_matches && !rep.dual_formula_agrees)
      fail(ErrorKind::Internal,
           "the annihilator dual disagrees with the idempotent row formula");
  }

  // The hypothesis module {(1 - e) * beta^T}: columns of 1 - e, i.e. rows
  // of 1 - E, spanning a right module.
  Submodule d_image =
      Submodule::from_generators(ap, n, co.row_list(), Side::Right);
  rep.hypothesis_d = equiv::equivalent(D.module(), d_image, budget);
  rep.c_dual_vs_d = equiv::equivalent(dual_kernel, D.module(), budget);
  rep.d_dual_vs_c = equiv::equivalent(D.dual(), C.module(), budget);

  rep.d_C = guarded_distance(C.module(), budget);
  rep.d_D = guarded_distance(D.module(), budget);
  rep.d_C_dual = guarded_distance(dual_kernel, budget);
  rep.d_D_dual = guarded_distance(D.dual(), budget);
  if (rep.c_dual_vs_d.found() && rep.d_C_dual && rep.d_D &&
      *rep.d_C_dual != *rep.d_D)
    fail(ErrorKind::Internal,
         "an equivalence was certified but d(C-dual) != d(D)");
  if (rep.d_dual_vs_c.found() && rep.d_D_dual && rep.d_C &&
      *rep.d_D_dual != *rep.d_C)
    fail(ErrorKind::Internal,
         "an equivalence was certified but d(D-dual) != d(C)");
  return rep;
}

LcpSecurity security_parameter(const LinearCode& C, const LinearCode& D,
                               const Budget& budget) {
  require_pair(C, D);
  if (C.module().is_zero())
    fail(ErrorKind::Invalid, "the security parameter needs a nonzero C");
  if (D.module().is_full())
    fail(ErrorKind::Invalid, "the security parameter needs a nonzero D-dual");
  return {C.min_distance(budget), codes::min_distance_of(D.dual(), budget)};
}

LcpReport check_lcp(const LinearCode& C, const LinearCode& D,
                    const Budget& budget) {
  require_pair(C, D);
  LcpReport rep;
  auto timed = [&](auto&& fn, CriterionResult& slot) {
    auto t0 = std::chrono::steady_clock::now();
    slot = fn();
    if (budget.timings)
      slot.timing_ms = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
  };
  timed([&] { return is_lcp_definition(C, D); }, rep.definition);
  timed([&] { return lcp_by_pi(C, D); }, rep.pi_reduction);
  timed([&] { return lcp_by_parity_product(C, D); }, rep.parity_product);
  timed([&] { return lcp_by_generator_stack(C, D); }, rep.generator_stack);
  {
    auto t0 = std::chrono::steady_clock::now();
    rep.structural = lcp_structural(C, D, budget);
    if (budget.timings)
      rep.structural.combined.timing_ms =
          std::chrono::duration<double, std::milli>(
              std::chrono::steady_clock::now() - t0)
              .count();
  }
  timed([&] { return lcp_by_injective_hull(C, D, budget); },
        rep.injective_hull);

  std::optional<Verdict> consensus;
  rep.consistent = true;
  for (const CriterionResult* c :
       {&rep.definition, &rep.pi_reduction, &rep.parity_product,
        &rep.generator_stack, &rep.structural.combined, &rep.injective_hull}) {
    if (!c->definite()) continue;
    if (!consensus)
      consensus = c->verdict;
    else if (*consensus != c->verdict)
      rep.consistent = false;
  }
  if (rep.consistent && rep.definition.yes() && !C.module().is_zero() &&
      !D.module().is_full()) {
    try {
      rep.security = security_parameter(C, D, budget);
    } catch (const Error& e) {
      if (e.kind != ErrorKind::Budget) throw;
    }
  }
  return rep;
}

std::string criterion_json(const Algebra& a, const CriterionResult& r) {
  return criterion_obj(a, r).dump();
}

std::string report_json(const Algebra& a, const LcpReport& r) {
  nlohmann::ordered_json j;
  j["ring"] = a.name();
  auto criteria = nlohmann::ordered_json::array();
  criteria.push_back(criterion_obj(a, r.definition));
  criteria.push_back(criterion_obj(a, r.pi_reduction));
  criteria.push_back(criterion_obj(a, r.parity_product));
  criteria.push_back(criterion_obj(a, r.generator_stack));
  auto structural = criterion_obj(a, r.structural.combined);
  structural["cardinality_ok"] = r.structural.cardinality_ok;
  structural["disjoint"] = r.structural.disjoint;
  auto slots = nlohmann::ordered_json::array();
  for (const auto& s : r.structural.slots)
    slots.push_back(criterion_obj(a, s));
  structural["slots"] = slots;
  criteria.push_back(structural);
  criteria.push_back(criterion_obj(a, r.injective_hull));
  j["criteria"] = criteria;
  j["consistent"] = r.consistent;
  if (r.security)
    j["security"] = {{"d_C", r.security->d_C},
                     {"d_D_dual", r.security->d_D_dual}};
  else
    j["security"] = nullptr;
  return j.dump();
}

std::string duality_json(const Algebra& a, const DualityReport& r) {
  nlohmann::ordered_json j;
  j["e"] = matrix_json(a, r.e);
  j["supplied"] = r.supplied;
  j["e_squared"] = r.e_squared;
  j["transpose_idempotent"] = r.transpose_idempotent;
  j["image_matches"] = r.image_matches;
  j["dual_formula_checked"] = r.dual_formula_checked;
  j["dual_formula_agrees"] = r.dual_formula_agrees;
  j["hypothesis_d"] =
      nlohmann::ordered_json::parse(equiv::certificate_json(a, r.hypothesis_d));
  j["c_dual_vs_d"] =
      nlohmann::ordered_json::parse(equiv::certificate_json(a, r.c_dual_vs_d));
  j["d_dual_vs_c"] =
      nlohmann::ordered_json::parse(equiv::certificate_json(a, r.d_dual_vs_c));
  auto dist = nlohmann::ordered_json::object();
  dist["d_C"] = r.d_C ? nlohmann::ordered_json(*r.d_C) : nullptr;
  dist["d_D"] = r.d_D ? nlohmann::ordered_json(*r.d_D) : nullptr;
  dist["d_C_dual"] =
      r.d_C_dual ? nlohmann::ordered_json(*r.d_C_dual) : nullptr;
  dist["d_D_dual"] =
      r.d_D_dual ? nlohmann::ordered_json(*r.d_D_dual) : nullptr;
  j["distances"] = dist;
  return j.dump();
}

}  // namespace ringlcp::lcp
