#pragma once

#include <optional>
#include <string>
#include <vector>

#include "codes.hpp"
#include "equiv.hpp"

namespace ringlcp::lcp {

using alg::Algebra;
using alg::AlgebraPtr;
using alg::RingElem;
using codes::LinearCode;
using codes::RingMatrix;
using rmod::Budget;
using rmod::RingVector;
using rmod::Side;
using rmod::Submodule;

enum class Verdict { Yes, No, NotApplicable, BudgetExceeded };

const char* verdict_name(Verdict v);

/// One criterion's outcome. `preconditions` records each gate that was
/// evaluated, in evaluation order; a criterion whose gates fail reports
/// NotApplicable rather than guessing. Negative verdicts carry a witness
/// vector whenever a constructive one exists, with `note` explaining how to
/// check it by hand.
struct CriterionResult {
  std::string criterion;
  Verdict verdict = Verdict::NotApplicable;
  std::vector<std::pair<std::string, bool>> preconditions;
  std::optional<RingVector> witness;
  std::string note;
  double timing_ms = -1.0;  // filled only when budget.timings is set

  bool yes() const { return verdict == Verdict::Yes; }
  bool no() const { return verdict == Verdict::No; }
  bool definite() const { return yes() || no(); }
};

/// The module-theoretic characterization evaluated slot by slot:
///   (1) C + D = R^n with trivial intersection (the definition);
///   (2) C + D essential in R^n;
///   (3) 0 maximal among submodules meeting C + D trivially;
///   (4) D maximal among submodules meeting C trivially;
///   (5) C + D closed in R^n.
/// When the pair is disjoint and |C||D| = |R^n| the five slots provably
/// agree, and the bundle asserts that; otherwise the slots are reported
/// individually and `combined` is NotApplicable (or a definitional No when
/// the intersection is nontrivial).
struct StructuralBundle {
  bool cardinality_ok = false;
  bool disjoint = false;
  std::vector<CriterionResult> slots;
  CriterionResult combined;
};

struct LcpSecurity {
  int d_C = 0;
  int d_D_dual = 0;
};

/// The projection matrix attached to a decomposition R^n = C (+) D.
/// E is the column-convention projection onto C along D (E^2 = E always);
/// e = E^T matches the row convention in which C is the right span of the
/// columns of e^T. e itself is idempotent over commutative rings but can
/// fail to be over non-commutative ones; `e_squared` records what held.
struct ProjectionIdempotent {
  RingMatrix e;
  RingMatrix E;
  bool e_squared = false;
};

/// Duality consequences of the idempotent: the dual of C computed as an
/// annihilator kernel against the row formula, the equivalence kinds
/// between C-dual and D (and D-dual and C), and the distance consequences.
struct DualityReport {
  RingMatrix e;
  bool supplied = false;            // e was passed in rather than constructed
  bool e_squared = false;           // e^2 = e
  bool transpose_idempotent = false;  // (e^T)^2 = e^T
  bool image_matches = false;       // right span of e^T columns equals C
  bool dual_formula_checked = false;
  bool dual_formula_agrees = false;  // kernel dual == {beta (1 - e^T)}
  equiv::EquivalenceResult hypothesis_d;  // D vs the (1-e)-column image
  equiv::EquivalenceResult c_dual_vs_d;
  equiv::EquivalenceResult d_dual_vs_c;
  std::optional<int> d_C, d_D_dual, d_C_dual, d_D;
};

/// Full cross-criterion report. `consistent` compares every criterion that
/// reached a definite verdict; disagreement is surfaced, never averaged.
struct LcpReport {
  CriterionResult definition;
  CriterionResult pi_reduction;
  CriterionResult parity_product;
  CriterionResult generator_stack;
  StructuralBundle structural;
  CriterionResult injective_hull;
  bool consistent = true;
  std::optional<LcpSecurity> security;
};

/// C ∩ D = 0 and C + D = R^n, decided exactly. Witness: a nonzero common
/// vector, or a coordinate vector outside the sum.
CriterionResult is_lcp_definition(const LinearCode& C, const LinearCode& D);

/// Residue-map criterion: over a local ring with free codes, the pair is
/// LCP iff the residue images satisfy im(C) (+) im(D) = F_q^n. Gates:
/// local ring, residue map, both codes free.
CriterionResult lcp_by_pi(const LinearCode& C, const LinearCode& D);

/// Parity-check product criterion: with H_i generating the duals, the pair
/// is LCP iff H_D G_C^T or H_C G_D^T is invertible over R. Gates: local
/// ring, residue map, free codes, |C||D| = |R^n|.
CriterionResult lcp_by_parity_product(const LinearCode& C,
                                      const LinearCode& D);

/// Stacked-generator criterion: the square stack of minimal generator
/// matrices (G_C over G_D) must be invertible over R; the dual stack
/// (H_C over H_D) is evaluated too and must agree. Same gates as the
/// parity product.
CriterionResult lcp_by_generator_stack(const LinearCode& C,
                                       const LinearCode& D);

/// The five-slot module-theoretic bundle described on StructuralBundle.
StructuralBundle lcp_structural(const LinearCode& C, const LinearCode& D,
                                const Budget& budget);

/// Injectivity criterion over (certified-necessary) Frobenius rings: the
/// pair is LCP iff C and D are direct summands and C + D is essential,
/// with trivial intersection. Gated off when the certificate fails.
CriterionResult lcp_by_injective_hull(const LinearCode& C, const LinearCode& D,
                                      const Budget& budget);

/// Builds the projection idempotent of an LCP pair by decomposing each
/// standard basis vector as c_j + d_j; fails Invalid when the pair is not
/// LCP. Postconditions (exact, checked): E^2 = E, column span of E equals
/// C, column span of 1 - E equals D.
ProjectionIdempotent projection_idempotent(const LinearCode& C,
                                           const LinearCode& D);

/// Runs the duality pipeline on an LCP pair: uses `supplied_e` when given
/// (it must be idempotent), otherwise constructs the projection idempotent;
/// computes the dual of C both as an annihilator kernel and by the
/// (1 - e^T) row formula; hands the dual pairs to the equivalence search;
/// computes the distances and checks d(C-dual) = d(D) / d(D-dual) = d(C)
/// whenever the corresponding equivalence was certified.
DualityReport dual_equivalence_pipeline(
    const LinearCode& C, const LinearCode& D, const Budget& budget,
    const std::optional<RingMatrix>& supplied_e = std::nullopt);

/// (d(C), d(D-dual)); fails Invalid when C is zero or D is the full code.
LcpSecurity security_parameter(const LinearCode& C, const LinearCode& D,
                               const Budget& budget);

/// Evaluates every criterion, cross-checks agreement, and attaches the
/// security parameters when the pair is LCP and they are defined.
LcpReport check_lcp(const LinearCode& C, const LinearCode& D,
                    const Budget& budget);

std::string criterion_json(const Algebra& a, const CriterionResult& r);
std::string report_json(const Algebra& a, const LcpReport& r);
std::string duality_json(const Algebra& a, const DualityReport& r);

}  // namespace ringlcp::lcp
