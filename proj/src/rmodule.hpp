#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "algebra.hpp"

namespace ringlcp::rmod {

using alg::Algebra;
using alg::AlgebraPtr;
using alg::RingElem;

/// A length-n tuple of ring elements.
using RingVector = std::vector<RingElem>;

enum class Side { Right, Left };

/// Enumeration limits and execution knobs shared by every exhaustive scan.
struct Budget {
  uint64_t scan_cap = 1'000'000;       // cap on |R|^n for vector scans
  uint64_t distance_cap = 10'000'000;  // cap on codeword enumerations
  bool sampling = false;               // one-sided random scan instead of fail
  uint64_t sample_count = 100'000;
  uint64_t seed = 0;
  int threads = 0;  // 0 = RINGLCP_THREADS or hardware
  bool timings = false;

  /// Defaults, with RINGLCP_BUDGET / RINGLCP_THREADS environment overrides.
  static Budget from_env();
};

enum class Tri { Yes, No, Skipped, BudgetExceeded };

const char* tri_name(Tri t);

/// Outcome of a scan-backed predicate. `witness` carries a counterexample
/// (or constructive certificate) when one exists; `sampled` marks one-sided
/// randomized verdicts.
struct PredicateResult {
  Tri verdict = Tri::Skipped;
  bool sampled = false;
  std::optional<RingVector> witness;
  std::string note;

  bool yes() const { return verdict == Tri::Yes; }
  bool no() const { return verdict == Tri::No; }
};

/// A finitely generated one-sided submodule of R^n, stored as the canonical
/// reduced row-echelon basis of the underlying F_q-subspace of F_q^{n*dim}.
class Submodule {
 public:
  /// Closure of `gens` under the ring action on the given side.
  static Submodule from_generators(AlgebraPtr alg, int n,
                                   const std::vector<RingVector>& gens,
                                   Side side);
  static Submodule zero(AlgebraPtr alg, int n, Side side);
  static Submodule full(AlgebraPtr alg, int n, Side side);
  /// Cyclic module generated by one vector.
  static Submodule cyclic(AlgebraPtr alg, const RingVector& x, Side side);

  const AlgebraPtr& algebra() const { return alg_; }
  int length() const { return n_; }
  Side side() const { return side_; }
  /// F_q-dimension of the underlying subspace.
  int dim() const { return basis_.m.rows; }
  /// Canonical basis of the flattened subspace (rows in RREF).
  const fq::Mat& flat_basis() const { return basis_.m; }
  /// |M| = q^dim as a decimal string.
  std::string cardinality() const;

  bool contains(const RingVector& v) const;
  bool contains_flat(const std::vector<uint32_t>& row) const;
  bool equals(const Submodule& other) const;
  bool contains_submodule(const Submodule& other) const;
  bool is_zero() const { return dim() == 0; }
  bool is_full() const;

  Submodule intersect(const Submodule& other) const;
  Submodule sum(const Submodule& other) const;

  /// M*J (right) or J*M (left) for the Jacobson radical J.
  Submodule times_radical() const;

  /// A minimal generating tuple (local base ring only). The returned vectors
  /// are basis rows of M that are independent modulo M*J, so their count is
  /// dim_Fq(M / M*J).
  std::vector<RingVector> minimal_generators() const;

  /// Whether M is free of finite rank over a local base ring; on success the
  /// second member is the rank.
  std::pair<bool, int> is_free() const;

  /// Coordinate-wise image under the residue map (local ring, prime field):
  /// an F_q-subspace of F_q^n in RREF.
  fq::Mat pi_image() const;

  /// Element of M at position `idx` in the lexicographic order induced by
  /// coefficient digits over the canonical basis (idx < q^dim).
  RingVector element_at(uint64_t idx) const;
  uint64_t element_count_or_cap(uint64_t cap) const;

  /// Every nonzero submodule of R^n meets M nontrivially. Exhaustive over
  /// projective representatives unless sampling is enabled.
  PredicateResult is_essential(const Budget& budget) const;

  /// M ∩ other = 0 and M + other = R^n.
  PredicateResult is_complement_of(const Submodule& other) const;

  /// M is maximal with respect to M ∩ other = 0 (the Zorn-style complement
  /// notion): disjoint, and every proper cyclic extension M + xR meets
  /// `other`. Scan-backed; witness = a disjointness-preserving extender.
  PredicateResult is_maximal_disjoint_from(const Submodule& other,
                                           const Budget& budget) const;

  /// M has no proper essential extension inside R^n: for every x outside M
  /// there is a nonzero y with (M + xR) ∩ yR = 0.
  PredicateResult is_closed(const Budget& budget) const;

  /// Searches for a direct-sum complement of M in R^n by backtracking over
  /// cyclic extensions (candidates ordered by increasing cyclic dimension,
  /// then lexicographically). On Yes the complement is returned.
  std::pair<PredicateResult, std::optional<Submodule>> direct_summand(
      const Budget& budget) const;

  RingVector unflatten(const std::vector<uint32_t>& row) const;
  std::vector<uint32_t> flatten(const RingVector& v) const;

 private:
  Submodule(AlgebraPtr alg, int n, Side side);

  AlgebraPtr alg_;
  int n_ = 0;
  Side side_ = Side::Right;
  fq::Rref basis_;
};

/// Applies the ring action on one side: v * r (right) or r * v (left),
/// coordinate-wise.
RingVector act(const Algebra& a, const RingVector& v, const RingElem& r,
               Side side);

RingVector zero_vector(const Algebra& a, int n);
bool is_zero_vector(const Algebra& a, const RingVector& v);

/// The vector of R^n at position `idx` when tuples are ordered
/// lexicographically (first coordinate most significant, ring elements
/// ordered by their index).
RingVector vector_at(const Algebra& a, int n, uint64_t idx);

/// Number of projective representatives (first nonzero coordinate
/// normalized where possible) is not closed-form over a ring, so scans walk
/// all of R^n minus zero; this helper reports |R|^n, or nullopt on overflow.
std::optional<uint64_t> vector_space_size(const Algebra& a, int n);

}  // namespace ringlcp::rmod
