#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "field.hpp"

namespace ringlcp::alg {

/// Coordinate vector of a ring element relative to the algebra basis.
using RingElem = std::vector<uint32_t>;

/// A subspace of R that is an ideal for the declared sides.
struct IdealSubspace {
  fq::Mat basis;  // canonical rref, rows = coordinates of ring elements
  bool left_closed = false;
  bool right_closed = false;
};

struct FrobeniusCertificate {
  int dim_socle_right;
  int dim_socle_left;
  int dim_residue;          // dim_{F_q} R/J(R)
  bool socle_right_cyclic;  // Soc(R_R) = xR for some x
  bool passed;              // necessary conditions only
};

/// Finite ring R presented as a d-dimensional F_q-algebra by structure
/// constants: e_i * e_j = sum_k sc[i][j][k] e_k. Multiplication is never
/// assumed commutative. Immutable after construction.
class Algebra {
public:
  /// Validates associativity on all basis triples and the unity laws;
  /// diagnostics name the failing triple.
  static std::shared_ptr<const Algebra> make(fq::Field field, int dim,
                                             std::vector<uint32_t> sc,
                                             RingElem unity, std::string name);

  /// Presets: "field(q)", "ut2(q)", "blockpair(q)", "mat2(q)", "t2(q)".
  static std::shared_ptr<const Algebra> preset(const std::string& text);

  const fq::Field& field() const { return field_; }
  int dim() const { return dim_; }
  const std::string& name() const { return name_; }
  const RingElem& unity() const { return unity_; }
  uint64_t size() const;  // |R| = q^d
  bool is_commutative() const { return commutative_; }

  /// sc(i,j) = coordinates of e_i * e_j.
  const uint32_t* sc(int i, int j) const {
    return &sc_[(static_cast<size_t>(i) * dim_ + j) * dim_];
  }

  RingElem zero() const { return RingElem(dim_, 0); }
  RingElem basis_elem(int i) const;
  RingElem scalar(uint32_t c) const;  // c * 1_R
  RingElem mul(const RingElem& a, const RingElem& b) const;
  RingElem add(const RingElem& a, const RingElem& b) const;
  RingElem sub(const RingElem& a, const RingElem& b) const;
  RingElem neg(const RingElem& a) const;
  RingElem scale(uint32_t c, const RingElem& a) const;  // F_q scalar action
  bool is_zero(const RingElem& a) const;

  /// d x d matrix of left multiplication by x: column j = x * e_j.
  fq::Mat left_mul_matrix(const RingElem& x) const;
  fq::Mat right_mul_matrix(const RingElem& x) const;

  bool is_unit(const RingElem& x) const;
  std::optional<RingElem> try_inverse(const RingElem& x) const;

  /// Element <-> dense index bijection (base-q digits of coordinates).
  RingElem elem_from_index(uint64_t idx) const;
  uint64_t index_of(const RingElem& x) const;

  /// Jacobson radical by exhaustive quasi-regularity; cached.
  const IdealSubspace& jacobson_radical() const;
  /// Least t >= 1 with J^t = 0.
  int nilpotency_index() const;
  /// Nonzero m in J^{t-1}, so alpha*m = 0 for all alpha in J; error if J = 0.
  RingElem radical_annihilator_witness() const;

  bool is_local() const;
  /// Residue map R -> F_q; requires local ring, dim R/J = 1, prime q.
  uint32_t residue(const RingElem& x) const;
  bool residue_map_available() const;

  IdealSubspace socle_right() const;  // {x : xJ = 0}
  IdealSubspace socle_left() const;   // {x : Jx = 0}
  FrobeniusCertificate frobenius_certificate() const;

  /// R/I on a deterministically chosen coset basis; I must be two-sided.
  std::shared_ptr<const Algebra> quotient_algebra(const IdealSubspace& I) const;

  /// Parses a ring-element literal: coordinate vector "[a0,...]", integer
  /// (multiple of unity), or a +/- expression in the preset's basis symbols.
  RingElem parse_elem(const std::string& text) const;

  /// Renders an element using the preset's symbols when possible.
  std::string format_elem(const RingElem& x) const;

private:
  explicit Algebra(fq::Field f) : field_(std::move(f)) {}
  void validate() const;
  void compute_radical() const;

  fq::Field field_;
  int dim_ = 0;
  std::vector<uint32_t> sc_;  // d*d*d, [(i*d+j)*d+k]
  RingElem unity_;
  std::string name_;
  bool commutative_ = false;
  std::vector<std::pair<std::string, RingElem>> symbols_;  // literal table

  mutable std::optional<IdealSubspace> radical_;
  mutable std::optional<bool> local_;
  mutable std::optional<std::vector<uint32_t>> pi_vec_;  // functional for residue
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

}  // namespace ringlcp::alg
