#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rmodule.hpp"

namespace ringlcp::codes {

using alg::Algebra;
using alg::AlgebraPtr;
using alg::RingElem;
using rmod::Budget;
using rmod::RingVector;
using rmod::Side;
using rmod::Submodule;

/// Dense matrix over a ring R; multiplication preserves factor order and is
/// never assumed commutative.
struct RingMatrix {
  AlgebraPtr alg;
  int rows = 0, cols = 0;
  std::vector<RingElem> e;

  static RingMatrix make(AlgebraPtr a, int rows, int cols);
  static RingMatrix identity(AlgebraPtr a, int n);
  static RingMatrix from_rows(AlgebraPtr a, int n,
                              const std::vector<RingVector>& rows);

  RingElem& at(int i, int j) { return e[static_cast<size_t>(i) * cols + j]; }
  const RingElem& at(int i, int j) const {
    return e[static_cast<size_t>(i) * cols + j];
  }
  RingVector row(int i) const;
  RingVector col(int j) const;
  std::vector<RingVector> row_list() const;
  std::vector<RingVector> col_list() const;
};

bool mat_equal(const RingMatrix& a, const RingMatrix& b);
RingMatrix mat_mul(const RingMatrix& a, const RingMatrix& b);
RingMatrix mat_add(const RingMatrix& a, const RingMatrix& b);
RingMatrix mat_sub(const RingMatrix& a, const RingMatrix& b);
RingMatrix transpose(const RingMatrix& a);
RingMatrix stack(const RingMatrix& a, const RingMatrix& b);
bool is_idempotent(const RingMatrix& a);

/// Entrywise residue image; requires the residue map.
fq::Mat pi_matrix(const RingMatrix& a);

/// Order-sensitive inner product [x, y] = sum x_i * y_i.
RingElem inner_product(const Algebra& a, const RingVector& x,
                       const RingVector& y);

/// The annihilator on the opposite side: for a right module, the left
/// module {v : [v, c] = 0 for all c}; for a left module, the right module
/// {v : [c, v] = 0}. Computed as an F_q-kernel over the generator rows.
Submodule annihilator(const Submodule& m);

/// Hamming-weight data of any submodule (either side), by exact enumeration.
std::vector<uint64_t> weight_distribution_of(const Submodule& m,
                                             const Budget& budget);
int min_distance_of(const Submodule& m, const Budget& budget);

/// A linear code: a right submodule of R^n carrying its generator matrix.
class LinearCode {
 public:
  static LinearCode from_generators(AlgebraPtr a, int n,
                                    const std::vector<RingVector>& rows);
  static LinearCode zero(AlgebraPtr a, int n);
  static LinearCode full(AlgebraPtr a, int n);
  /// Right span of the columns of a square ring matrix (image convention).
  static LinearCode from_column_span(const RingMatrix& m);

  const AlgebraPtr& algebra() const { return module_.algebra(); }
  int length() const { return module_.length(); }
  const RingMatrix& generators() const { return gen_; }
  const Submodule& module() const { return module_; }

  /// The dual code = annihilator on the left; cached.
  const Submodule& dual() const;
  /// Generator matrix H of the dual with [h, g] = 0 for all rows; minimal
  /// (second member true) when the ring is local.
  std::pair<RingMatrix, bool> parity_generators() const;

  /// Minimum Hamming weight of a nonzero codeword; fails on the zero code.
  int min_distance(const Budget& budget) const;
  /// Codeword counts by Hamming weight 0..n.
  const std::vector<uint64_t>& weight_distribution(const Budget& budget) const;

 private:
  LinearCode(RingMatrix gen, Submodule module)
      : gen_(std::move(gen)), module_(std::move(module)) {}

  RingMatrix gen_;
  Submodule module_;
  mutable std::optional<Submodule> dual_;
  mutable std::optional<std::vector<uint64_t>> wdist_;
};

/// Residue-map invertibility test (only meaningful over local rings with a
/// prime residue field; fails Unsupported otherwise).
bool invertible_over_R(const RingMatrix& a);

/// Exact unit test in M_n(R): the F_q-linear operator x -> A x on column
/// vectors R^n is invertible. Agrees with the residue criterion over local
/// rings; works over any ring.
bool unit_in_matrix_ring(const RingMatrix& a);

/// Two-sided inverse in M_n(R) when it exists (columnwise operator solve).
std::optional<RingMatrix> matrix_inverse(const RingMatrix& a);

/// The pair of codes attached to an idempotent e (e^2 = e required):
/// the right code spanned by the columns of e^T and the left code spanned by
/// the rows of 1 - e^T. The annihilator identity dual(right) = left is
/// guaranteed only when e^T is itself idempotent, which can fail over
/// non-commutative rings; the flags record what held.
struct IdempotentCodes {
  LinearCode right_code;
  Submodule left_code;
  bool transpose_idempotent;
  bool identity_holds;
};
IdempotentCodes idempotent_codes(const RingMatrix& e);

/// Same split driven directly by a column-convention projection matrix E
/// (columns spanning the image); requires E^2 = E, and then the identity
/// dual(col-span E) = left-row-span(1 - E) always holds and is asserted.
IdempotentCodes codes_of_projection(const RingMatrix& E);

}  // namespace ringlcp::codes
