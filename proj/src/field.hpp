#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ringlcp {

/// Error categories surfaced through the C API as return codes.
enum class ErrorKind { Invalid, Budget, Unsupported, Internal };

struct Error {
  ErrorKind kind;
  std::string message;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

namespace fq {

/// F_{p^m}: elements are indices in [0, q) whose base-p digits are the
/// coefficients of a residue polynomial (digit i = coefficient of x^i).
/// For m = 1 this degenerates to canonical residues mod p.
class Field {
public:
  /// Validates p prime, m >= 1, q <= 2^20 and (for m > 1) that the monic
  /// degree-m modulus is irreducible over F_p by trial division.
  /// When m > 1 and no modulus is given, the lexicographically least monic
  /// irreducible polynomial of degree m is chosen.
  static Field make(uint32_t p, uint32_t m = 1,
                    std::vector<uint32_t> modulus = {});

  uint32_t p() const { return p_; }
  uint32_t m() const { return m_; }
  uint32_t q() const { return q_; }
  const std::vector<uint32_t>& modulus() const { return modulus_; }

  uint32_t add(uint32_t a, uint32_t b) const;
  uint32_t sub(uint32_t a, uint32_t b) const;
  uint32_t neg(uint32_t a) const;
  uint32_t mul(uint32_t a, uint32_t b) const;
  uint32_t inv(uint32_t a) const;  // fails on 0
  uint32_t pow(uint32_t a, uint64_t e) const;
  uint32_t from_int(int64_t k) const;  // k mod p, embedded as a scalar

  bool operator==(const Field& o) const {
    return p_ == o.p_ && m_ == o.m_ && modulus_ == o.modulus_;
  }

private:
  Field() = default;
  uint32_t p_ = 0, m_ = 0, q_ = 0;
  std::vector<uint32_t> modulus_;  // m+1 coefficients, monic; empty when m=1
};

/// Dense row-major matrix over a Field; entries are element indices.
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<uint32_t> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

  uint32_t& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  uint32_t at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
  bool operator==(const Mat& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
};

Mat identity(int n);
Mat mat_mul(const Field& F, const Mat& A, const Mat& B);
Mat transpose(const Mat& A);
Mat vstack(const Mat& A, const Mat& B);

struct Rref {
  Mat m;                    // nonzero rows only, canonical reduced echelon
  int rank = 0;
  std::vector<int> pivots;  // pivot column per row, strictly increasing
};

/// Reduced row echelon form with deterministic pivoting (first nonzero in
/// column order). Zero rows are dropped, so m.rows == rank.
Rref rref(const Field& F, Mat M);

/// Basis rows of {v : M v^T = 0}; one row per free column, in column order.
Mat kernel(const Field& F, const Mat& M);

/// Basis of row-space(A) ∩ row-space(B), canonical (Zassenhaus).
Mat subspace_intersect(const Field& F, const Mat& A, const Mat& B);

/// Residual of v after elimination against an rref basis; zero iff v lies in
/// the row space.
std::vector<uint32_t> reduce_against(const Field& F, const Rref& basis,
                                     std::vector<uint32_t> v);
bool in_rowspace(const Field& F, const Rref& basis,
                 const std::vector<uint32_t>& v);

bool is_invertible(const Field& F, const Mat& M);
uint32_t determinant(const Field& F, Mat M);

/// Any solution x of M x = b (free variables set to 0), or nullopt.
std::optional<std::vector<uint32_t>> solve(const Field& F, const Mat& M,
                                           const std::vector<uint32_t>& b);

}  // namespace fq
}  // namespace ringlcp
