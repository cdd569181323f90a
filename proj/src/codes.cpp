#include "codes.hpp"

#include <algorithm>

#include "parallel.hpp"

namespace ringlcp::codes {

namespace {

void require_same_ring(const RingMatrix& a, const RingMatrix& b) {
  if (a.alg.get() != b.alg.get())
    fail(ErrorKind::Invalid, "matrices live over different rings");
}

}  // namespace

RingMatrix RingMatrix::make(AlgebraPtr a, int rows, int cols) {
  if (!a) fail(ErrorKind::Invalid, "matrix requires a ring");
  if (rows < 0 || cols < 0) fail(ErrorKind::Invalid, "negative matrix shape");
  RingMatrix m;
  m.alg = std::move(a);
  m.rows = rows;
  m.cols = cols;
  m.e.assign(static_cast<size_t>(rows) * cols, m.alg->zero());
  return m;
}

RingMatrix RingMatrix::identity(AlgebraPtr a, int n) {
  RingMatrix m = make(std::move(a), n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = m.alg->unity();
  return m;
}

RingMatrix RingMatrix::from_rows(AlgebraPtr a, int n,
                                 const std::vector<RingVector>& rows) {
  RingMatrix m = make(std::move(a), static_cast<int>(rows.size()), n);
  for (int i = 0; i < m.rows; ++i) {
    if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != n)
      fail(ErrorKind::Invalid, "generator row has wrong length");
    for (int j = 0; j < n; ++j) m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
  }
  return m;
}

RingVector RingMatrix::row(int i) const {
  RingVector v(static_cast<size_t>(cols));
  for (int j = 0; j < cols; ++j) v[static_cast<size_t>(j)] = at(i, j);
  return v;
}

RingVector RingMatrix::col(int j) const {
  RingVector v(static_cast<size_t>(rows));
  for (int i = 0; i < rows; ++i) v[static_cast<size_t>(i)] = at(i, j);
  return v;
}

std::vector<RingVector> RingMatrix::row_list() const {
  std::vector<RingVector> out;
  for (int i = 0; i < rows; ++i) out.push_back(row(i));
  return out;
}

std::vector<RingVector> RingMatrix::col_list() const {
  std::vector<RingVector> out;
  for (int j = 0; j < cols; ++j) out.push_back(col(j));
  return out;
}

bool mat_equal(const RingMatrix& a, const RingMatrix& b) {
  return a.alg.get() == b.alg.get() && a.rows == b.rows && a.cols == b.cols &&
         a.e == b.e;
}

RingMatrix mat_mul(const RingMatrix& a, const RingMatrix& b) {
  require_same_ring(a, b);
  if (a.cols != b.rows) fail(ErrorKind::Invalid, "matrix shapes do not chain");
  const Algebra& r = *a.alg;
  RingMatrix out = RingMatrix::make(a.alg, a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < b.cols; ++j) {
      RingElem acc = r.zero();
      for (int k = 0; k < a.cols; ++k)
        acc = r.add(acc, r.mul(a.at(i, k), b.at(k, j)));
      out.at(i, j) = acc;
    }
  return out;
}

RingMatrix mat_add(const RingMatrix& a, const RingMatrix& b) {
  require_same_ring(a, b);
  if (a.rows != b.rows || a.cols != b.cols)
    fail(ErrorKind::Invalid, "matrix shapes differ");
  RingMatrix out = a;
  for (size_t i = 0; i < out.e.size(); ++i) out.e[i] = a.alg->add(a.e[i], b.e[i]);
  return out;
}

RingMatrix mat_sub(const RingMatrix& a, const RingMatrix& b) {
  require_same_ring(a, b);
  if (a.rows != b.rows || a.cols != b.cols)
    fail(ErrorKind::Invalid, "matrix shapes differ");
  RingMatrix out = a;
  for (size_t i = 0; i < out.e.size(); ++i) out.e[i] = a.alg->sub(a.e[i], b.e[i]);
  return out;
}

RingMatrix transpose(const RingMatrix& a) {
  RingMatrix out = RingMatrix::make(a.alg, a.cols, a.rows);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) out.at(j, i) = a.at(i, j);
  return out;
}

RingMatrix stack(const RingMatrix& a, const RingMatrix& b) {
  require_same_ring(a, b);
  if (a.cols != b.cols) fail(ErrorKind::Invalid, "stacked widths differ");
  RingMatrix out = RingMatrix::make(a.alg, a.rows + b.rows, a.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) out.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows; ++i)
    for (int j = 0; j < b.cols; ++j) out.at(a.rows + i, j) = b.at(i, j);
  return out;
}

bool is_idempotent(const RingMatrix& a) {
  if (a.rows != a.cols) return false;
  return mat_equal(mat_mul(a, a), a);
}

fq::Mat pi_matrix(const RingMatrix& a) {
  if (!a.alg->residue_map_available())
    fail(ErrorKind::Unsupported,
         "residue image requires a local ring with prime residue field");
  fq::Mat out(a.rows, a.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) out.at(i, j) = a.alg->residue(a.at(i, j));
  return out;
}

RingElem inner_product(const Algebra& a, const RingVector& x,
                       const RingVector& y) {
  if (x.size() != y.size())
    fail(ErrorKind::Invalid, "inner product needs equal lengths");
  RingElem acc = a.zero();
  for (size_t i = 0; i < x.size(); ++i)
    acc = a.add(acc, a.mul(x[i], y[i]));
  return acc;
}

Submodule annihilator(const Submodule& m) {
  const Algebra& a = *m.algebra();
  const fq::Field& F = a.field();
  int n = m.length(), d = a.dim();
  Side out_side = m.side() == Side::Right ? Side::Left : Side::Right;
  const fq::Mat& basis = m.flat_basis();
  // One block row of conditions per generator g: for v in R^n,
  // [v, g] = 0 (right input) or [g, v] = 0 (left input), linear over F_q.
  fq::Mat cond(basis.rows * d, n * d);
  for (int r = 0; r < basis.rows; ++r) {
    for (int j = 0; j < n; ++j) {
      RingElem g(basis.a.begin() + (static_cast<size_t>(r) * n + j) * d,
                 basis.a.begin() + (static_cast<size_t>(r) * n + j + 1) * d);
      // Coefficient of v_j's coordinates in the product v_j*g (resp. g*v_j).
      fq::Mat block = m.side() == Side::Right ? a.right_mul_matrix(g)
                                              : a.left_mul_matrix(g);
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l)
          cond.at(r * d + k, j * d + l) = block.at(k, l);
    }
  }
  fq::Mat ker = fq::kernel(F, cond);
  std::vector<RingVector> gens;
  Submodule shape = Submodule::zero(m.algebra(), n, out_side);
  for (int i = 0; i < ker.rows; ++i)
    gens.push_back(shape.unflatten(std::vector<uint32_t>(
        ker.a.begin() + static_cast<size_t>(i) * ker.cols,
        ker.a.begin() + static_cast<size_t>(i + 1) * ker.cols)));
  if (gens.empty()) return shape;
  return Submodule::from_generators(m.algebra(), n, gens, out_side);
}

LinearCode LinearCode::from_generators(AlgebraPtr a, int n,
                                       const std::vector<RingVector>& rows) {
  RingMatrix gen = RingMatrix::from_rows(a, n, rows);
  Submodule mod = Submodule::from_generators(std::move(a), n, rows, Side::Right);
  return LinearCode(std::move(gen), std::move(mod));
}

LinearCode LinearCode::zero(AlgebraPtr a, int n) {
  return from_generators(std::move(a), n, {});
}

LinearCode LinearCode::full(AlgebraPtr a, int n) {
  std::vector<RingVector> rows;
  for (int i = 0; i < n; ++i) {
    RingVector v(static_cast<size_t>(n), a->zero());
    v[static_cast<size_t>(i)] = a->unity();
    rows.push_back(std::move(v));
  }
  return from_generators(std::move(a), n, rows);
}

LinearCode LinearCode::from_column_span(const RingMatrix& m) {
  return from_generators(m.alg, m.rows, m.col_list());
}

const Submodule& LinearCode::dual() const {
  if (!dual_) dual_ = annihilator(module_);
  return *dual_;
}

std::pair<RingMatrix, bool> LinearCode::parity_generators() const {
  const Submodule& d = dual();
  if (algebra()->is_local())
    return {RingMatrix::from_rows(algebra(), length(), d.minimal_generators()),
            true};
  std::vector<RingVector> rows;
  for (int i = 0; i < d.flat_basis().rows; ++i)
    rows.push_back(d.unflatten(std::vector<uint32_t>(
        d.flat_basis().a.begin() + static_cast<size_t>(i) * d.flat_basis().cols,
        d.flat_basis().a.begin() +
            static_cast<size_t>(i + 1) * d.flat_basis().cols)));
  return {RingMatrix::from_rows(algebra(), length(), rows), false};
}

std::vector<uint64_t> weight_distribution_of(const Submodule& m,
                                             const Budget& budget) {
  uint64_t count = m.element_count_or_cap(budget.distance_cap);
  if (count > budget.distance_cap)
    fail(ErrorKind::Budget, "codeword enumeration exceeds the budget");
  const Algebra& a = *m.algebra();
  size_t bins = static_cast<size_t>(m.length()) + 1;
  return par::parallel_fold<std::vector<uint64_t>>(
      count, budget.threads, std::vector<uint64_t>(bins, 0),
      [&](uint64_t b, uint64_t e, std::vector<uint64_t>& h) {
        for (uint64_t idx = b; idx < e; ++idx) {
          RingVector w = m.element_at(idx);
          size_t weight = 0;
          for (const auto& c : w)
            if (!a.is_zero(c)) ++weight;
          ++h[weight];
        }
      },
      [](std::vector<uint64_t>& into, const std::vector<uint64_t>& part) {
        for (size_t i = 0; i < into.size(); ++i) into[i] += part[i];
      });
}

int min_distance_of(const Submodule& m, const Budget& budget) {
  if (m.is_zero())
    fail(ErrorKind::Invalid, "the zero code has no minimum distance");
  auto hist = weight_distribution_of(m, budget);
  for (size_t w = 1; w < hist.size(); ++w)
    if (hist[w] > 0) return static_cast<int>(w);
  fail(ErrorKind::Internal, "nonzero code with empty weight distribution");
}

const std::vector<uint64_t>& LinearCode::weight_distribution(
    const Budget& budget) const {
  if (!wdist_) wdist_ = weight_distribution_of(module_, budget);
  return *wdist_;
}

int LinearCode::min_distance(const Budget& budget) const {
  return min_distance_of(module_, budget);
}

bool invertible_over_R(const RingMatrix& a) {
  if (a.rows != a.cols)
    fail(ErrorKind::Invalid, "invertibility requires a square matrix");
  return fq::is_invertible(a.alg->field(), pi_matrix(a));
}

namespace {

/// F_q-matrix of the operator x -> A x on column vectors in R^n.
fq::Mat left_operator_matrix(const RingMatrix& a) {
  const Algebra& r = *a.alg;
  int n = a.rows, d = r.dim();
  fq::Mat op(n * d, n * d);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      fq::Mat block = r.left_mul_matrix(a.at(i, j));
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) op.at(i * d + k, j * d + l) = block.at(k, l);
    }
  return op;
}

}  // namespace

bool unit_in_matrix_ring(const RingMatrix& a) {
  if (a.rows != a.cols)
    fail(ErrorKind::Invalid, "unit testing requires a square matrix");
  return fq::is_invertible(a.alg->field(), left_operator_matrix(a));
}

std::optional<RingMatrix> matrix_inverse(const RingMatrix& a) {
  if (a.rows != a.cols)
    fail(ErrorKind::Invalid, "inversion requires a square matrix");
  const Algebra& r = *a.alg;
  const fq::Field& F = r.field();
  int n = a.rows, d = r.dim();
  fq::Mat op = left_operator_matrix(a);
  if (!fq::is_invertible(F, op)) return std::nullopt;
  RingMatrix inv = RingMatrix::make(a.alg, n, n);
  for (int j = 0; j < n; ++j) {
    // Solve A x = unit column j; x becomes column j of the inverse.
    std::vector<uint32_t> rhs(static_cast<size_t>(n) * d, 0);
    const RingElem& one = r.unity();
    for (int k = 0; k < d; ++k) rhs[static_cast<size_t>(j) * d + k] = one[static_cast<size_t>(k)];
    auto x = fq::solve(F, op, rhs);
    if (!x) fail(ErrorKind::Internal, "invertible operator failed to solve");
    for (int i = 0; i < n; ++i)
      inv.at(i, j) = RingElem(x->begin() + static_cast<size_t>(i) * d,
                              x->begin() + static_cast<size_t>(i + 1) * d);
  }
  if (!mat_equal(mat_mul(a, inv), RingMatrix::identity(a.alg, n)) ||
      !mat_equal(mat_mul(inv, a), RingMatrix::identity(a.alg, n)))
    fail(ErrorKind::Internal, "matrix inverse failed verification");
  return inv;
}

namespace {

IdempotentCodes build_split(const RingMatrix& E) {
  const AlgebraPtr& a = E.alg;
  int n = E.rows;
  LinearCode right = LinearCode::from_column_span(E);
  RingMatrix rest = mat_sub(RingMatrix::identity(a, n), E);
  Submodule left =
      Submodule::from_generators(a, n, rest.row_list(), Side::Left);
  bool e_idem = is_idempotent(E);
  bool identity = right.dual().equals(left);
  if (e_idem && !identity)
    fail(ErrorKind::Internal,
         "projection split violated the annihilator identity");
  return IdempotentCodes{std::move(right), std::move(left), e_idem, identity};
}

}  // namespace

IdempotentCodes idempotent_codes(const RingMatrix& e) {
  if (e.rows != e.cols)
    fail(ErrorKind::Invalid, "idempotent split requires a square matrix");
  if (!is_idempotent(e))
    fail(ErrorKind::Invalid, "matrix is not idempotent");
  return build_split(transpose(e));
}

IdempotentCodes codes_of_projection(const RingMatrix& E) {
  if (E.rows != E.cols)
    fail(ErrorKind::Invalid, "projection split requires a square matrix");
  if (!is_idempotent(E))
    fail(ErrorKind::Invalid, "projection matrix is not idempotent");
  return build_split(E);
}

}  // namespace ringlcp::codes
