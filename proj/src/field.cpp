#include "field.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ringlcp {

void fail(ErrorKind kind, const std::string& message) {
  throw Error{kind, message};
}

namespace fq {
namespace {

constexpr uint32_t kMaxQ = 1u << 20;

bool is_prime(uint32_t p) {
  if (p < 2) return false;
  for (uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Polynomials over F_p as coefficient vectors, index = degree.
using Poly = std::vector<uint32_t>;

int degree(const Poly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (f[i]) return i;
  return -1;
}

Poly poly_mod(uint32_t p, Poly f, const Poly& g) {
  int dg = degree(g);
  uint32_t lead_inv = 1;
  {  // g monic in our uses, but stay general
    uint32_t lead = g[dg], t = 1, b = lead, e = p - 2;
    while (e) {
      if (e & 1) t = (uint64_t)t * b % p;
      b = (uint64_t)b * b % p;
      e >>= 1;
    }
    lead_inv = t;
  }
  for (int i = degree(f); i >= dg; i = degree(f)) {
    uint32_t c = (uint64_t)f[i] * lead_inv % p;
    for (int j = 0; j <= dg; ++j) {
      uint64_t sub = (uint64_t)c * g[j] % p;
      f[i - dg + j] = (f[i - dg + j] + p - sub) % p;
    }
  }
  f.resize(dg);
  return f;
}

bool poly_is_zero(const Poly& f) { return degree(f) < 0; }

Poly poly_mul(uint32_t p, const Poly& a, const Poly& b) {
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + (uint64_t)a[i] * b[j]) % p;
  }
  return c;
}

// Trial division by every monic polynomial of degree 1..deg(f)/2.
bool poly_irreducible(uint32_t p, const Poly& f) {
  int df = degree(f);
  if (df < 1) return false;
  for (int dd = 1; 2 * dd <= df; ++dd) {
    uint64_t count = 1;
    for (int i = 0; i < dd; ++i) count *= p;
    for (uint64_t idx = 0; idx < count; ++idx) {
      Poly g(dd + 1, 0);
      uint64_t t = idx;
      for (int i = 0; i < dd; ++i) {
        g[i] = t % p;
        t /= p;
      }
      g[dd] = 1;
      if (poly_is_zero(poly_mod(p, f, g))) return false;
    }
  }
  return true;
}

}  // namespace

Field Field::make(uint32_t p, uint32_t m, std::vector<uint32_t> modulus) {
  if (!is_prime(p)) fail(ErrorKind::Invalid, "field characteristic must be prime, got " + std::to_string(p));
  if (m < 1) fail(ErrorKind::Invalid, "extension degree must be >= 1");
  uint64_t q = 1;
  for (uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxQ) fail(ErrorKind::Invalid, "field size q = p^m exceeds 2^20");
  }
  Field F;
  F.p_ = p;
  F.m_ = m;
  F.q_ = static_cast<uint32_t>(q);
  if (m == 1) {
    if (!modulus.empty()) fail(ErrorKind::Invalid, "modulus given for prime field");
    return F;
  }
  if (modulus.empty()) {
    // Lexicographically least monic irreducible of degree m.
    uint64_t count = 1;
    for (uint32_t i = 0; i < m; ++i) count *= p;
    for (uint64_t idx = 0; idx < count; ++idx) {
      Poly g(m + 1, 0);
      uint64_t t = idx;
      for (uint32_t i = 0; i < m; ++i) {
        g[i] = t % p;
        t /= p;
      }
      g[m] = 1;
      if (poly_irreducible(p, g)) {
        modulus = g;
        break;
      }
    }
  }
  if (modulus.size() != m + 1 || modulus[m] != 1)
    fail(ErrorKind::Invalid, "modulus must be monic of degree m");
  for (auto& c : modulus) c %= p;
  if (!poly_irreducible(p, modulus))
    fail(ErrorKind::Invalid, "modulus polynomial is reducible over F_p");
  F.modulus_ = std::move(modulus);
  return F;
}

uint32_t Field::add(uint32_t a, uint32_t b) const {
  if (m_ == 1) return (a + b) % p_;
  uint32_t out = 0, mult = 1;
  for (uint32_t i = 0; i < m_; ++i) {
    uint32_t da = a % p_, db = b % p_;
    a /= p_;
    b /= p_;
    out += ((da + db) % p_) * mult;
    mult *= p_;
  }
  return out;
}

uint32_t Field::neg(uint32_t a) const {
  if (m_ == 1) return a ? p_ - a : 0;
  uint32_t out = 0, mult = 1;
  for (uint32_t i = 0; i < m_; ++i) {
    uint32_t da = a % p_;
    a /= p_;
    out += (da ? p_ - da : 0) * mult;
    mult *= p_;
  }
  return out;
}

uint32_t Field::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t Field::mul(uint32_t a, uint32_t b) const {
  if (m_ == 1) return static_cast<uint32_t>((uint64_t)a * b % p_);
  Poly pa(m_, 0), pb(m_, 0);
  for (uint32_t i = 0; i < m_; ++i) {
    pa[i] = a % p_;
    a /= p_;
    pb[i] = b % p_;
    b /= p_;
  }
  Poly pc = poly_mod(p_, poly_mul(p_, pa, pb), modulus_);
  uint32_t out = 0, mult = 1;
  for (uint32_t i = 0; i < m_; ++i) {
    out += (i < pc.size() ? pc[i] : 0) * mult;
    mult *= p_;
  }
  return out;
}

uint32_t Field::pow(uint32_t a, uint64_t e) const {
  uint32_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

uint32_t Field::inv(uint32_t a) const {
  if (a == 0) fail(ErrorKind::Invalid, "division by zero in F_q");
  return pow(a, q_ - 2);
}

uint32_t Field::from_int(int64_t k) const {
  int64_t r = k % static_cast<int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<uint32_t>(r);
}

Mat identity(int n) {
  Mat I(n, n);
  for (int i = 0; i < n; ++i) I.at(i, i) = 1;
  return I;
}

Mat mat_mul(const Field& F, const Mat& A, const Mat& B) {
  if (A.cols != B.rows) fail(ErrorKind::Invalid, "matrix shape mismatch in mat_mul");
  Mat C(A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int k = 0; k < A.cols; ++k) {
      uint32_t aik = A.at(i, k);
      if (!aik) continue;
      for (int j = 0; j < B.cols; ++j)
        C.at(i, j) = F.add(C.at(i, j), F.mul(aik, B.at(k, j)));
    }
  return C;
}

Mat transpose(const Mat& A) {
  Mat T(A.cols, A.rows);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) T.at(j, i) = A.at(i, j);
  return T;
}

Mat vstack(const Mat& A, const Mat& B) {
  if (A.rows == 0) return B;
  if (B.rows == 0) return A;
  if (A.cols != B.cols) fail(ErrorKind::Invalid, "column mismatch in vstack");
  Mat S(A.rows + B.rows, A.cols);
  std::copy(A.a.begin(), A.a.end(), S.a.begin());
  std::copy(B.a.begin(), B.a.end(), S.a.begin() + A.a.size());
  return S;
}

Rref rref(const Field& F, Mat M) {
  Rref out;
  int r = 0;
  for (int c = 0; c < M.cols && r < M.rows; ++c) {
    int piv = -1;
    for (int i = r; i < M.rows; ++i)
      if (M.at(i, c)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < M.cols; ++j) std::swap(M.at(piv, j), M.at(r, j));
    uint32_t inv = F.inv(M.at(r, c));
    for (int j = c; j < M.cols; ++j) M.at(r, j) = F.mul(M.at(r, j), inv);
    for (int i = 0; i < M.rows; ++i) {
      if (i == r || !M.at(i, c)) continue;
      uint32_t f = M.at(i, c);
      for (int j = c; j < M.cols; ++j)
        M.at(i, j) = F.sub(M.at(i, j), F.mul(f, M.at(r, j)));
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.m = Mat(r, M.cols);
  std::copy(M.a.begin(), M.a.begin() + static_cast<size_t>(r) * M.cols,
            out.m.a.begin());
  return out;
}

Mat kernel(const Field& F, const Mat& M) {
  Rref R = rref(F, M);
  std::vector<bool> is_pivot(M.cols, false);
  for (int c : R.pivots) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < M.cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Mat K(static_cast<int>(free_cols.size()), M.cols);
  for (size_t i = 0; i < free_cols.size(); ++i) {
    int fc = free_cols[i];
    K.at(static_cast<int>(i), fc) = 1;
    for (int r = 0; r < R.rank; ++r)
      K.at(static_cast<int>(i), R.pivots[r]) = F.neg(R.m.at(r, fc));
  }
  return K;
}

Mat subspace_intersect(const Field& F, const Mat& A, const Mat& B) {
  int c = A.cols ? A.cols : B.cols;
  Mat Z(A.rows + B.rows, 2 * c);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < c; ++j) {
      Z.at(i, j) = A.at(i, j);
      Z.at(i, c + j) = A.at(i, j);
    }
  for (int i = 0; i < B.rows; ++i)
    for (int j = 0; j < c; ++j) Z.at(A.rows + i, j) = B.at(i, j);
  Rref R = rref(F, Z);
  Mat out(0, c);
  for (int r = 0; r < R.rank; ++r) {
    bool left_zero = true;
    for (int j = 0; j < c && left_zero; ++j)
      if (R.m.at(r, j)) left_zero = false;
    if (!left_zero) continue;
    Mat row(1, c);
    for (int j = 0; j < c; ++j) row.at(0, j) = R.m.at(r, c + j);
    out = vstack(out, row);
  }
  return rref(F, out).m;
}

std::vector<uint32_t> reduce_against(const Field& F, const Rref& basis,
                                     std::vector<uint32_t> v) {
  for (int r = 0; r < basis.rank; ++r) {
    uint32_t c = v[basis.pivots[r]];
    if (!c) continue;
    for (int j = basis.pivots[r]; j < basis.m.cols; ++j)
      v[j] = F.sub(v[j], F.mul(c, basis.m.at(r, j)));
  }
  return v;
}

bool in_rowspace(const Field& F, const Rref& basis,
                 const std::vector<uint32_t>& v) {
  auto res = reduce_against(F, basis, v);
  return std::all_of(res.begin(), res.end(), [](uint32_t x) { return x == 0; });
}

bool is_invertible(const Field& F, const Mat& M) {
  if (M.rows != M.cols) fail(ErrorKind::Invalid, "is_invertible requires a square matrix");
  return rref(F, M).rank == M.rows;
}

uint32_t determinant(const Field& F, Mat M) {
  if (M.rows != M.cols) fail(ErrorKind::Invalid, "determinant requires a square matrix");
  int n = M.rows;
  uint32_t det = 1;
  bool negate = false;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (M.at(i, c)) {
        piv = i;
        break;
      }
    if (piv < 0) return 0;
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(M.at(piv, j), M.at(c, j));
      negate = !negate;
    }
    det = F.mul(det, M.at(c, c));
    uint32_t inv = F.inv(M.at(c, c));
    for (int i = c + 1; i < n; ++i) {
      if (!M.at(i, c)) continue;
      uint32_t f = F.mul(M.at(i, c), inv);
      for (int j = c; j < n; ++j)
        M.at(i, j) = F.sub(M.at(i, j), F.mul(f, M.at(c, j)));
    }
  }
  return negate ? F.neg(det) : det;
}

std::optional<std::vector<uint32_t>> solve(const Field& F, const Mat& M,
                                           const std::vector<uint32_t>& b) {
  if (static_cast<int>(b.size()) != M.rows)
    fail(ErrorKind::Invalid, "solve: rhs length mismatch");
  Mat aug(M.rows, M.cols + 1);
  for (int i = 0; i < M.rows; ++i) {
    for (int j = 0; j < M.cols; ++j) aug.at(i, j) = M.at(i, j);
    aug.at(i, M.cols) = b[i];
  }
  Rref R = rref(F, aug);
  std::vector<uint32_t> x(M.cols, 0);
  for (int r = 0; r < R.rank; ++r) {
    if (R.pivots[r] == M.cols) return std::nullopt;  // 0 = 1 row
    x[R.pivots[r]] = R.m.at(r, M.cols);
  }
  return x;
}

}  // namespace fq
}  // namespace ringlcp
