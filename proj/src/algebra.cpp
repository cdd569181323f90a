#include "algebra.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ringlcp::alg {

namespace {

constexpr uint64_t kRingCap = 1ull << 20;

// q = p^m with p prime, or fail.
std::pair<uint32_t, uint32_t> factor_prime_power(uint64_t q) {
  if (q < 2) fail(ErrorKind::Invalid, "q must be >= 2");
  uint32_t p = 2;
  while (q % p != 0) {
    ++p;
    if ((uint64_t)p * p > q) {
      p = static_cast<uint32_t>(q);
      break;
    }
  }
  uint32_t m = 0;
  uint64_t t = q;
  while (t % p == 0) {
    t /= p;
    ++m;
  }
  if (t != 1)
    fail(ErrorKind::Invalid, "q = " + std::to_string(q) + " is not a prime power");
  return {p, m};
}

// Verifies an F_q-subspace is closed under the requested multiplications.
bool side_closed(const Algebra& A, const fq::Mat& basis, bool left) {
  const auto& F = A.field();
  fq::Rref span = fq::rref(F, basis);
  for (int r = 0; r < basis.rows; ++r) {
    RingElem x(basis.a.begin() + static_cast<size_t>(r) * basis.cols,
               basis.a.begin() + static_cast<size_t>(r + 1) * basis.cols);
    for (int k = 0; k < A.dim(); ++k) {
      RingElem prod = left ? A.mul(A.basis_elem(k), x) : A.mul(x, A.basis_elem(k));
      if (!fq::in_rowspace(F, span, prod)) return false;
    }
  }
  return true;
}

IdealSubspace make_ideal(const Algebra& A, fq::Mat rows) {
  IdealSubspace I;
  I.basis = fq::rref(A.field(), rows).m;
  I.left_closed = side_closed(A, I.basis, true);
  I.right_closed = side_closed(A, I.basis, false);
  return I;
}

// Radical basis by quasi-regularity, with no recursive self-check.
fq::Mat radical_basis(const Algebra& A) {
  uint64_t sz = A.size();
  if (sz > kRingCap)
    fail(ErrorKind::Budget, "|R| exceeds the radical enumeration cap (2^20)");
  std::vector<RingElem> elems;
  elems.reserve(sz);
  for (uint64_t i = 0; i < sz; ++i) elems.push_back(A.elem_from_index(i));
  fq::Mat rows(0, A.dim());
  for (const auto& x : elems) {
    if (A.is_unit(x)) continue;  // units are never quasi-regular generators of J
    bool in_radical = true;
    for (const auto& r : elems) {
      RingElem t = A.sub(A.unity(), A.mul(r, x));
      if (!A.is_unit(t)) {
        in_radical = false;
        break;
      }
    }
    if (in_radical) {
      fq::Mat row(1, A.dim());
      std::copy(x.begin(), x.end(), row.a.begin());
      rows = fq::vstack(rows, row);
    }
  }
  return fq::rref(A.field(), rows).m;
}

}  // namespace

std::shared_ptr<const Algebra> Algebra::make(fq::Field field, int dim,
                                             std::vector<uint32_t> sc,
                                             RingElem unity, std::string name) {
  if (dim < 1) fail(ErrorKind::Invalid, "algebra dimension must be >= 1");
  if (sc.size() != static_cast<size_t>(dim) * dim * dim)
    fail(ErrorKind::Invalid, "structure constants must be a d*d*d array");
  if (unity.size() != static_cast<size_t>(dim))
    fail(ErrorKind::Invalid, "unity vector must have d coordinates");
  for (auto& c : sc)
    if (c >= field.q()) fail(ErrorKind::Invalid, "structure constant out of field range");
  for (auto& c : unity)
    if (c >= field.q()) fail(ErrorKind::Invalid, "unity coordinate out of field range");

  auto A = std::shared_ptr<Algebra>(new Algebra(std::move(field)));
  A->dim_ = dim;
  A->sc_ = std::move(sc);
  A->unity_ = std::move(unity);
  A->name_ = std::move(name);
  A->validate();
  A->commutative_ = true;
  for (int i = 0; i < dim && A->commutative_; ++i)
    for (int j = i + 1; j < dim && A->commutative_; ++j)
      if (A->mul(A->basis_elem(i), A->basis_elem(j)) !=
          A->mul(A->basis_elem(j), A->basis_elem(i)))
        A->commutative_ = false;
  for (int i = 0; i < dim; ++i)
    A->symbols_.emplace_back("b" + std::to_string(i), A->basis_elem(i));
  return A;
}

void Algebra::validate() const {
  // Unity laws on the basis.
  for (int i = 0; i < dim_; ++i) {
    RingElem e = basis_elem(i);
    if (mul(unity_, e) != e || mul(e, unity_) != e)
      fail(ErrorKind::Invalid,
           "unity law fails on basis element e" + std::to_string(i));
  }
  // Associativity on every basis triple.
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k) {
        RingElem lhs = mul(mul(basis_elem(i), basis_elem(j)), basis_elem(k));
        RingElem rhs = mul(basis_elem(i), mul(basis_elem(j), basis_elem(k)));
        if (lhs != rhs) {
          std::ostringstream os;
          os << "associativity fails on basis triple (e" << i << ", e" << j
             << ", e" << k << ")";
          fail(ErrorKind::Invalid, os.str());
        }
      }
}

uint64_t Algebra::size() const {
  uint64_t s = 1;
  for (int i = 0; i < dim_; ++i) {
    if (s > (1ull << 62) / field_.q())
      fail(ErrorKind::Budget, "|R| overflows the representable range");
    s *= field_.q();
  }
  return s;
}

RingElem Algebra::basis_elem(int i) const {
  RingElem e(dim_, 0);
  e[i] = 1;
  return e;
}

RingElem Algebra::scalar(uint32_t c) const { return scale(c, unity_); }

RingElem Algebra::mul(const RingElem& a, const RingElem& b) const {
  RingElem out(dim_, 0);
  for (int i = 0; i < dim_; ++i) {
    if (!a[i]) continue;
    for (int j = 0; j < dim_; ++j) {
      if (!b[j]) continue;
      uint32_t f = field_.mul(a[i], b[j]);
      const uint32_t* c = sc(i, j);
      for (int k = 0; k < dim_; ++k)
        if (c[k]) out[k] = field_.add(out[k], field_.mul(f, c[k]));
    }
  }
  return out;
}

RingElem Algebra::add(const RingElem& a, const RingElem& b) const {
  RingElem out(dim_);
  for (int i = 0; i < dim_; ++i) out[i] = field_.add(a[i], b[i]);
  return out;
}

RingElem Algebra::sub(const RingElem& a, const RingElem& b) const {
  RingElem out(dim_);
  for (int i = 0; i < dim_; ++i) out[i] = field_.sub(a[i], b[i]);
  return out;
}

RingElem Algebra::neg(const RingElem& a) const {
  RingElem out(dim_);
  for (int i = 0; i < dim_; ++i) out[i] = field_.neg(a[i]);
  return out;
}

RingElem Algebra::scale(uint32_t c, const RingElem& a) const {
  RingElem out(dim_);
  for (int i = 0; i < dim_; ++i) out[i] = field_.mul(c, a[i]);
  return out;
}

bool Algebra::is_zero(const RingElem& a) const {
  return std::all_of(a.begin(), a.end(), [](uint32_t x) { return x == 0; });
}

fq::Mat Algebra::left_mul_matrix(const RingElem& x) const {
  fq::Mat M(dim_, dim_);
  for (int j = 0; j < dim_; ++j) {
    RingElem col = mul(x, basis_elem(j));
    for (int i = 0; i < dim_; ++i) M.at(i, j) = col[i];
  }
  return M;
}

fq::Mat Algebra::right_mul_matrix(const RingElem& x) const {
  fq::Mat M(dim_, dim_);
  for (int j = 0; j < dim_; ++j) {
    RingElem col = mul(basis_elem(j), x);
    for (int i = 0; i < dim_; ++i) M.at(i, j) = col[i];
  }
  return M;
}

bool Algebra::is_unit(const RingElem& x) const {
  return fq::is_invertible(field_, left_mul_matrix(x));
}

std::optional<RingElem> Algebra::try_inverse(const RingElem& x) const {
  auto y = fq::solve(field_, left_mul_matrix(x), unity_);
  if (!y) return std::nullopt;
  if (mul(*y, x) != unity_) return std::nullopt;  // one-sided only: not a unit
  return *y;
}

RingElem Algebra::elem_from_index(uint64_t idx) const {
  RingElem x(dim_);
  for (int i = 0; i < dim_; ++i) {
    x[i] = static_cast<uint32_t>(idx % field_.q());
    idx /= field_.q();
  }
  return x;
}

uint64_t Algebra::index_of(const RingElem& x) const {
  uint64_t idx = 0;
  for (int i = dim_ - 1; i >= 0; --i) idx = idx * field_.q() + x[i];
  return idx;
}

void Algebra::compute_radical() const {
  if (radical_) return;
  fq::Mat J = radical_basis(*this);
  IdealSubspace I;
  I.basis = J;
  I.left_closed = side_closed(*this, J, true);
  I.right_closed = side_closed(*this, J, false);
  if (!I.left_closed || !I.right_closed)
    fail(ErrorKind::Internal, "computed radical is not a two-sided ideal");
  radical_ = std::move(I);
  // Self-check: the quotient by J has zero radical.
  if (radical_->basis.rows > 0) {
    auto Q = quotient_algebra(*radical_);
    if (radical_basis(*Q).rows != 0)
      fail(ErrorKind::Internal, "R/J(R) has a nonzero radical");
  }
}

const IdealSubspace& Algebra::jacobson_radical() const {
  compute_radical();
  return *radical_;
}

int Algebra::nilpotency_index() const {
  const auto& J = jacobson_radical();
  if (J.basis.rows == 0) return 1;
  fq::Mat power = J.basis;
  int t = 1;
  while (power.rows > 0) {
    ++t;
    if (t > dim_ + 1) fail(ErrorKind::Internal, "radical is not nilpotent");
    fq::Mat next(0, dim_);
    for (int r = 0; r < power.rows; ++r) {
      RingElem a(power.a.begin() + static_cast<size_t>(r) * dim_,
                 power.a.begin() + static_cast<size_t>(r + 1) * dim_);
      for (int s = 0; s < J.basis.rows; ++s) {
        RingElem b(J.basis.a.begin() + static_cast<size_t>(s) * dim_,
                   J.basis.a.begin() + static_cast<size_t>(s + 1) * dim_);
        RingElem prod = mul(a, b);
        fq::Mat row(1, dim_);
        std::copy(prod.begin(), prod.end(), row.a.begin());
        next = fq::vstack(next, row);
      }
    }
    power = fq::rref(field_, next).m;
    if (power.rows == 0) return t;
  }
  return t;
}

RingElem Algebra::radical_annihilator_witness() const {
  const auto& J = jacobson_radical();
  if (J.basis.rows == 0)
    fail(ErrorKind::Invalid, "radical is zero: no annihilator witness needed");
  int t = nilpotency_index();
  fq::Mat power = J.basis;  // J^1
  for (int k = 2; k <= t - 1; ++k) {
    fq::Mat next(0, dim_);
    for (int r = 0; r < power.rows; ++r) {
      RingElem a(power.a.begin() + static_cast<size_t>(r) * dim_,
                 power.a.begin() + static_cast<size_t>(r + 1) * dim_);
      for (int s = 0; s < J.basis.rows; ++s) {
        RingElem b(J.basis.a.begin() + static_cast<size_t>(s) * dim_,
                   J.basis.a.begin() + static_cast<size_t>(s + 1) * dim_);
        RingElem prod = mul(a, b);
        fq::Mat row(1, dim_);
        std::copy(prod.begin(), prod.end(), row.a.begin());
        next = fq::vstack(next, row);
      }
    }
    power = fq::rref(field_, next).m;
  }
  RingElem m(power.a.begin(), power.a.begin() + dim_);
  for (int s = 0; s < J.basis.rows; ++s) {
    RingElem a(J.basis.a.begin() + static_cast<size_t>(s) * dim_,
               J.basis.a.begin() + static_cast<size_t>(s + 1) * dim_);
    if (!is_zero(mul(a, m)))
      fail(ErrorKind::Internal, "annihilator witness fails alpha*m = 0");
  }
  return m;
}

bool Algebra::is_local() const {
  if (local_) return *local_;
  const auto& J = jacobson_radical();
  fq::Rref span = fq::rref(field_, J.basis);
  uint64_t nonunits = 0;
  bool all_in_j = true;
  uint64_t sz = size();
  for (uint64_t i = 0; i < sz; ++i) {
    RingElem x = elem_from_index(i);
    if (is_unit(x)) continue;
    ++nonunits;
    if (!fq::in_rowspace(field_, span, x)) all_in_j = false;
  }
  uint64_t jsize = 1;
  for (int r = 0; r < J.basis.rows; ++r) jsize *= field_.q();
  local_ = all_in_j && nonunits == jsize;
  return *local_;
}

bool Algebra::residue_map_available() const {
  return is_local() && dim_ - jacobson_radical().basis.rows == 1 &&
         field_.m() == 1;
}

uint32_t Algebra::residue(const RingElem& x) const {
  if (!residue_map_available())
    fail(ErrorKind::Unsupported,
         "residue map requires a local ring with R/J isomorphic to the prime field");
  if (!pi_vec_) {
    const auto& J = jacobson_radical();
    fq::Mat B(dim_, dim_);
    for (int j = 0; j < dim_; ++j) B.at(0, j) = unity_[j];
    for (int r = 0; r < J.basis.rows; ++r)
      for (int j = 0; j < dim_; ++j) B.at(r + 1, j) = J.basis.at(r, j);
    std::vector<uint32_t> e1(dim_, 0);
    e1[0] = 1;
    auto w = fq::solve(field_, B, e1);
    if (!w) fail(ErrorKind::Internal, "residue functional solve failed");
    pi_vec_ = *w;
  }
  uint32_t out = 0;
  for (int i = 0; i < dim_; ++i)
    out = field_.add(out, field_.mul((*pi_vec_)[i], x[i]));
  return out;
}

IdealSubspace Algebra::socle_right() const {
  const auto& J = jacobson_radical();
  if (J.basis.rows == 0) return make_ideal(*this, fq::identity(dim_));
  fq::Mat eqs(0, dim_);
  for (int r = 0; r < J.basis.rows; ++r) {
    RingElem j(J.basis.a.begin() + static_cast<size_t>(r) * dim_,
               J.basis.a.begin() + static_cast<size_t>(r + 1) * dim_);
    eqs = fq::vstack(eqs, right_mul_matrix(j));  // rows of x |-> x*j
  }
  return make_ideal(*this, fq::kernel(field_, eqs));
}

IdealSubspace Algebra::socle_left() const {
  const auto& J = jacobson_radical();
  if (J.basis.rows == 0) return make_ideal(*this, fq::identity(dim_));
  fq::Mat eqs(0, dim_);
  for (int r = 0; r < J.basis.rows; ++r) {
    RingElem j(J.basis.a.begin() + static_cast<size_t>(r) * dim_,
               J.basis.a.begin() + static_cast<size_t>(r + 1) * dim_);
    eqs = fq::vstack(eqs, left_mul_matrix(j));  // rows of x |-> j*x
  }
  return make_ideal(*this, fq::kernel(field_, eqs));
}

FrobeniusCertificate Algebra::frobenius_certificate() const {
  FrobeniusCertificate cert{};
  IdealSubspace sr = socle_right();
  IdealSubspace sl = socle_left();
  cert.dim_socle_right = sr.basis.rows;
  cert.dim_socle_left = sl.basis.rows;
  cert.dim_residue = dim_ - jacobson_radical().basis.rows;
  // Soc(R_R) cyclic: some element of the socle generates it as a right module.
  cert.socle_right_cyclic = false;
  uint64_t count = 1;
  for (int i = 0; i < sr.basis.rows; ++i) count *= field_.q();
  for (uint64_t idx = 1; idx < count && !cert.socle_right_cyclic; ++idx) {
    RingElem x(dim_, 0);
    uint64_t t = idx;
    for (int r = 0; r < sr.basis.rows; ++r) {
      uint32_t c = static_cast<uint32_t>(t % field_.q());
      t /= field_.q();
      if (!c) continue;
      for (int j = 0; j < dim_; ++j)
        x[j] = field_.add(x[j], field_.mul(c, sr.basis.at(r, j)));
    }
    fq::Mat gens(dim_, dim_);
    for (int k = 0; k < dim_; ++k) {
      RingElem prod = mul(x, basis_elem(k));
      for (int j = 0; j < dim_; ++j) gens.at(k, j) = prod[j];
    }
    if (fq::rref(field_, gens).rank == sr.basis.rows)
      cert.socle_right_cyclic = true;
  }
  if (sr.basis.rows == 0) cert.socle_right_cyclic = true;  // degenerate
  cert.passed =
      cert.dim_socle_right == cert.dim_residue && cert.socle_right_cyclic;
  return cert;
}

std::shared_ptr<const Algebra> Algebra::quotient_algebra(
    const IdealSubspace& I) const {
  if (!I.left_closed || !I.right_closed)
    fail(ErrorKind::Invalid, "quotient requires a two-sided ideal");
  fq::Rref span = fq::rref(field_, I.basis);
  std::vector<bool> is_pivot(dim_, false);
  for (int c : span.pivots) is_pivot[c] = true;
  std::vector<int> coset_cols;  // quotient basis = cosets of these e_i
  for (int c = 0; c < dim_; ++c)
    if (!is_pivot[c]) coset_cols.push_back(c);
  int e = static_cast<int>(coset_cols.size());
  if (e == 0) fail(ErrorKind::Invalid, "quotient by the full ring is empty");

  auto project = [&](const RingElem& x) {
    auto res = fq::reduce_against(field_, span, x);
    RingElem out(e);
    for (int i = 0; i < e; ++i) out[i] = res[coset_cols[i]];
    return out;
  };

  std::vector<uint32_t> qsc(static_cast<size_t>(e) * e * e, 0);
  for (int i = 0; i < e; ++i)
    for (int j = 0; j < e; ++j) {
      RingElem prod =
          mul(basis_elem(coset_cols[i]), basis_elem(coset_cols[j]));
      RingElem proj = project(prod);
      for (int k = 0; k < e; ++k)
        qsc[(static_cast<size_t>(i) * e + j) * e + k] = proj[k];
    }
  return Algebra::make(field_, e, std::move(qsc), project(unity_),
                       name_ + "/I");
}

// ---------------------------------------------------------------------------
// Presets and literals.

namespace {

struct PresetDef {
  int dim;
  std::vector<std::tuple<int, int, int>> ones;  // (i, j, k): e_i e_j = e_k
  std::vector<int> unity_support;
  std::vector<std::pair<std::string, int>> names;  // symbol -> basis index
};

PresetDef preset_def(const std::string& nm) {
  if (nm == "field") return {1, {{0, 0, 0}}, {0}, {}};
  if (nm == "ut2")
    return {2, {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}}, {0}, {{"u", 1}}};
  if (nm == "blockpair")
    return {4,
            {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {2, 2, 2}, {2, 3, 3}, {3, 2, 3}},
            {0, 2},
            {{"e1", 0}, {"n1", 1}, {"e2", 2}, {"n2", 3}}};
  if (nm == "mat2") {
    // Basis E11,E12,E21,E22; E_ab E_cd = [b==c] E_ad.
    auto idx = [](int a, int b) { return (a - 1) * 2 + (b - 1); };
    PresetDef d{4, {}, {idx(1, 1), idx(2, 2)}, {}};
    for (int a = 1; a <= 2; ++a)
      for (int b = 1; b <= 2; ++b)
        for (int c = 1; c <= 2; ++c)
          for (int dd = 1; dd <= 2; ++dd)
            if (b == c) d.ones.push_back({idx(a, b), idx(c, dd), idx(a, dd)});
    d.names = {{"E11", 0}, {"E12", 1}, {"E21", 2}, {"E22", 3},
               {"e11", 0}, {"e12", 1}, {"e21", 2}, {"e22", 3}};
    return d;
  }
  if (nm == "t2") {
    // Upper triangular with independent diagonal: basis E11, E12, E22.
    PresetDef d{3,
                {{0, 0, 0}, {0, 1, 1}, {1, 2, 1}, {2, 2, 2}},
                {0, 2},
                {{"E11", 0}, {"E12", 1}, {"E22", 2},
                 {"e11", 0}, {"e12", 1}, {"e22", 2}}};
    return d;
  }
  fail(ErrorKind::Invalid, "unknown ring preset '" + nm + "'");
}

}  // namespace

std::shared_ptr<const Algebra> Algebra::preset(const std::string& text) {
  auto open = text.find('(');
  auto close = text.rfind(')');
  if (open == std::string::npos || close == std::string::npos || close < open)
    fail(ErrorKind::Invalid,
         "preset must look like name(q), got '" + text + "'");
  std::string nm = text.substr(0, open);
  std::string arg = text.substr(open + 1, close - open - 1);
  uint64_t q = 0;
  try {
    size_t pos = 0;
    q = std::stoull(arg, &pos);
    if (pos != arg.size()) throw std::invalid_argument("");
  } catch (...) {
    fail(ErrorKind::Invalid, "preset argument must be an integer: '" + arg + "'");
  }
  auto [p, m] = factor_prime_power(q);
  fq::Field F = fq::Field::make(p, m);
  PresetDef def = preset_def(nm);
  std::vector<uint32_t> sc(static_cast<size_t>(def.dim) * def.dim * def.dim, 0);
  for (auto [i, j, k] : def.ones)
    sc[(static_cast<size_t>(i) * def.dim + j) * def.dim + k] = 1;
  RingElem unity(def.dim, 0);
  for (int i : def.unity_support) unity[i] = 1;
  auto A = make(std::move(F), def.dim, std::move(sc), std::move(unity),
                nm + "(" + std::to_string(q) + ")");
  // Install the preset's literal symbols (keep b<k> fallbacks).
  auto* mut = const_cast<Algebra*>(A.get());
  for (const auto& [name, i] : def.names)
    mut->symbols_.emplace_back(name, A->basis_elem(i));
  return A;
}

RingElem Algebra::parse_elem(const std::string& text) const {
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos < text.size() && text[pos] == '[') {
    // Coordinate vector [a0,...,a_{d-1}].
    ++pos;
    RingElem out(dim_, 0);
    for (int i = 0; i < dim_; ++i) {
      skip_ws();
      size_t next = 0;
      long long v = 0;
      try {
        v = std::stoll(text.substr(pos), &next);
      } catch (...) {
        fail(ErrorKind::Invalid, "bad coordinate in element literal '" + text + "'");
      }
      pos += next;
      if (field_.m() == 1) {
        out[i] = field_.from_int(v);
      } else {
        if (v < 0 || v >= field_.q())
          fail(ErrorKind::Invalid, "coordinate index out of F_q range in '" + text + "'");
        out[i] = static_cast<uint32_t>(v);
      }
      skip_ws();
      if (i + 1 < dim_) {
        if (pos >= text.size() || text[pos] != ',')
          fail(ErrorKind::Invalid, "element literal needs " +
                                       std::to_string(dim_) + " coordinates: '" + text + "'");
        ++pos;
      }
    }
    skip_ws();
    if (pos >= text.size() || text[pos] != ']')
      fail(ErrorKind::Invalid, "unterminated element literal '" + text + "'");
    ++pos;
    skip_ws();
    if (pos != text.size())
      fail(ErrorKind::Invalid, "trailing characters in element literal '" + text + "'");
    return out;
  }

  // Signed sum of terms: INT | SYM | INT SYM | INT '*' SYM.
  RingElem out = zero();
  bool expect_term = true;
  int sign = 1;
  bool saw_any = false;
  while (pos < text.size()) {
    skip_ws();
    if (pos >= text.size()) break;
    char c = text[pos];
    if (c == '+' || c == '-') {
      if (expect_term && !saw_any && c == '-') {
        sign = -sign;  // leading minus
        ++pos;
        continue;
      }
      if (expect_term)
        fail(ErrorKind::Invalid, "misplaced sign in element literal '" + text + "'");
      sign = (c == '-') ? -1 : 1;
      expect_term = true;
      ++pos;
      continue;
    }
    if (!expect_term)
      fail(ErrorKind::Invalid, "missing '+' between terms in '" + text + "'");
    long long coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t next = 0;
      coeff = std::stoll(text.substr(pos), &next);
      pos += next;
      have_coeff = true;
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip_ws();
      }
    }
    RingElem term;
    if (pos < text.size() &&
        (std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
      size_t start = pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
        ++pos;
      std::string sym = text.substr(start, pos - start);
      const RingElem* found = nullptr;
      for (const auto& [name, val] : symbols_)
        if (name == sym) found = &val;
      if (!found)
        fail(ErrorKind::Invalid,
             "unknown symbol '" + sym + "' for ring " + name_);
      term = *found;
    } else if (have_coeff) {
      term = unity_;  // bare integer term
    } else {
      fail(ErrorKind::Invalid, "cannot parse element literal '" + text + "'");
    }
    uint32_t cf = field_.from_int(sign * coeff);
    out = add(out, scale(cf, term));
    saw_any = true;
    sign = 1;
    expect_term = false;
  }
  if (!saw_any)
    fail(ErrorKind::Invalid, "empty element literal");
  return out;
}

std::string Algebra::format_elem(const RingElem& x) const {
  // Prefer preset symbols; fall back to b<k>. Unity-as-basis renders bare.
  std::vector<std::string> names(dim_);
  for (int i = 0; i < dim_; ++i) names[i] = "b" + std::to_string(i);
  for (const auto& [name, val] : symbols_) {
    for (int i = 0; i < dim_; ++i)
      if (val == basis_elem(i) && names[i].substr(0, 1) == "b" &&
          name != names[i])
        names[i] = name;
  }
  if (unity_ == basis_elem(0)) names[0] = "";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < dim_; ++i) {
    if (!x[i]) continue;
    if (!first) os << "+";
    if (names[i].empty())
      os << x[i];
    else if (x[i] == 1)
      os << names[i];
    else
      os << x[i] << names[i];
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace ringlcp::alg
