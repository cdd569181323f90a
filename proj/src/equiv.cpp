#include "equiv.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>

#include "json.hpp"

namespace ringlcp::equiv {

namespace {

void require_same_ambient(const Submodule& a, const Submodule& b) {
  if (a.algebra().get() != b.algebra().get())
    fail(ErrorKind::Invalid,
         "equivalence requires codes over the same ring instance");
  if (a.length() != b.length())
    fail(ErrorKind::Invalid, "equivalence requires codes of the same length");
}

std::vector<uint32_t> basis_row(const fq::Mat& m, int i) {
  return std::vector<uint32_t>(
      m.a.begin() + static_cast<size_t>(i) * m.cols,
      m.a.begin() + static_cast<size_t>(i + 1) * m.cols);
}

/// F_q-subspace of R swept by coordinate j, as a canonical rref basis.
fq::Mat coordinate_projection(const Submodule& m, int j) {
  const Algebra& R = *m.algebra();
  const fq::Mat& B = m.flat_basis();
  int d = R.dim();
  fq::Mat rows(B.rows, d);
  for (int i = 0; i < B.rows; ++i)
    for (int l = 0; l < d; ++l) rows.at(i, l) = B.at(i, j * d + l);
  return fq::rref(R.field(), rows).m;
}

std::vector<uint32_t> apply_map(const Algebra& R, int n,
                                const std::vector<uint32_t>& row,
                                const std::vector<int>& perm,
                                const std::vector<RingElem>& s, Side scaling) {
  int d = R.dim();
  std::vector<uint32_t> out(row.size(), 0);
  for (int j = 0; j < n; ++j) {
    RingElem x(row.begin() + static_cast<size_t>(perm[j]) * d,
               row.begin() + static_cast<size_t>(perm[j] + 1) * d);
    RingElem y = scaling == Side::Right ? R.mul(x, s[j]) : R.mul(s[j], x);
    std::copy(y.begin(), y.end(), out.begin() + static_cast<size_t>(j) * d);
  }
  return out;
}

/// The searched maps are F_q-linear and injective (unit scalars), so
/// mapping a basis into the target plus equal dimensions certifies a
/// bijection of the underlying sets.
bool certifies(const Submodule& src, const Submodule& dst,
               const std::vector<int>& perm, const std::vector<RingElem>& s,
               Side scaling) {
  if (src.dim() != dst.dim()) return false;
  const Algebra& R = *src.algebra();
  const fq::Mat& B = src.flat_basis();
  for (int i = 0; i < B.rows; ++i)
    if (!dst.contains_flat(
            apply_map(R, src.length(), basis_row(B, i), perm, s, scaling)))
      return false;
  return true;
}

/// Weight distributions must match under any coordinate permutation with
/// unit scaling. Only used as a rejection aid, so oversized codes pass.
bool weight_profiles_compatible(const Submodule& a, const Submodule& b,
                                const Budget& budget) {
  uint64_t cap = budget.distance_cap;
  if (a.element_count_or_cap(cap) > cap || b.element_count_or_cap(cap) > cap)
    return true;
  return codes::weight_distribution_of(a, budget) ==
         codes::weight_distribution_of(b, budget);
}

std::vector<RingElem> all_unity(const Algebra& R, int n) {
  return std::vector<RingElem>(n, R.unity());
}

EquivalenceResult certified_result(EquivKind kind, std::vector<int> perm,
                                   std::vector<RingElem> s, Side scaling,
                                   int checked) {
  EquivalenceResult r;
  r.kind = kind;
  r.permutation = std::move(perm);
  r.scalars = std::move(s);
  r.scaling = scaling;
  r.checked_basis_size = checked;
  return r;
}

Side scaling_side_for(const Submodule& a, const Submodule& b) {
  return (a.side() == Side::Left && b.side() == Side::Left) ? Side::Left
                                                            : Side::Right;
}

/// Per-permutation linear solve: with sigma fixed, the scalar tuple s must
/// satisfy "image of every source basis row lies in the target", which is
/// F_q-linear in the coordinates of s. Returns the kernel basis of that
/// constraint system; its row space is the full solution space.
fq::Mat scalar_solution_space(const Submodule& src, const Submodule& dst,
                              const std::vector<int>& perm, Side scaling) {
  const Algebra& R = *src.algebra();
  const fq::Field& F = R.field();
  int n = src.length(), d = R.dim();
  const fq::Mat& B = src.flat_basis();
  fq::Rref dst_rref = fq::rref(F, dst.flat_basis());
  // Column (j, l): residual of the image of every basis row when s_j is the
  // l-th algebra basis element and every other scalar is zero.
  int unknowns = n * d;
  if (B.rows == 0) return fq::identity(unknowns);
  fq::Mat cols(unknowns, B.rows * n * d);
  for (int j = 0; j < n; ++j) {
    for (int l = 0; l < d; ++l) {
      std::vector<uint32_t> stacked;
      stacked.reserve(static_cast<size_t>(B.rows) * n * d);
      for (int i = 0; i < B.rows; ++i) {
        std::vector<uint32_t> row = basis_row(B, i);
        RingElem x(row.begin() + static_cast<size_t>(perm[j]) * d,
                   row.begin() + static_cast<size_t>(perm[j] + 1) * d);
        RingElem y = scaling == Side::Right ? R.mul(x, R.basis_elem(l))
                                            : R.mul(R.basis_elem(l), x);
        std::vector<uint32_t> image(static_cast<size_t>(n) * d, 0);
        std::copy(y.begin(), y.end(),
                  image.begin() + static_cast<size_t>(j) * d);
        auto residual = fq::reduce_against(F, dst_rref, std::move(image));
        stacked.insert(stacked.end(), residual.begin(), residual.end());
      }
      for (size_t r = 0; r < stacked.size(); ++r)
        cols.at(j * d + l, static_cast<int>(r)) = stacked[r];
    }
  }
  // Solutions are the kernel of the transposed condition matrix.
  return fq::kernel(F, fq::transpose(cols));
}

/// Candidate source coordinates for each image coordinate, pruned by the
/// per-coordinate projection subspaces (equal subspace for permutations;
/// equal dimension when unit scaling is allowed).
std::vector<std::vector<char>> coordinate_candidates(const Submodule& a,
                                                     const Submodule& b,
                                                     bool scaling_allowed) {
  int n = a.length();
  std::vector<fq::Mat> pa(n), pb(n);
  for (int j = 0; j < n; ++j) {
    pa[j] = coordinate_projection(a, j);
    pb[j] = coordinate_projection(b, j);
  }
  std::vector<std::vector<char>> ok(n, std::vector<char>(n, 0));
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      ok[j][k] = scaling_allowed ? (pb[j].rows == pa[k].rows)
                                 : (pb[j] == pa[k]);
  return ok;
}

}  // namespace

const char* kind_name(EquivKind k) {
  switch (k) {
    case EquivKind::SetEqual: return "set-equal";
    case EquivKind::Permutation: return "permutation";
    case EquivKind::Monomial: return "monomial";
    case EquivKind::NoneWithinBudget: return "none-within-budget";
  }
  return "?";
}

bool same_tuple_set(const Submodule& a, const Submodule& b) {
  require_same_ambient(a, b);
  return a.flat_basis() == b.flat_basis();
}

EquivalenceResult permutation_equivalent(const Submodule& a,
                                         const Submodule& b,
                                         const Budget& budget) {
  require_same_ambient(a, b);
  int n = a.length();
  if (n > 8)
    fail(ErrorKind::Budget, "permutation search is limited to length <= 8");
  EquivalenceResult none;
  if (a.dim() != b.dim()) return none;
  if (!weight_profiles_compatible(a, b, budget)) return none;
  const Algebra& R = *a.algebra();
  Side scaling = scaling_side_for(a, b);
  auto ok = coordinate_candidates(a, b, /*scaling_allowed=*/false);
  auto unity = all_unity(R, n);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool pruned = false;
    for (int j = 0; j < n && !pruned; ++j)
      if (!ok[j][perm[j]]) pruned = true;
    if (pruned) continue;
    if (certifies(a, b, perm, unity, scaling))
      return certified_result(EquivKind::Permutation, perm, unity, scaling,
                              a.dim());
  } while (std::next_permutation(perm.begin(), perm.end()));
  return none;
}

EquivalenceResult monomial_equivalent(const Submodule& a, const Submodule& b,
                                      const Budget& budget) {
  require_same_ambient(a, b);
  int n = a.length();
  if (n > 6)
    fail(ErrorKind::Budget, "monomial search is limited to length <= 6");
  EquivalenceResult none;
  if (a.dim() != b.dim()) return none;
  if (!weight_profiles_compatible(a, b, budget)) return none;
  const Algebra& R = *a.algebra();
  const fq::Field& F = R.field();
  int d = R.dim();
  Side scaling = scaling_side_for(a, b);
  auto ok = coordinate_candidates(a, b, /*scaling_allowed=*/true);
  auto unity = all_unity(R, n);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool pruned = false;
    for (int j = 0; j < n && !pruned; ++j)
      if (!ok[j][perm[j]]) pruned = true;
    if (pruned) continue;
    // Cheapest certificate under this permutation first.
    if (certifies(a, b, perm, unity, scaling))
      return certified_result(EquivKind::Monomial, perm, unity, scaling,
                              a.dim());
    fq::Mat sol = scalar_solution_space(a, b, perm, scaling);
    if (sol.rows == 0) continue;
    // Enumerate the solution space in coefficient order (first kernel row
    // most significant), capped per permutation.
    uint64_t total = 1;
    bool overflow = false;
    for (int r = 0; r < sol.rows; ++r) {
      if (total > budget.scan_cap) { overflow = true; break; }
      total *= F.q();
    }
    uint64_t limit = overflow ? budget.scan_cap + 1
                              : std::min(total, budget.scan_cap + 1);
    for (uint64_t idx = 1; idx < limit; ++idx) {
      std::vector<uint32_t> coeff(sol.rows, 0);
      uint64_t rem = idx;
      for (int r = sol.rows - 1; r >= 0; --r) {
        coeff[r] = static_cast<uint32_t>(rem % F.q());
        rem /= F.q();
      }
      std::vector<uint32_t> flat(static_cast<size_t>(n) * d, 0);
      for (int r = 0; r < sol.rows; ++r) {
        if (coeff[r] == 0) continue;
        for (int c = 0; c < sol.cols; ++c)
          flat[c] = F.add(flat[c], F.mul(coeff[r], sol.at(r, c)));
      }
      std::vector<RingElem> s(n);
      bool units = true;
      for (int j = 0; j < n && units; ++j) {
        s[j] = RingElem(flat.begin() + static_cast<size_t>(j) * d,
                        flat.begin() + static_cast<size_t>(j + 1) * d);
        units = R.is_unit(s[j]);
      }
      if (!units) continue;
      if (!certifies(a, b, perm, s, scaling))
        fail(ErrorKind::Internal,
             "monomial solver produced a map that fails verification");
      return certified_result(EquivKind::Monomial, perm, std::move(s),
                              scaling, a.dim());
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return none;
}

EquivalenceResult equivalent(const Submodule& a, const Submodule& b,
                             const Budget& budget) {
  require_same_ambient(a, b);
  int n = a.length();
  if (same_tuple_set(a, b)) {
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    return certified_result(EquivKind::SetEqual, id,
                            all_unity(*a.algebra(), n),
                            scaling_side_for(a, b), a.dim());
  }
  if (n <= 8) {
    auto p = permutation_equivalent(a, b, budget);
    if (p.found()) return p;
  }
  if (n <= 6) {
    auto m = monomial_equivalent(a, b, budget);
    if (m.found()) return m;
  }
  return EquivalenceResult{};
}

std::string certificate_json(const Algebra& a, const EquivalenceResult& r) {
  nlohmann::ordered_json j;
  j["kind"] = kind_name(r.kind);
  j["permutation"] = r.permutation;
  auto scalars = nlohmann::ordered_json::array();
  for (const auto& s : r.scalars) scalars.push_back(a.format_elem(s));
  j["scalars"] = scalars;
  j["checked_basis_size"] = r.checked_basis_size;
  return j.dump();
}

}  // namespace ringlcp::equiv
