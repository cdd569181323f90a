#include "rmodule.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <sstream>

#include "parallel.hpp"

namespace ringlcp::par {

int resolve_threads(int requested) {
  int t = requested;
  if (t <= 0) {
    if (const char* env = std::getenv("RINGLCP_THREADS")) {
      char* end = nullptr;
      long v = std::strtol(env, &end, 10);
      if (end && *end == '\0' && v > 0) t = static_cast<int>(v);
    }
  }
  if (t <= 0) t = static_cast<int>(std::thread::hardware_concurrency());
  return std::clamp(t, 1, 64);
}

}  // namespace ringlcp::par

namespace ringlcp::rmod {

namespace {

uint64_t env_u64(const char* name, uint64_t fallback) {
  const char* env = std::getenv(name);
  if (!env) return fallback;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (!end || *end != '\0' || v == 0) return fallback;
  return v;
}

std::string u128_to_string(unsigned __int128 v) {
  if (v == 0) return "0";
  std::string out;
  while (v > 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

Budget Budget::from_env() {
  Budget b;
  b.scan_cap = env_u64("RINGLCP_BUDGET", b.scan_cap);
  if (const char* env = std::getenv("RINGLCP_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0) b.threads = static_cast<int>(v);
  }
  return b;
}

const char* tri_name(Tri t) {
  switch (t) {
    case Tri::Yes:
      return "yes";
    case Tri::No:
      return "no";
    case Tri::Skipped:
      return "skipped";
    case Tri::BudgetExceeded:
      return "budget-exceeded";
  }
  return "?";
}

RingVector act(const Algebra& a, const RingVector& v, const RingElem& r,
               Side side) {
  RingVector out(v.size());
  for (size_t j = 0; j < v.size(); ++j)
    out[j] = side == Side::Right ? a.mul(v[j], r) : a.mul(r, v[j]);
  return out;
}

RingVector zero_vector(const Algebra& a, int n) {
  return RingVector(static_cast<size_t>(n), a.zero());
}

bool is_zero_vector(const Algebra& a, const RingVector& v) {
  for (const auto& c : v)
    if (!a.is_zero(c)) return false;
  return true;
}

RingVector vector_at(const Algebra& a, int n, uint64_t idx) {
  RingVector v(static_cast<size_t>(n));
  uint64_t size = a.size();
  for (int j = n - 1; j >= 0; --j) {
    v[static_cast<size_t>(j)] = a.elem_from_index(idx % size);
    idx /= size;
  }
  return v;
}

std::optional<uint64_t> vector_space_size(const Algebra& a, int n) {
  uint64_t size = a.size(), total = 1;
  for (int j = 0; j < n; ++j) {
    if (total > UINT64_MAX / size) return std::nullopt;
    total *= size;
  }
  return total;
}

Submodule::Submodule(AlgebraPtr alg, int n, Side side)
    : alg_(std::move(alg)), n_(n), side_(side) {
  if (!alg_) fail(ErrorKind::Invalid, "submodule requires a ring");
  if (n_ <= 0) fail(ErrorKind::Invalid, "module length must be positive");
}

std::vector<uint32_t> Submodule::flatten(const RingVector& v) const {
  int d = alg_->dim();
  if (static_cast<int>(v.size()) != n_)
    fail(ErrorKind::Invalid, "vector length does not match the module");
  std::vector<uint32_t> row(static_cast<size_t>(n_) * d);
  for (int j = 0; j < n_; ++j) {
    const RingElem& c = v[static_cast<size_t>(j)];
    if (static_cast<int>(c.size()) != d)
      fail(ErrorKind::Invalid, "ring element has wrong coordinate count");
    for (int k = 0; k < d; ++k) row[static_cast<size_t>(j) * d + k] = c[k];
  }
  return row;
}

RingVector Submodule::unflatten(const std::vector<uint32_t>& row) const {
  int d = alg_->dim();
  RingVector v(static_cast<size_t>(n_), alg_->zero());
  for (int j = 0; j < n_; ++j)
    for (int k = 0; k < d; ++k)
      v[static_cast<size_t>(j)][static_cast<size_t>(k)] =
          row[static_cast<size_t>(j) * d + k];
  return v;
}

Submodule Submodule::from_generators(AlgebraPtr alg, int n,
                                     const std::vector<RingVector>& gens,
                                     Side side) {
  Submodule m(std::move(alg), n, side);
  const Algebra& a = *m.alg_;
  int d = a.dim();
  // The span of {g * e_b} (resp. {e_b * g}) over all generators g and basis
  // elements e_b is already closed under the one-sided action, because
  // products of basis elements expand linearly into basis elements.
  fq::Mat rows(static_cast<int>(gens.size()) * d, n * d);
  int r = 0;
  for (const auto& g : gens) {
    for (int b = 0; b < d; ++b) {
      RingVector img = act(a, g, a.basis_elem(b), side);
      auto flat = m.flatten(img);
      for (int c = 0; c < n * d; ++c) rows.at(r, c) = flat[static_cast<size_t>(c)];
      ++r;
    }
  }
  m.basis_ = fq::rref(a.field(), rows);
  return m;
}

Submodule Submodule::zero(AlgebraPtr alg, int n, Side side) {
  Submodule m(std::move(alg), n, side);
  m.basis_ = fq::rref(m.alg_->field(), fq::Mat(0, n * m.alg_->dim()));
  return m;
}

Submodule Submodule::full(AlgebraPtr alg, int n, Side side) {
  Submodule m(std::move(alg), n, side);
  m.basis_ = fq::rref(m.alg_->field(), fq::identity(n * m.alg_->dim()));
  return m;
}

Submodule Submodule::cyclic(AlgebraPtr alg, const RingVector& x, Side side) {
  int n = static_cast<int>(x.size());
  return from_generators(std::move(alg), n, {x}, side);
}

std::string Submodule::cardinality() const {
  unsigned __int128 total = 1;
  uint64_t q = alg_->field().q();
  for (int i = 0; i < dim(); ++i) {
    unsigned __int128 next = total * q;
    if (next / q != total)
      fail(ErrorKind::Internal, "module cardinality overflows");
    total = next;
  }
  return u128_to_string(total);
}

bool Submodule::contains_flat(const std::vector<uint32_t>& row) const {
  return fq::in_rowspace(alg_->field(), basis_, row);
}

bool Submodule::contains(const RingVector& v) const {
  return contains_flat(flatten(v));
}

bool Submodule::equals(const Submodule& other) const {
  return alg_.get() == other.alg_.get() && n_ == other.n_ &&
         side_ == other.side_ && basis_.m == other.basis_.m;
}

bool Submodule::contains_submodule(const Submodule& other) const {
  if (alg_.get() != other.alg_.get() || n_ != other.n_ || side_ != other.side_)
    return false;
  for (int i = 0; i < other.basis_.m.rows; ++i) {
    std::vector<uint32_t> row(other.basis_.m.a.begin() + static_cast<size_t>(i) * other.basis_.m.cols,
                              other.basis_.m.a.begin() + static_cast<size_t>(i + 1) * other.basis_.m.cols);
    if (!contains_flat(row)) return false;
  }
  return true;
}

bool Submodule::is_full() const { return dim() == n_ * alg_->dim(); }

namespace {
void require_compatible(const Submodule& a, const Submodule& b) {
  if (a.algebra().get() != b.algebra().get())
    fail(ErrorKind::Invalid, "submodules live over different rings");
  if (a.length() != b.length())
    fail(ErrorKind::Invalid, "submodules have different lengths");
  if (a.side() != b.side())
    fail(ErrorKind::Invalid, "submodules act on different sides");
}
}  // namespace

Submodule Submodule::intersect(const Submodule& other) const {
  require_compatible(*this, other);
  Submodule out(alg_, n_, side_);
  out.basis_ =
      fq::rref(alg_->field(),
               fq::subspace_intersect(alg_->field(), basis_.m, other.basis_.m));
  return out;
}

Submodule Submodule::sum(const Submodule& other) const {
  require_compatible(*this, other);
  Submodule out(alg_, n_, side_);
  out.basis_ = fq::rref(alg_->field(), fq::vstack(basis_.m, other.basis_.m));
  return out;
}

Submodule Submodule::times_radical() const {
  const auto& J = alg_->jacobson_radical();
  std::vector<RingVector> gens;
  for (int i = 0; i < basis_.m.rows; ++i) {
    RingVector m = unflatten(std::vector<uint32_t>(
        basis_.m.a.begin() + static_cast<size_t>(i) * basis_.m.cols,
        basis_.m.a.begin() + static_cast<size_t>(i + 1) * basis_.m.cols));
    for (int r = 0; r < J.basis.rows; ++r) {
      RingElem j(J.basis.a.begin() + static_cast<size_t>(r) * J.basis.cols,
                 J.basis.a.begin() + static_cast<size_t>(r + 1) * J.basis.cols);
      gens.push_back(act(*alg_, m, j, side_));
    }
  }
  if (gens.empty()) return Submodule::zero(alg_, n_, side_);
  return from_generators(alg_, n_, gens, side_);
}

std::vector<RingVector> Submodule::minimal_generators() const {
  if (!alg_->is_local())
    fail(ErrorKind::Unsupported,
         "minimal generating sets require a local base ring");
  Submodule running = times_radical();
  std::vector<RingVector> picked;
  for (int i = 0; i < basis_.m.rows; ++i) {
    std::vector<uint32_t> row(
        basis_.m.a.begin() + static_cast<size_t>(i) * basis_.m.cols,
        basis_.m.a.begin() + static_cast<size_t>(i + 1) * basis_.m.cols);
    if (running.contains_flat(row)) continue;
    RingVector g = unflatten(row);
    picked.push_back(g);
    running = running.sum(cyclic(alg_, g, side_));
  }
  return picked;
}

std::pair<bool, int> Submodule::is_free() const {
  auto gens = minimal_generators();  // enforces the local precondition
  int k = static_cast<int>(gens.size());
  return {dim() == k * alg_->dim(), k};
}

fq::Mat Submodule::pi_image() const {
  if (!alg_->residue_map_available())
    fail(ErrorKind::Unsupported,
         "residue image requires a local ring with prime residue field");
  fq::Mat rows(basis_.m.rows, n_);
  for (int i = 0; i < basis_.m.rows; ++i) {
    for (int j = 0; j < n_; ++j) {
      RingElem c(basis_.m.a.begin() + (static_cast<size_t>(i) * n_ + j) * alg_->dim(),
                 basis_.m.a.begin() + (static_cast<size_t>(i) * n_ + j + 1) * alg_->dim());
      rows.at(i, j) = alg_->residue(c);
    }
  }
  return fq::rref(alg_->field(), rows).m;
}

RingVector Submodule::element_at(uint64_t idx) const {
  const fq::Field& F = alg_->field();
  std::vector<uint32_t> row(static_cast<size_t>(basis_.m.cols), 0);
  for (int i = basis_.m.rows - 1; i >= 0; --i) {
    auto c = static_cast<uint32_t>(idx % F.q());
    idx /= F.q();
    if (c == 0) continue;
    for (int j = 0; j < basis_.m.cols; ++j)
      row[static_cast<size_t>(j)] =
          F.add(row[static_cast<size_t>(j)], F.mul(c, basis_.m.at(i, j)));
  }
  return unflatten(row);
}

uint64_t Submodule::element_count_or_cap(uint64_t cap) const {
  uint64_t total = 1;
  for (int i = 0; i < dim(); ++i) {
    if (total > cap / alg_->field().q()) return cap + 1;
    total *= alg_->field().q();
  }
  return total;
}

PredicateResult Submodule::is_essential(const Budget& budget) const {
  PredicateResult res;
  if (is_full()) {
    res.verdict = Tri::Yes;
    res.note = "full module";
    return res;
  }
  auto total = vector_space_size(*alg_, n_);
  auto scan_one = [&](uint64_t idx) {
    RingVector x = vector_at(*alg_, n_, idx);
    return intersect(cyclic(alg_, x, side_)).is_zero();
  };
  if (total && *total <= budget.scan_cap) {
    auto hit =
        par::parallel_find_first(*total - 1, budget.threads,
                                 [&](uint64_t i) { return scan_one(i + 1); });
    if (hit) {
      res.verdict = Tri::No;
      res.witness = vector_at(*alg_, n_, *hit + 1);
    } else {
      res.verdict = Tri::Yes;
    }
    return res;
  }
  if (!budget.sampling) {
    res.verdict = Tri::BudgetExceeded;
    res.note = "vector scan exceeds the budget; enable sampling to proceed";
    return res;
  }
  std::mt19937_64 rng(budget.seed);
  uint64_t hi = total ? *total - 1 : UINT64_MAX;
  std::uniform_int_distribution<uint64_t> dist(1, hi);
  res.sampled = true;
  for (uint64_t s = 0; s < budget.sample_count; ++s) {
    uint64_t idx = dist(rng);
    if (scan_one(idx)) {
      res.verdict = Tri::No;
      res.witness = vector_at(*alg_, n_, idx);
      return res;
    }
  }
  res.verdict = Tri::Yes;
  res.note = "sampled scan only; no counterexample found";
  return res;
}

PredicateResult Submodule::is_complement_of(const Submodule& other) const {
  require_compatible(*this, other);
  PredicateResult res;
  Submodule meet = intersect(other);
  bool disjoint = meet.is_zero();
  bool covering = sum(other).is_full();
  if (disjoint && covering) {
    res.verdict = Tri::Yes;
    return res;
  }
  res.verdict = Tri::No;
  if (!disjoint) {
    std::vector<uint32_t> row(meet.basis_.m.a.begin(),
                              meet.basis_.m.a.begin() + meet.basis_.m.cols);
    res.witness = unflatten(row);
    res.note = covering ? "intersection is nonzero"
                        : "intersection is nonzero and the sum is proper";
  } else {
    res.note = "the sum does not reach the full module";
  }
  return res;
}

PredicateResult Submodule::is_maximal_disjoint_from(const Submodule& other,
                                                    const Budget& budget) const {
  require_compatible(*this, other);
  PredicateResult res;
  Submodule meet = intersect(other);
  if (!meet.is_zero()) {
    res.verdict = Tri::No;
    std::vector<uint32_t> row(meet.basis_.m.a.begin(),
                              meet.basis_.m.a.begin() + meet.basis_.m.cols);
    res.witness = unflatten(row);
    res.note = "not disjoint";
    return res;
  }
  auto total = vector_space_size(*alg_, n_);
  // x witnesses non-maximality when x lies outside M yet M + xR still
  // misses `other`.
  auto extends = [&](uint64_t idx) {
    RingVector x = vector_at(*alg_, n_, idx);
    if (contains(x)) return false;
    return other.intersect(sum(cyclic(alg_, x, side_))).is_zero();
  };
  if (total && *total <= budget.scan_cap) {
    auto hit = par::parallel_find_first(
        *total - 1, budget.threads, [&](uint64_t i) { return extends(i + 1); });
    if (hit) {
      res.verdict = Tri::No;
      res.witness = vector_at(*alg_, n_, *hit + 1);
      res.note = "a larger disjoint submodule exists";
    } else {
      res.verdict = Tri::Yes;
    }
    return res;
  }
  if (!budget.sampling) {
    res.verdict = Tri::BudgetExceeded;
    res.note = "vector scan exceeds the budget; enable sampling to proceed";
    return res;
  }
  std::mt19937_64 rng(budget.seed);
  uint64_t hi = total ? *total - 1 : UINT64_MAX;
  std::uniform_int_distribution<uint64_t> dist(1, hi);
  res.sampled = true;
  for (uint64_t s = 0; s < budget.sample_count; ++s) {
    uint64_t idx = dist(rng);
    if (extends(idx)) {
      res.verdict = Tri::No;
      res.witness = vector_at(*alg_, n_, idx);
      res.note = "a larger disjoint submodule exists";
      return res;
    }
  }
  res.verdict = Tri::Yes;
  res.note = "sampled scan only; no counterexample found";
  return res;
}

PredicateResult Submodule::is_closed(const Budget& budget) const {
  PredicateResult res;
  if (is_full()) {
    res.verdict = Tri::Yes;
    res.note = "full module";
    return res;
  }
  auto total = vector_space_size(*alg_, n_);
  // x violates closedness when x lies outside M yet M is essential in M + xR.
  auto violation = [&](uint64_t idx) {
    RingVector x = vector_at(*alg_, n_, idx);
    if (contains(x)) return false;
    Submodule ext = sum(cyclic(alg_, x, side_));
    uint64_t count = ext.element_count_or_cap(budget.scan_cap);
    for (uint64_t k = 1; k < count; ++k) {
      RingVector y = ext.element_at(k);
      if (intersect(cyclic(alg_, y, side_)).is_zero()) return false;
    }
    return true;
  };
  if (total && *total <= budget.scan_cap) {
    auto hit = par::parallel_find_first(
        *total - 1, budget.threads, [&](uint64_t i) { return violation(i + 1); });
    if (hit) {
      res.verdict = Tri::No;
      res.witness = vector_at(*alg_, n_, *hit + 1);
    } else {
      res.verdict = Tri::Yes;
    }
    return res;
  }
  if (!budget.sampling) {
    res.verdict = Tri::BudgetExceeded;
    res.note = "vector scan exceeds the budget; enable sampling to proceed";
    return res;
  }
  std::mt19937_64 rng(budget.seed);
  uint64_t hi = total ? *total - 1 : UINT64_MAX;
  std::uniform_int_distribution<uint64_t> dist(1, hi);
  res.sampled = true;
  for (uint64_t s = 0; s < budget.sample_count; ++s) {
    uint64_t idx = dist(rng);
    if (violation(idx)) {
      res.verdict = Tri::No;
      res.witness = vector_at(*alg_, n_, idx);
      return res;
    }
  }
  res.verdict = Tri::Yes;
  res.note = "sampled scan only; no counterexample found";
  return res;
}

namespace {

struct SummandSearch {
  const Submodule& m;
  const std::vector<std::pair<int, uint64_t>>& candidates;  // (dim xR, index)
  int target;
  uint64_t nodes = 0;
  uint64_t node_cap;
  bool budget_hit = false;

  std::optional<Submodule> dfs(const Submodule& partial, size_t start) {
    if (partial.dim() == target) return partial;
    for (size_t pos = start; pos < candidates.size(); ++pos) {
      if (++nodes > node_cap) {
        budget_hit = true;
        return std::nullopt;
      }
      RingVector x =
          vector_at(*m.algebra(), m.length(), candidates[pos].second);
      // Any x inside M + partial either adds nothing or breaks disjointness.
      if (m.sum(partial).contains(x)) continue;
      Submodule next = partial.sum(
          Submodule::cyclic(m.algebra(), x, m.side()));
      if (next.dim() > target) continue;
      if (!m.intersect(next).is_zero()) continue;
      auto found = dfs(next, pos + 1);
      if (found || budget_hit) return found;
    }
    return std::nullopt;
  }
};

}  // namespace

std::pair<PredicateResult, std::optional<Submodule>> Submodule::direct_summand(
    const Budget& budget) const {
  PredicateResult res;
  if (is_full()) {
    res.verdict = Tri::Yes;
    res.note = "complement is the zero module";
    return {res, Submodule::zero(alg_, n_, side_)};
  }
  if (is_zero()) {
    res.verdict = Tri::Yes;
    res.note = "complement is the full module";
    return {res, Submodule::full(alg_, n_, side_)};
  }
  auto total = vector_space_size(*alg_, n_);
  if (!total || *total > budget.scan_cap) {
    res.verdict = Tri::BudgetExceeded;
    res.note = "candidate scan exceeds the budget";
    return {res, std::nullopt};
  }
  std::vector<std::pair<int, uint64_t>> candidates;
  candidates.reserve(static_cast<size_t>(*total - 1));
  for (uint64_t idx = 1; idx < *total; ++idx) {
    RingVector x = vector_at(*alg_, n_, idx);
    if (contains(x)) continue;  // cannot take part in a disjoint complement
    candidates.emplace_back(cyclic(alg_, x, side_).dim(), idx);
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  SummandSearch search{*this, candidates, n_ * alg_->dim() - dim(), 0,
                       budget.scan_cap, false};
  auto found = search.dfs(Submodule::zero(alg_, n_, side_), 0);
  if (search.budget_hit) {
    res.verdict = Tri::BudgetExceeded;
    res.note = "backtracking search exceeded the budget";
    return {res, std::nullopt};
  }
  if (found) {
    res.verdict = Tri::Yes;
    return {res, found};
  }
  res.verdict = Tri::No;
  res.note = "no complement among all cyclic extensions";
  return {res, std::nullopt};
}

}  // namespace ringlcp::rmod
