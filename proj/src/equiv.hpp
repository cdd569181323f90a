#pragma once

#include <string>
#include <vector>

#include "codes.hpp"

namespace ringlcp::equiv {

using alg::Algebra;
using alg::RingElem;
using rmod::Budget;
using rmod::RingVector;
using rmod::Side;
using rmod::Submodule;

enum class EquivKind { SetEqual, Permutation, Monomial, NoneWithinBudget };

const char* kind_name(EquivKind k);

/// A certified coordinate map between two codes viewed as raw sets of
/// n-tuples. When `found()`, image coordinate j is source coordinate
/// permutation[j] multiplied by the unit scalars[j] on the `scaling` side
/// (right: y_j = x_{permutation[j]} * scalars[j]; left: the product is
/// reversed). The map was applied to every row of an F_q-basis of the
/// source (`checked_basis_size` rows) and landed inside the target, whose
/// cardinality matches — hence the map is a bijection between the sets.
struct EquivalenceResult {
  EquivKind kind = EquivKind::NoneWithinBudget;
  std::vector<int> permutation;
  std::vector<RingElem> scalars;
  Side scaling = Side::Right;
  int checked_basis_size = 0;

  bool found() const { return kind != EquivKind::NoneWithinBudget; }
};

/// Whether the two submodules cut out the same set of n-tuples. The sides
/// may differ (a left and a right module can carry identical tuple sets);
/// the ambient ring and length must match.
bool same_tuple_set(const Submodule& a, const Submodule& b);

/// Searches coordinate permutations (n <= 8, else a Budget error) in
/// lexicographic order, pruning by global weight distribution and by
/// per-coordinate projection subspaces. Deterministic: the first certified
/// permutation in lexicographic order is returned.
EquivalenceResult permutation_equivalent(const Submodule& a,
                                         const Submodule& b,
                                         const Budget& budget);

/// Searches permutation-plus-unit-scaling maps (n <= 6, else a Budget
/// error). Scalars multiply on the right unless both inputs are left
/// modules. For each permutation (lexicographic order) the all-unity
/// scaling is tried first, then the solution space of the linear membership
/// constraints is enumerated in coefficient order, capped at
/// budget.scan_cap candidates per permutation; the first all-unit solution
/// wins. Deterministic for a fixed budget.
EquivalenceResult monomial_equivalent(const Submodule& a, const Submodule& b,
                                      const Budget& budget);

/// Strongest certificate first: exact set equality, then permutation
/// equivalence (skipped when n > 8), then monomial equivalence (skipped
/// when n > 6).
EquivalenceResult equivalent(const Submodule& a, const Submodule& b,
                             const Budget& budget);

/// Canonical certificate: {kind, permutation, scalars, checked_basis_size}
/// with scalars rendered as ring-element literals.
std::string certificate_json(const Algebra& a, const EquivalenceResult& r);

}  // namespace ringlcp::equiv
