#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "../src/equiv.hpp"

using namespace ringlcp;
using alg::Algebra;
using alg::AlgebraPtr;
using alg::RingElem;
using codes::LinearCode;
using equiv::EquivalenceResult;
using equiv::EquivKind;
using rmod::Budget;
using rmod::RingVector;
using rmod::Side;
using rmod::Submodule;

namespace {

RingVector vec(const AlgebraPtr& a, const std::vector<std::string>& lits) {
  RingVector v;
  for (const auto& s : lits) v.push_back(a->parse_elem(s));
  return v;
}

Submodule sub(const AlgebraPtr& a,
              const std::vector<std::vector<std::string>>& rows,
              Side side = Side::Right) {
  std::vector<RingVector> rv;
  for (const auto& r : rows) rv.push_back(vec(a, r));
  return Submodule::from_generators(a, static_cast<int>(rows[0].size()), rv,
                                    side);
}

LinearCode code(const AlgebraPtr& a,
                const std::vector<std::vector<std::string>>& rows) {
  std::vector<RingVector> rv;
  for (const auto& r : rows) rv.push_back(vec(a, r));
  return LinearCode::from_generators(a, static_cast<int>(rows[0].size()), rv);
}

Submodule random_module(const AlgebraPtr& a, int n, int k,
                        std::mt19937_64& rng, Side side = Side::Right) {
  std::vector<RingVector> rows;
  for (int i = 0; i < k; ++i) {
    RingVector v;
    for (int j = 0; j < n; ++j)
      v.push_back(a->elem_from_index(rng() % a->size()));
    rows.push_back(std::move(v));
  }
  return Submodule::from_generators(a, n, rows, side);
}

// Independent re-application of a certificate: every basis tuple of the
// source must land in the target, dimensions must agree, and the weight
// distributions must coincide.
void check_sound(const Submodule& a, const Submodule& b,
                 const EquivalenceResult& r) {
  REQUIRE(r.found());
  const Algebra& R = *a.algebra();
  int n = a.length(), d = R.dim();
  REQUIRE(static_cast<int>(r.permutation.size()) == n);
  REQUIRE(static_cast<int>(r.scalars.size()) == n);
  CHECK(a.dim() == b.dim());
  CHECK(r.checked_basis_size == a.dim());
  for (const auto& s : r.scalars) CHECK(R.is_unit(s));
  const fq::Mat& B = a.flat_basis();
  for (int i = 0; i < B.rows; ++i) {
    std::vector<uint32_t> image(static_cast<size_t>(n) * d, 0);
    for (int j = 0; j < n; ++j) {
      RingElem x(B.a.begin() + static_cast<size_t>(i) * B.cols +
                     static_cast<size_t>(r.permutation[j]) * d,
                 B.a.begin() + static_cast<size_t>(i) * B.cols +
                     static_cast<size_t>(r.permutation[j] + 1) * d);
      RingElem y = r.scaling == Side::Right ? R.mul(x, r.scalars[j])
                                            : R.mul(r.scalars[j], x);
      std::copy(y.begin(), y.end(), image.begin() + static_cast<size_t>(j) * d);
    }
    CHECK(b.contains_flat(image));
  }
  Budget budget;
  CHECK(codes::weight_distribution_of(a, budget) ==
        codes::weight_distribution_of(b, budget));
}

}  // namespace

TEST_CASE("same_tuple_set compares raw tuples and ignores the side") {
  auto u3 = Algebra::preset("ut2(3)");
  auto C = sub(u3, {{"1", "2", "0"}, {"0", "1", "2"}});
  CHECK(equiv::same_tuple_set(C, C));

  // A left and a right module carrying the same tuples.
  CHECK(equiv::same_tuple_set(Submodule::full(u3, 2, Side::Right),
                              Submodule::full(u3, 2, Side::Left)));
  auto uR = Submodule::cyclic(u3, vec(u3, {"u"}), Side::Right);
  auto uL = Submodule::cyclic(u3, vec(u3, {"u"}), Side::Left);
  CHECK(equiv::same_tuple_set(uR, uL));

  // The zero-idempotent split pairs the zero right code with the full left
  // code; its annihilator is again the full space.
  auto sz = codes::idempotent_codes(codes::RingMatrix::make(u3, 2, 2));
  CHECK(equiv::same_tuple_set(sz.right_code.dual(), sz.left_code));

  // The printed projection of the ut2(3) worked example: the dual computed
  // as an annihilator kernel equals the (1 - e^T)-row module.
  auto e = codes::RingMatrix::from_rows(
      u3, 3, {vec(u3, {"1", "0", "2"}), vec(u3, {"0", "1", "2"}),
              vec(u3, {"0", "0", "0"})});
  auto split = codes::idempotent_codes(e);
  CHECK(equiv::same_tuple_set(split.right_code.dual(), split.left_code));
  CHECK_FALSE(equiv::same_tuple_set(split.right_code.module(), split.left_code));

  CHECK_THROWS_AS(equiv::same_tuple_set(C, Submodule::full(u3, 2, Side::Right)),
                  Error);
  auto other = Algebra::preset("ut2(3)");
  CHECK_THROWS_AS(
      equiv::same_tuple_set(C, Submodule::full(other, 2, Side::Right)), Error);
}

TEST_CASE("permutation search finds the first certificate in lex order") {
  Budget budget;
  auto u3 = Algebra::preset("ut2(3)");
  auto C = sub(u3, {{"1", "2", "0"}, {"0", "1", "2"}});
  auto self = equiv::permutation_equivalent(C, C, budget);
  CHECK(self.kind == EquivKind::Permutation);
  CHECK(self.permutation == std::vector<int>{0, 1, 2});
  for (const auto& s : self.scalars) CHECK(s == u3->unity());
  check_sound(C, C, self);

  auto A = sub(u3, {{"1", "0"}});
  auto B = sub(u3, {{"0", "1"}});
  auto swp = equiv::permutation_equivalent(A, B, budget);
  CHECK(swp.kind == EquivKind::Permutation);
  CHECK(swp.permutation == std::vector<int>{1, 0});
  check_sound(A, B, swp);

  // Three distinguishable coordinates force the unique rotation.
  auto b2 = Algebra::preset("blockpair(2)");
  auto P = sub(b2, {{"1", "e1", "n1"}});
  auto Q = sub(b2, {{"e1", "n1", "1"}});
  auto rot = equiv::permutation_equivalent(P, Q, budget);
  CHECK(rot.kind == EquivKind::Permutation);
  CHECK(rot.permutation == std::vector<int>{1, 2, 0});
  check_sound(P, Q, rot);

  // A non-commutative ring: permutation maps never multiply, so sides are
  // irrelevant.
  auto m2 = Algebra::preset("mat2(2)");
  auto MA = sub(m2, {{"1", "E11"}});
  auto MB = sub(m2, {{"E11", "1"}});
  auto mswap = equiv::permutation_equivalent(MA, MB, budget);
  CHECK(mswap.kind == EquivKind::Permutation);
  CHECK(mswap.permutation == std::vector<int>{1, 0});
  check_sound(MA, MB, mswap);

  // Different weight distributions are rejected before any search.
  auto u2 = Algebra::preset("ut2(2)");
  auto W1 = sub(u2, {{"1", "0"}});
  auto W2 = sub(u2, {{"1", "1"}});
  CHECK(equiv::permutation_equivalent(W1, W2, budget).kind ==
        EquivKind::NoneWithinBudget);

  auto f2 = Algebra::preset("field(2)");
  auto big = Submodule::full(f2, 9, Side::Right);
  CHECK_THROWS_AS(equiv::permutation_equivalent(big, big, budget), Error);
}

TEST_CASE("monomial search recovers a constructed unit scaling") {
  Budget budget;
  auto u3 = Algebra::preset("ut2(3)");
  auto A = sub(u3, {{"1", "1"}});
  auto B = sub(u3, {{"1", "1+u"}});

  // Neither a set match nor a plain permutation relates the two.
  CHECK_FALSE(equiv::same_tuple_set(A, B));
  CHECK(equiv::permutation_equivalent(A, B, budget).kind ==
        EquivKind::NoneWithinBudget);

  auto res = equiv::monomial_equivalent(A, B, budget);
  CHECK(res.kind == EquivKind::Monomial);
  CHECK(res.permutation == std::vector<int>{0, 1});
  CHECK(res.scaling == Side::Right);
  // Every solution satisfies s1 = s0 * (1+u); the constructed scalar is
  // recovered up to that relation.
  CHECK(res.scalars[1] == u3->mul(res.scalars[0], u3->parse_elem("1+u")));
  check_sound(A, B, res);

  // Identity instance: the all-unity scaling is tried first.
  auto self = equiv::monomial_equivalent(A, A, budget);
  CHECK(self.kind == EquivKind::Monomial);
  CHECK(self.permutation == std::vector<int>{0, 1});
  for (const auto& s : self.scalars) CHECK(s == u3->unity());

  // Left modules scale on the left.
  auto AL = sub(u3, {{"1", "1"}}, Side::Left);
  auto BL = sub(u3, {{"1", "1+u"}}, Side::Left);
  auto left = equiv::monomial_equivalent(AL, BL, budget);
  CHECK(left.kind == EquivKind::Monomial);
  CHECK(left.scaling == Side::Left);
  check_sound(AL, BL, left);

  // Weight-distribution rejection.
  auto u2 = Algebra::preset("ut2(2)");
  CHECK(equiv::monomial_equivalent(sub(u2, {{"1", "0"}}), sub(u2, {{"1", "1"}}),
                                   budget)
            .kind == EquivKind::NoneWithinBudget);

  // Exhausted per-permutation candidate budget reports none-within-budget.
  Budget tiny = budget;
  tiny.scan_cap = 0;
  CHECK(equiv::monomial_equivalent(A, B, tiny).kind ==
        EquivKind::NoneWithinBudget);

  auto f2 = Algebra::preset("field(2)");
  auto big = Submodule::full(f2, 7, Side::Right);
  CHECK_THROWS_AS(equiv::monomial_equivalent(big, big, budget), Error);
}

TEST_CASE("the driver reports the strongest certificate") {
  Budget budget;
  auto u3 = Algebra::preset("ut2(3)");

  auto C = sub(u3, {{"1", "2", "0"}, {"0", "1", "2"}});
  auto se = equiv::equivalent(C, C, budget);
  CHECK(se.kind == EquivKind::SetEqual);
  CHECK(se.permutation == std::vector<int>{0, 1, 2});
  check_sound(C, C, se);

  auto A = sub(u3, {{"1", "0"}});
  auto B = sub(u3, {{"0", "1"}});
  CHECK(equiv::equivalent(A, B, budget).kind == EquivKind::Permutation);

  auto S = sub(u3, {{"1", "1"}});
  auto T = sub(u3, {{"1", "1+u"}});
  CHECK(equiv::equivalent(S, T, budget).kind == EquivKind::Monomial);

  CHECK(equiv::equivalent(S, Submodule::zero(u3, 2, Side::Right), budget)
            .kind == EquivKind::NoneWithinBudget);
}

TEST_CASE("worked-example certificate: the ut2(3) dual pair") {
  Budget budget;
  auto u3 = Algebra::preset("ut2(3)");
  auto C = code(u3, {{"1", "2", "0"}, {"0", "1", "2"}});
  auto D = code(u3, {{"1", "2", "1"}});

  // The dual of C is carried onto D by scaling alone; no permutation works.
  auto res = equiv::equivalent(C.dual(), D.module(), budget);
  CHECK(res.kind == EquivKind::Monomial);
  CHECK(res.permutation == std::vector<int>{0, 1, 2});
  REQUIRE(res.scalars.size() == 3);
  CHECK(res.scalars[0] == u3->parse_elem("1"));
  CHECK(res.scalars[1] == u3->parse_elem("2"));
  CHECK(res.scalars[2] == u3->parse_elem("1"));
  check_sound(C.dual(), D.module(), res);
  CHECK(equiv::certificate_json(*u3, res) ==
        R"({"kind":"monomial","permutation":[0,1,2],"scalars":["1","2","1"],)"
        R"("checked_basis_size":2})");

  // And symmetrically the dual of D is equivalent to C.
  auto back = equiv::equivalent(D.dual(), C.module(), budget);
  CHECK(back.kind == EquivKind::Monomial);
  check_sound(D.dual(), C.module(), back);

  auto none = EquivalenceResult{};
  CHECK(equiv::certificate_json(*u3, none) ==
        R"({"kind":"none-within-budget","permutation":[],"scalars":[],)"
        R"("checked_basis_size":0})");
}

TEST_CASE("reflexivity and symmetry on random instances") {
  Budget budget;
  std::mt19937_64 rng(20240815);
  for (const char* preset : {"ut2(2)", "blockpair(2)", "field(3)"}) {
    CAPTURE(preset);
    auto a = Algebra::preset(preset);
    for (int trial = 0; trial < 10; ++trial) {
      int n = 2 + static_cast<int>(rng() % 2);
      auto A = random_module(a, n, 1 + static_cast<int>(rng() % 2), rng);
      auto B = random_module(a, n, 1 + static_cast<int>(rng() % 2), rng);
      auto self = equiv::equivalent(A, A, budget);
      CHECK(self.kind == EquivKind::SetEqual);
      auto ab = equiv::equivalent(A, B, budget);
      auto ba = equiv::equivalent(B, A, budget);
      CHECK(ab.kind == ba.kind);
      if (ab.found()) {
        check_sound(A, B, ab);
        check_sound(B, A, ba);
      }
    }
  }
}
