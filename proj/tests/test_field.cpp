#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "field.hpp"

using namespace ringlcp;
using namespace ringlcp::fq;

namespace {

Mat from_rows(std::vector<std::vector<uint32_t>> rows) {
  Mat M(static_cast<int>(rows.size()),
        rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (int i = 0; i < M.rows; ++i)
    for (int j = 0; j < M.cols; ++j) M.at(i, j) = rows[i][j];
  return M;
}

}  // namespace

TEST_CASE("field construction and arithmetic") {
  Field F3 = Field::make(3);
  CHECK(F3.q() == 3);
  CHECK(F3.add(2, 2) == 1);
  CHECK(F3.mul(2, 2) == 1);
  CHECK(F3.inv(2) == 2);
  CHECK(F3.neg(1) == 2);
  CHECK(F3.from_int(-1) == 2);

  CHECK_THROWS_AS(Field::make(4), Error);
  CHECK_THROWS_AS(Field::make(1), Error);

  // Extension fields: exhaustive axioms at tiny q.
  for (auto [p, m] : {std::pair<uint32_t, uint32_t>{2, 2}, {3, 2}, {2, 3}}) {
    Field F = Field::make(p, m);
    uint32_t q = F.q();
    for (uint32_t a = 0; a < q; ++a) {
      CHECK(F.add(a, 0) == a);
      CHECK(F.mul(a, 1) == a);
      if (a) CHECK(F.mul(a, F.inv(a)) == 1);
      for (uint32_t b = 0; b < q; ++b) {
        CHECK(F.add(a, b) == F.add(b, a));
        CHECK(F.mul(a, b) == F.mul(b, a));
        for (uint32_t c = 0; c < q; ++c) {
          CHECK(F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c));
          CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
        }
      }
    }
    // Multiplicative group has order q-1.
    uint32_t x = 2 % q;
    if (x) CHECK(F.pow(x, q - 1) == 1);
  }

  // A reducible modulus is rejected; x^2+1 is reducible over F_2.
  CHECK_THROWS_AS(Field::make(2, 2, {1, 0, 1}), Error);
  // x^2+x+1 is the F_4 modulus found by the lexicographic search.
  Field F4 = Field::make(2, 2);
  CHECK(F4.modulus() == std::vector<uint32_t>{1, 1, 1});
}

TEST_CASE("rref rank and pivots") {
  Field F3 = Field::make(3);

  Rref z = rref(F3, Mat(2, 2));
  CHECK(z.rank == 0);
  CHECK(z.pivots.empty());

  Rref id = rref(F3, identity(3));
  CHECK(id.rank == 3);
  CHECK(id.pivots == std::vector<int>{0, 1, 2});

  // Stacked generator matrix shadow over F_3: full rank.
  Rref s = rref(F3, from_rows({{1, 2, 0}, {0, 1, 2}, {1, 2, 1}}));
  CHECK(s.rank == 3);

  // Idempotence on pseudo-random matrices.
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    Mat M(3 + static_cast<int>(rng() % 3), 4 + static_cast<int>(rng() % 3));
    for (auto& e : M.a) e = static_cast<uint32_t>(rng() % 3);
    Rref r1 = rref(F3, M);
    Rref r2 = rref(F3, r1.m);
    CHECK(r1.m == r2.m);
    CHECK(r1.rank == r2.rank);
  }
}

TEST_CASE("kernel") {
  Field F2 = Field::make(2);
  Field F3 = Field::make(3);

  CHECK(kernel(F2, identity(2)).rows == 0);

  Mat k = kernel(F2, from_rows({{1, 1}}));
  CHECK(k == from_rows({{1, 1}}));

  Mat M = from_rows({{1, 2, 0}, {0, 1, 2}});
  Mat K = kernel(F3, M);
  REQUIRE(K.rows == 1);
  // Multiply back: M v^T = 0.
  for (int i = 0; i < M.rows; ++i) {
    uint32_t acc = 0;
    for (int j = 0; j < M.cols; ++j)
      acc = F3.add(acc, F3.mul(M.at(i, j), K.at(0, j)));
    CHECK(acc == 0);
  }
  // The kernel is spanned by (1,1,1).
  CHECK(rref(F3, K).m == from_rows({{1, 1, 1}}));

  // Rank-nullity on pseudo-random matrices.
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    Mat R(2 + static_cast<int>(rng() % 4), 3 + static_cast<int>(rng() % 4));
    for (auto& e : R.a) e = static_cast<uint32_t>(rng() % 3);
    CHECK(rref(F3, R).rank + kernel(F3, R).rows == R.cols);
  }
}

TEST_CASE("subspace intersection") {
  Field F3 = Field::make(3);

  Mat I2 = identity(2);
  CHECK(subspace_intersect(F3, I2, I2) == rref(F3, I2).m);

  Mat A = from_rows({{1, 0}});
  Mat B = from_rows({{0, 1}});
  CHECK(subspace_intersect(F3, A, B).rows == 0);

  // Scalar shadow of the two length-4 codes: intersection contains (1,1,1,1).
  Mat C = from_rows({{1, 0, 1, 0}, {0, 1, 0, 1}});
  Mat D = from_rows({{1, 1, 1, 1}, {0, 1, 1, 1}});
  Mat I = subspace_intersect(F3, C, D);
  REQUIRE(I.rows >= 1);
  CHECK(in_rowspace(F3, rref(F3, I), {1, 1, 1, 1}));

  // Dimension law over every subspace pair of F_2^3.
  Field F2 = Field::make(2);
  std::vector<Mat> subspaces;
  for (uint32_t mask = 0; mask < 128; ++mask) {
    Mat gens(0, 3);
    for (int v = 1; v < 8; ++v) {
      if (!(mask >> (v - 1) & 1)) continue;
      Mat row(1, 3);
      row.at(0, 0) = (v >> 2) & 1;
      row.at(0, 1) = (v >> 1) & 1;
      row.at(0, 2) = v & 1;
      gens = vstack(gens, row);
    }
    Mat canon = rref(F2, gens).m;
    bool seen = false;
    for (const auto& s : subspaces) seen = seen || s == canon;
    if (!seen) subspaces.push_back(canon);
  }
  CHECK(subspaces.size() == 16);  // subspace count of F_2^3
  for (const auto& X : subspaces)
    for (const auto& Y : subspaces) {
      int sum = rref(F2, vstack(X, Y)).rank;
      int meet = subspace_intersect(F2, X, Y).rows;
      CHECK(X.rows + Y.rows == sum + meet);
      // Intersection is contained in both operands.
      Mat I2m = subspace_intersect(F2, X, Y);
      for (int r = 0; r < I2m.rows; ++r) {
        std::vector<uint32_t> v(I2m.a.begin() + r * 3,
                                I2m.a.begin() + (r + 1) * 3);
        CHECK(in_rowspace(F2, rref(F2, X), v));
        CHECK(in_rowspace(F2, rref(F2, Y), v));
      }
    }
}

TEST_CASE("invertibility, determinant, solve") {
  Field F2 = Field::make(2);
  Field F3 = Field::make(3);
  Field F5 = Field::make(5);

  CHECK(is_invertible(F3, identity(3)));
  CHECK_FALSE(is_invertible(F2, from_rows({{1, 1}, {1, 1}})));

  // Stacked 4x4 scalar matrix: singular over F_3 (det -3), regular mod 2, 5.
  std::vector<std::vector<uint32_t>> stacked = {
      {1, 0, 1, 1}, {0, 1, 1, 1}, {1, 1, 1, 0}, {1, 1, 0, 1}};
  auto reduce_rows = [&](const Field& F) {
    auto rows = stacked;
    for (auto& r : rows)
      for (auto& e : r) e %= F.p();
    return from_rows(rows);
  };
  CHECK_FALSE(is_invertible(F3, reduce_rows(F3)));
  CHECK(determinant(F3, reduce_rows(F3)) == 0);
  CHECK(is_invertible(F2, reduce_rows(F2)));
  CHECK(is_invertible(F5, reduce_rows(F5)));
  CHECK(determinant(F5, reduce_rows(F5)) == 2);  // -3 mod 5

  // det of the 3x3 stack from the length-3 example is 1 mod 3.
  CHECK(determinant(F3, from_rows({{1, 2, 0}, {0, 1, 2}, {1, 2, 1}})) == 1);

  CHECK_THROWS_AS(is_invertible(F3, Mat(2, 3)), Error);

  // solve: consistent and inconsistent systems; returned x satisfies Mx=b.
  Mat M = from_rows({{1, 2, 0}, {0, 1, 2}});
  auto x = solve(F3, M, {1, 2});
  REQUIRE(x.has_value());
  for (int i = 0; i < M.rows; ++i) {
    uint32_t acc = 0;
    for (int j = 0; j < M.cols; ++j)
      acc = F3.add(acc, F3.mul(M.at(i, j), (*x)[j]));
    CHECK(acc == (i == 0 ? 1u : 2u));
  }
  Mat bad = from_rows({{1, 1}, {1, 1}});
  CHECK_FALSE(solve(F2, bad, {0, 1}).has_value());

  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    Mat R(3, 4);
    for (auto& e : R.a) e = static_cast<uint32_t>(rng() % 5);
    std::vector<uint32_t> b{static_cast<uint32_t>(rng() % 5),
                            static_cast<uint32_t>(rng() % 5),
                            static_cast<uint32_t>(rng() % 5)};
    auto sol = solve(F5, R, b);
    if (!sol) continue;
    for (int i = 0; i < R.rows; ++i) {
      uint32_t acc = 0;
      for (int j = 0; j < R.cols; ++j)
        acc = F5.add(acc, F5.mul(R.at(i, j), (*sol)[j]));
      CHECK(acc == b[i]);
    }
  }
}
