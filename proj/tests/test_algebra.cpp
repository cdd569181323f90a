#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "algebra.hpp"

using namespace ringlcp;
using namespace ringlcp::alg;

TEST_CASE("preset construction and ring arithmetic") {
  auto ut3 = Algebra::preset("ut2(3)");
  CHECK(ut3->dim() == 2);
  CHECK(ut3->size() == 9);
  CHECK(ut3->is_commutative());

  // (1+u)(1+2u) = 1 + 3u = 1 in ut2(3).
  RingElem a = ut3->parse_elem("1+u");
  RingElem b = ut3->parse_elem("1+2u");
  CHECK(ut3->mul(a, b) == ut3->unity());

  // Unity absorbs on random elements in every preset.
  for (const char* name :
       {"field(5)", "ut2(2)", "ut2(3)", "blockpair(2)", "blockpair(3)",
        "mat2(2)", "t2(2)", "t2(3)"}) {
    auto A = Algebra::preset(name);
    for (uint64_t i = 0; i < std::min<uint64_t>(A->size(), 20); ++i) {
      RingElem x = A->elem_from_index((i * 7919) % A->size());
      CHECK(A->mul(A->unity(), x) == x);
      CHECK(A->mul(x, A->unity()) == x);
      CHECK(A->index_of(x) == (i * 7919) % A->size());
    }
  }

  // mat2 is genuinely non-commutative: E11*E12 = E12, E12*E11 = 0.
  auto m2 = Algebra::preset("mat2(2)");
  CHECK_FALSE(m2->is_commutative());
  RingElem e11 = m2->parse_elem("E11");
  RingElem e12 = m2->parse_elem("E12");
  CHECK(m2->mul(e11, e12) == e12);
  CHECK(m2->is_zero(m2->mul(e12, e11)));

  // Associativity diagnostics name the failing triple.
  {
    // e1*e1 = e2, e1*e2 = 1, e2*e1 = 0: (e1 e1) e1 = 0 but e1 (e1 e1) = 1.
    std::vector<uint32_t> sc(27, 0);
    auto set = [&](int i, int j, std::vector<uint32_t> v) {
      for (int k = 0; k < 3; ++k) sc[(i * 3 + j) * 3 + k] = v[k];
    };
    set(0, 0, {1, 0, 0});
    set(0, 1, {0, 1, 0});
    set(0, 2, {0, 0, 1});
    set(1, 0, {0, 1, 0});
    set(2, 0, {0, 0, 1});
    set(1, 1, {0, 0, 1});
    set(1, 2, {1, 0, 0});
    try {
      Algebra::make(fq::Field::make(2), 3, sc, {1, 0, 0}, "broken");
      CHECK(false);  // must not validate
    } catch (const Error& e) {
      CHECK(e.message.find("associativity") != std::string::npos);
      CHECK(e.message.find("(e1, e1, e1)") != std::string::npos);
    }
  }
  // Unity law diagnostics.
  {
    std::vector<uint32_t> sc = {1, 0, 0, 1, 0, 1, 0, 0};  // ut2 table
    try {
      Algebra::make(fq::Field::make(2), 2, sc, {0, 1}, "nounity");
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.message.find("unity law") != std::string::npos);
    }
  }

  CHECK_THROWS_AS(Algebra::preset("nosuch(3)"), Error);
  CHECK_THROWS_AS(Algebra::preset("ut2(6)"), Error);  // not a prime power
}

TEST_CASE("units and inverses") {
  auto ut3 = Algebra::preset("ut2(3)");
  CHECK_FALSE(ut3->is_unit(ut3->parse_elem("u")));
  auto inv = ut3->try_inverse(ut3->parse_elem("1+u"));
  REQUIRE(inv.has_value());
  CHECK(*inv == ut3->parse_elem("1+2u"));
  CHECK_FALSE(ut3->try_inverse(ut3->parse_elem("u")).has_value());

  auto bp = Algebra::preset("blockpair(3)");
  CHECK_FALSE(bp->is_unit(bp->parse_elem("e1")));

  // Unit count for local presets: |R| - |J|.
  for (const char* name : {"ut2(2)", "ut2(3)", "field(5)"}) {
    auto A = Algebra::preset(name);
    uint64_t units = 0;
    for (uint64_t i = 0; i < A->size(); ++i)
      if (A->is_unit(A->elem_from_index(i))) ++units;
    uint64_t jsize = 1;
    for (int r = 0; r < A->jacobson_radical().basis.rows; ++r)
      jsize *= A->field().q();
    CHECK(units == A->size() - jsize);
  }
}

TEST_CASE("jacobson radical") {
  auto ut2 = Algebra::preset("ut2(2)");
  auto ut3 = Algebra::preset("ut2(3)");
  for (auto& A : {ut2, ut3}) {
    const auto& J = A->jacobson_radical();
    REQUIRE(J.basis.rows == 1);
    CHECK(J.basis.at(0, 0) == 0);
    CHECK(J.basis.at(0, 1) == 1);  // span{u}
    CHECK(J.left_closed);
    CHECK(J.right_closed);
  }

  auto bp = Algebra::preset("blockpair(3)");
  const auto& Jb = bp->jacobson_radical();
  REQUIRE(Jb.basis.rows == 2);  // span{n1, n2}
  CHECK(Jb.basis.at(0, 1) == 1);
  CHECK(Jb.basis.at(1, 3) == 1);

  CHECK(Algebra::preset("mat2(2)")->jacobson_radical().basis.rows == 0);
  CHECK(Algebra::preset("mat2(3)")->jacobson_radical().basis.rows == 0);

  auto t2 = Algebra::preset("t2(2)");
  const auto& Jt = t2->jacobson_radical();
  REQUIRE(Jt.basis.rows == 1);  // span{E12}
  CHECK(Jt.basis.at(0, 1) == 1);

  // Agreement with the largest nilpotent two-sided ideal, by enumerating
  // nilpotent ideals in small rings (|R| <= 81).
  for (const char* name : {"ut2(2)", "ut2(3)", "blockpair(2)", "t2(2)", "mat2(2)"}) {
    auto A = Algebra::preset(name);
    int d = A->dim();
    // Enumerate all subspaces via closure of element subsets is costly;
    // instead check: every nilpotent element of a two-sided ideal inside the
    // non-unit set lies in J, and J itself is nilpotent.
    CHECK(A->nilpotency_index() >= 1);
    fq::Rref jspan = fq::rref(A->field(), A->jacobson_radical().basis);
    for (uint64_t i = 0; i < A->size(); ++i) {
      RingElem x = A->elem_from_index(i);
      // x generates a nilpotent two-sided ideal iff RxR is nilpotent; for
      // these tiny rings test the principal ideal's nilpotency directly.
      fq::Mat gens(0, d);
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
          RingElem g = A->mul(A->basis_elem(a), A->mul(x, A->basis_elem(b)));
          fq::Mat row(1, d);
          std::copy(g.begin(), g.end(), row.a.begin());
          gens = fq::vstack(gens, row);
        }
      fq::Mat ideal = fq::rref(A->field(), gens).m;
      // Nilpotency of the ideal: iterate products until stable or zero.
      fq::Mat power = ideal;
      bool nilpotent = false;
      for (int it = 0; it <= d + 1; ++it) {
        if (power.rows == 0) {
          nilpotent = true;
          break;
        }
        fq::Mat next(0, d);
        for (int r = 0; r < power.rows; ++r)
          for (int s = 0; s < ideal.rows; ++s) {
            RingElem u(power.a.begin() + static_cast<size_t>(r) * d,
                       power.a.begin() + static_cast<size_t>(r + 1) * d);
            RingElem v(ideal.a.begin() + static_cast<size_t>(s) * d,
                       ideal.a.begin() + static_cast<size_t>(s + 1) * d);
            RingElem pr = A->mul(u, v);
            fq::Mat row(1, d);
            std::copy(pr.begin(), pr.end(), row.a.begin());
            next = fq::vstack(next, row);
          }
        power = fq::rref(A->field(), next).m;
      }
      bool in_j = fq::in_rowspace(A->field(), jspan, x);
      CHECK(nilpotent == in_j);  // RxR nilpotent iff x in J (finite rings)
    }
  }
}

TEST_CASE("nilpotency index and annihilator witness") {
  CHECK(Algebra::preset("field(3)")->nilpotency_index() == 1);
  CHECK(Algebra::preset("field(5)")->nilpotency_index() == 1);
  CHECK(Algebra::preset("ut2(2)")->nilpotency_index() == 2);
  CHECK(Algebra::preset("ut2(3)")->nilpotency_index() == 2);
  CHECK(Algebra::preset("blockpair(2)")->nilpotency_index() == 2);
  CHECK(Algebra::preset("blockpair(3)")->nilpotency_index() == 2);
  CHECK(Algebra::preset("t2(3)")->nilpotency_index() == 2);

  for (const char* name : {"ut2(2)", "ut2(3)", "blockpair(2)", "blockpair(3)"}) {
    auto A = Algebra::preset(name);
    RingElem m = A->radical_annihilator_witness();
    CHECK_FALSE(A->is_zero(m));
    // alpha * m = 0 for every alpha in J, exhaustively over J's elements.
    const auto& J = A->jacobson_radical();
    uint64_t count = 1;
    for (int i = 0; i < J.basis.rows; ++i) count *= A->field().q();
    for (uint64_t idx = 0; idx < count; ++idx) {
      RingElem alpha(A->dim(), 0);
      uint64_t t = idx;
      for (int r = 0; r < J.basis.rows; ++r) {
        uint32_t c = static_cast<uint32_t>(t % A->field().q());
        t /= A->field().q();
        for (int j = 0; j < A->dim(); ++j)
          alpha[j] = A->field().add(alpha[j],
                                    A->field().mul(c, J.basis.at(r, j)));
      }
      CHECK(A->is_zero(A->mul(alpha, m)));
    }
  }
  CHECK_THROWS_AS(Algebra::preset("field(3)")->radical_annihilator_witness(),
                  Error);
}

TEST_CASE("locality and residue map") {
  CHECK(Algebra::preset("ut2(2)")->is_local());
  CHECK(Algebra::preset("ut2(3)")->is_local());
  CHECK(Algebra::preset("field(7)")->is_local());
  CHECK_FALSE(Algebra::preset("blockpair(3)")->is_local());
  CHECK_FALSE(Algebra::preset("mat2(2)")->is_local());
  CHECK_FALSE(Algebra::preset("t2(2)")->is_local());

  auto ut3 = Algebra::preset("ut2(3)");
  CHECK(ut3->residue_map_available());
  CHECK(ut3->residue(ut3->parse_elem("2+u")) == 2);
  CHECK(ut3->residue(ut3->parse_elem("u")) == 0);
  CHECK(ut3->residue(ut3->unity()) == 1);

  // pi is a ring homomorphism: additive and multiplicative, exhaustively.
  for (const char* name : {"ut2(2)", "ut2(3)"}) {
    auto A = Algebra::preset(name);
    for (uint64_t i = 0; i < A->size(); ++i)
      for (uint64_t j = 0; j < A->size(); ++j) {
        RingElem x = A->elem_from_index(i), y = A->elem_from_index(j);
        CHECK(A->residue(A->mul(x, y)) ==
              A->field().mul(A->residue(x), A->residue(y)));
        CHECK(A->residue(A->add(x, y)) ==
              A->field().add(A->residue(x), A->residue(y)));
      }
  }

  auto bp = Algebra::preset("blockpair(3)");
  CHECK_FALSE(bp->residue_map_available());
  CHECK_THROWS_AS(bp->residue(bp->unity()), Error);
}

TEST_CASE("socles and the Frobenius certificate") {
  auto ut3 = Algebra::preset("ut2(3)");
  auto cert = ut3->frobenius_certificate();
  CHECK(cert.dim_socle_right == 1);
  CHECK(cert.dim_residue == 1);
  CHECK(cert.socle_right_cyclic);
  CHECK(cert.passed);

  auto m2 = Algebra::preset("mat2(2)");
  auto cm = m2->frobenius_certificate();
  CHECK(cm.dim_socle_right == 4);  // semisimple: Soc = R
  CHECK(cm.dim_residue == 4);
  CHECK(cm.passed);

  auto bp = Algebra::preset("blockpair(2)");
  auto cb = bp->frobenius_certificate();
  CHECK(cb.dim_socle_right == 2);
  CHECK(cb.dim_residue == 2);
  CHECK(cb.socle_right_cyclic);
  CHECK(cb.passed);

  // Negative control: t2 has socle dim 2 = residue dim, but not cyclic.
  auto t2 = Algebra::preset("t2(2)");
  auto ct = t2->frobenius_certificate();
  CHECK(ct.dim_socle_right == 2);
  CHECK(ct.dim_residue == 2);
  CHECK_FALSE(ct.socle_right_cyclic);
  CHECK_FALSE(ct.passed);
  auto ct3 = Algebra::preset("t2(3)")->frobenius_certificate();
  CHECK_FALSE(ct3.passed);

  // Soc(R_R) of t2 is span{E12, E22}.
  auto sr = t2->socle_right();
  REQUIRE(sr.basis.rows == 2);
  CHECK(sr.basis.at(0, 1) == 1);
  CHECK(sr.basis.at(1, 2) == 1);
}

TEST_CASE("quotient algebra") {
  auto ut3 = Algebra::preset("ut2(3)");
  auto q = ut3->quotient_algebra(ut3->jacobson_radical());
  CHECK(q->dim() == 1);
  CHECK(q->size() == 3);

  auto bp = Algebra::preset("blockpair(3)");
  auto qb = bp->quotient_algebra(bp->jacobson_radical());
  CHECK(qb->dim() == 2);
  // Componentwise product: basis cosets are orthogonal idempotents.
  RingElem f1 = qb->basis_elem(0), f2 = qb->basis_elem(1);
  CHECK(qb->mul(f1, f1) == f1);
  CHECK(qb->mul(f2, f2) == f2);
  CHECK(qb->is_zero(qb->mul(f1, f2)));

  // R / {0} preserves dimension.
  IdealSubspace zero;
  zero.basis = fq::Mat(0, bp->dim());
  zero.left_closed = zero.right_closed = true;
  CHECK(bp->quotient_algebra(zero)->dim() == 4);

  // One-sided ideal is rejected: uR in t2 terms — E12*R row span is
  // right-closed but span{E11} is neither.
  auto t2 = Algebra::preset("t2(2)");
  IdealSubspace notideal;
  notideal.basis = fq::Mat(1, 3);
  notideal.basis.at(0, 0) = 1;  // span{E11}
  notideal.left_closed = false;
  notideal.right_closed = false;
  CHECK_THROWS_AS(t2->quotient_algebra(notideal), Error);
}

TEST_CASE("element literals") {
  auto ut3 = Algebra::preset("ut2(3)");
  CHECK(ut3->parse_elem("0") == ut3->zero());
  CHECK(ut3->parse_elem("1") == ut3->unity());
  CHECK(ut3->parse_elem("2") == ut3->scalar(2));
  CHECK(ut3->parse_elem("u") == ut3->basis_elem(1));
  CHECK(ut3->parse_elem("2u+1") == ut3->parse_elem("1+2u"));
  CHECK(ut3->parse_elem("2*u + 1") == ut3->parse_elem("1+2u"));
  CHECK(ut3->parse_elem("-1") == ut3->scalar(2));
  CHECK(ut3->parse_elem("[2,1]") == ut3->parse_elem("2+u"));

  auto bp = Algebra::preset("blockpair(3)");
  CHECK(bp->parse_elem("e1") == bp->basis_elem(0));
  CHECK(bp->parse_elem("n2") == bp->basis_elem(3));
  CHECK(bp->parse_elem("e1+e2") == bp->unity());
  CHECK(bp->parse_elem("[1,0,1,0]") == bp->unity());

  CHECK_THROWS_AS(ut3->parse_elem("w"), Error);
  CHECK_THROWS_AS(ut3->parse_elem("[1]"), Error);
  CHECK_THROWS_AS(ut3->parse_elem(""), Error);

  CHECK(ut3->format_elem(ut3->parse_elem("2+u")) == "2+u");
  CHECK(ut3->format_elem(ut3->zero()) == "0");
  CHECK(bp->format_elem(bp->parse_elem("e1+2n2")) == "e1+2n2");
}
