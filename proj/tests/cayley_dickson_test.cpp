#include "support.hpp"

#include <gtest/gtest.h>

using namespace malcev;

namespace {

// Quaternion conjugate-aware oracle for (va)(vb) = gamma b abar with a = i, b = j:
// j * (-i) = k, so (vi)(vj) = gamma k in the octonions.
TEST(Octonions, CayleyRulesOnBasis) {
  for (int g : {-1, 2}) {
    Algebra o = build_division_octonions(g);
    auto idx = [&](const char* s) { return *o.index_of(s); };
    Vector vivj = o.mul(unit_vector(8, idx("vi")), unit_vector(8, idx("vj")));
    EXPECT_EQ(vivj, Scalar(g) * unit_vector(8, idx("k")));
    Vector vv = o.mul(unit_vector(8, idx("v")), unit_vector(8, idx("v")));
    EXPECT_EQ(vv, Scalar(g) * unit_vector(8, idx("1")));
    // a w = w abar: i v = v(-i) = -vi
    EXPECT_EQ(o.mul(unit_vector(8, idx("i")), unit_vector(8, idx("v"))), Scalar(-1) * unit_vector(8, idx("vi")));
  }
}

TEST(Octonions, Alternative) {
  Algebra o = build_division_octonions(-1);
  for (std::size_t x = 0; x < 8; ++x)
    for (std::size_t y = 0; y < 8; ++y) {
      SVec a = SVec::basis(x), b = SVec::basis(y);
      EXPECT_TRUE(associator(o, a, a, b).is_zero());
      EXPECT_TRUE(associator(o, a, b, b).is_zero());
    }
}

TEST(Octonions, CommutatorQuotientGivesM7) {
  Algebra o = build_division_octonions(2);
  Algebra c = commutator_algebra(o);
  Quotient q = central_quotient(c, unit_vector(8, 0));
  EXPECT_EQ(q.kept, (std::vector<std::size_t>{1, 2, 3, 4, 5, 6, 7}));
  EXPECT_TRUE(oracle::same_table(q.algebra, oracle::division_m7(2)));
  // (vi)(vj) = 2 gamma k in the commutator algebra
  EXPECT_EQ(q.algebra.mul(unit_vector(7, 4), unit_vector(7, 5)), Scalar(4) * unit_vector(7, 2));
}

TEST(CayleyMatrix, SplitOctonionsAreAlternativeWithCentralUnit) {
  Algebra c = build_cayley_matrix_algebra(field_algebra());
  EXPECT_EQ(c.dim(), 8u);
  for (std::size_t x = 0; x < 8; ++x)
    for (std::size_t y = 0; y < 8; ++y) {
      EXPECT_TRUE(associator(c, SVec::basis(x), SVec::basis(x), SVec::basis(y)).is_zero());
      EXPECT_TRUE(associator(c, SVec::basis(y), SVec::basis(x), SVec::basis(x)).is_zero());
    }
  Algebra comm = commutator_algebra(c);
  Vector unit = unit_vector(8, 0);  // identity matrix
  EXPECT_EQ(c.mul(unit, unit_vector(8, 5)), unit_vector(8, 5));
  EXPECT_TRUE(is_zero(comm.mul(unit, unit_vector(8, 3))));
}

TEST(CayleyMatrix, ProductsOfOffDiagonalUnits) {
  // by hand: e2 e5 = diag(1, 0) = (e0 + e1) / 2 and e5 e2 = diag(0, 1) = (e0 - e1) / 2
  Algebra c = build_cayley_matrix_algebra(field_algebra());
  EXPECT_EQ(c.mul(unit_vector(8, 2), unit_vector(8, 5)), Scalar(1, 2) * (unit_vector(8, 0) + unit_vector(8, 1)));
  EXPECT_EQ(c.mul(unit_vector(8, 5), unit_vector(8, 2)), Scalar(1, 2) * (unit_vector(8, 0) - unit_vector(8, 1)));
  // e2 e3 = -2 e7 (cross product term), so [e2, e3] = 2 e7
  EXPECT_EQ(commutator_algebra(c).mul(unit_vector(8, 2), unit_vector(8, 3)), Scalar(2) * unit_vector(8, 7));
}

TEST(CentralQuotient, RejectsNonCentralDirection) {
  Algebra c = commutator_algebra(build_cayley_matrix_algebra(field_algebra()));
  try {
    central_quotient(c, unit_vector(8, 2));
    FAIL() << "expected NotCentral";
  } catch (const MalcevError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::not_central);
  }
}

TEST(M7OverU, QuotientMatchesTensorProduct) {
  for (const char* name : {"F", "dual", "quadratic", "truncated3", "lambda1", "lambda2", "dual-lambda1"}) {
    Algebra u = sample_coordinates(name);
    Algebra a = build_m7_over(u);
    Algebra b = tensor_with_coordinates(build_m7(), u);
    ASSERT_EQ(a.dim(), 7 * u.dim()) << name;
    EXPECT_EQ(a.parities(), b.parities()) << name;
    EXPECT_TRUE(a.same_structure(b)) << name;
  }
}

TEST(M7OverU, TensorSatisfiesSuperMalcev) {
  for (const char* name : {"dual", "lambda1", "dual-lambda1"}) {
    Algebra t = tensor_with_coordinates(build_m7(M7Variant::division(-1)), sample_coordinates(name));
    EXPECT_TRUE(verify_malcev(t).passed()) << name;
    EXPECT_FALSE(t.grading_violation()) << name;
  }
}

TEST(SampleCoordinates, TablesMatchDefinitions) {
  Algebra q = sample_coordinates("quadratic");
  EXPECT_EQ(q.mul(unit_vector(2, 1), unit_vector(2, 1)), unit_vector(2, 0));  // t^2 = 1
  Algebra d = sample_coordinates("dual");
  EXPECT_TRUE(is_zero(d.mul(unit_vector(2, 1), unit_vector(2, 1))));
  Algebra t3 = sample_coordinates("truncated3");
  EXPECT_EQ(t3.mul(unit_vector(3, 1), unit_vector(3, 1)), unit_vector(3, 2));
  Algebra l2 = sample_coordinates("lambda2");
  EXPECT_EQ(l2.parities(), (std::vector<int>{0, 1, 1, 0}));
  // th1 th2 = -th2 th1
  EXPECT_EQ(l2.mul(unit_vector(4, 1), unit_vector(4, 2)), Scalar(-1) * l2.mul(unit_vector(4, 2), unit_vector(4, 1)));
  Algebra dl = sample_coordinates("dual-lambda1");
  EXPECT_EQ(dl.parities(), (std::vector<int>{0, 0, 1, 1}));
  EXPECT_THROW(sample_coordinates("nope"), std::invalid_argument);
}

}  // namespace
