#include "support.hpp"

#include <gtest/gtest.h>

using namespace malcev;

namespace {

Vector vec(std::initializer_list<int> xs) {
  Vector v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

Algebra perturbed_m7(std::size_t i, std::size_t j, std::size_t k, const Scalar& c, bool keep_antisymmetry) {
  Algebra m = build_m7();
  Vector p = m.product(i, j).to_dense(7);
  p[k] = c;
  m.set_product(i, j, p);
  if (keep_antisymmetry) m.set_product(j, i, Scalar(-1) * p);
  return m;
}

}  // namespace

TEST(Scalar, ParsesIntegersAndFractions) {
  EXPECT_EQ(parse_scalar("3/4"), Scalar(3, 4));
  EXPECT_EQ(parse_scalar("-2"), Scalar(-2));
  EXPECT_EQ(to_string(parse_scalar("2/4")), "1/2");
  EXPECT_EQ(to_string(Scalar(-6, 3)), "-2");
}

TEST(Scalar, RejectsDecimalsAndJunk) {
  EXPECT_FALSE(try_parse_scalar("0.5"));
  EXPECT_FALSE(try_parse_scalar("1e3"));
  EXPECT_FALSE(try_parse_scalar(""));
  EXPECT_FALSE(try_parse_scalar("1/0"));
  EXPECT_FALSE(try_parse_scalar(" 1"));
}

TEST(LinearAlgebra, RankNullspaceInverse) {
  Matrix m = Matrix::from_rows({vec({1, 2, 3}), vec({2, 4, 6}), vec({1, 0, 1})}, 3);
  EXPECT_EQ(rank(m), 2u);
  auto ns = nullspace(m);
  ASSERT_EQ(ns.size(), 1u);
  EXPECT_TRUE(is_zero(m * ns[0]));
  EXPECT_FALSE(inverse(m));

  Matrix g = Matrix::from_rows({vec({2, 1}), vec({1, 1})}, 2);
  auto gi = inverse(g);
  ASSERT_TRUE(gi);
  EXPECT_EQ(*gi * g, Matrix::identity(2));
  // hand-computed: inverse of [[2,1],[1,1]] is [[1,-1],[-1,2]]
  EXPECT_EQ(*gi, Matrix::from_rows({vec({1, -1}), vec({-1, 2})}, 2));
}

TEST(LinearAlgebra, SparseSystemMatchesDenseNullspace) {
  SparseSystem sys(4);
  sys.add_equation({{0, 1}, {1, -1}});
  sys.add_equation({{2, 1}, {3, 1}});
  sys.add_equation({{0, 2}, {1, -2}});  // dependent
  EXPECT_EQ(sys.rank(), 2u);
  auto ns = sys.nullspace();
  ASSERT_EQ(ns.size(), 2u);
  Matrix dense = Matrix::from_rows({vec({1, -1, 0, 0}), vec({0, 0, 1, 1})}, 4);
  for (const auto& v : ns) EXPECT_TRUE(is_zero(dense * v));
}

TEST(GoldenTable, SplitMatchesReferenceTable) {
  Algebra m = build_m7();
  EXPECT_EQ(m.labels(), oracle::split_m7().labels);
  EXPECT_TRUE(oracle::same_table(m, oracle::split_m7()));
}

TEST(GoldenTable, DivisionMatchesReferenceTableForSeveralGammas) {
  for (int g : {-1, 1, 2, -3}) {
    Algebra m = build_m7(M7Variant::division(g));
    EXPECT_TRUE(oracle::same_table(m, oracle::division_m7(g))) << "gamma " << g;
  }
}

TEST(GoldenTable, HandTypedTablesAreMalcevUnderIndependentOracle) {
  EXPECT_TRUE(oracle::is_malcev(oracle::split_m7()));
  EXPECT_TRUE(oracle::is_malcev(oracle::division_m7(-1)));
  EXPECT_TRUE(oracle::is_malcev(oracle::division_m7(2)));
}

TEST(Identities, MalcevPassesOnBothVariants) {
  for (const auto& v : {M7Variant::split(), M7Variant::division(-1), M7Variant::division(2)}) {
    Report r = verify_malcev(build_m7(v));
    EXPECT_TRUE(r.passed()) << r.detail;
    EXPECT_EQ(r.cases, 2401u);
  }
}

TEST(Identities, HVarietyPassesOnM7) {
  Report r = verify_h_variety(build_m7());
  EXPECT_TRUE(r.passed()) << r.detail;
  EXPECT_EQ(r.cases, 16807u);
}

TEST(Identities, IntegerAndRationalSweepsAgree) {
  Algebra m = build_m7(M7Variant::division(Scalar(2, 3)));
  EXPECT_EQ(verify_h_variety(m, false).passed(), verify_h_variety_rational(m).passed());
  Algebra bad = perturbed_m7(1, 2, 6, 3, true);
  Report fast = verify_h_variety(bad, false), slow = verify_h_variety_rational(bad);
  EXPECT_FALSE(fast.passed());
  EXPECT_FALSE(slow.passed());
  ASSERT_TRUE(fast.witness && slow.witness);
  EXPECT_EQ(fast.witness->indices, slow.witness->indices);
}

TEST(Identities, JacobianWitnessMatchesExpansionOracle) {
  Algebra m = build_m7();
  auto t = oracle::split_m7();
  SVec j = jacobian(m, SVec::basis(1), SVec::basis(2), SVec::basis(4));
  Vector expected = oracle::jacobian(t, t.basis(1), t.basis(2), t.basis(4));
  EXPECT_EQ(j.to_dense(7), expected);
  EXPECT_EQ(expected, Scalar(-6) * unit_vector(7, 2));  // -6 e3
}

TEST(Identities, DivisionJacobianMatchesOracle) {
  Algebra m = build_m7(M7Variant::division(-1));
  auto t = oracle::division_m7(-1);
  for (std::size_t x = 0; x < 7; ++x)
    for (std::size_t y = 0; y < 7; ++y)
      for (std::size_t z = 0; z < 7; ++z)
        ASSERT_EQ(jacobian(m, SVec::basis(x), SVec::basis(y), SVec::basis(z)).to_dense(7),
                  oracle::jacobian(t, t.basis(x), t.basis(y), t.basis(z)));
  // J(i,j,v) = -12 vk
  EXPECT_EQ(oracle::jacobian(t, t.basis(0), t.basis(1), t.basis(3)), Scalar(-12) * unit_vector(7, 6));
}

TEST(Identities, AntiassociatorAndBraces) {
  Algebra m = build_m7();
  // (e2 e5) e1 + e2 (e5 e1) = e1 e1 + e2 (2 e5) = 2 e1
  EXPECT_EQ(antiassociator(m, SVec::basis(1), SVec::basis(4), SVec::basis(0)).to_dense(7),
            Scalar(2) * unit_vector(7, 0));
  Algebra d = build_m7(M7Variant::division(-1));
  EXPECT_TRUE(braces(d, SVec::basis(0), SVec::basis(1), SVec::basis(2)).is_zero());
}

TEST(Identities, AnticommutativityFailureIsWitnessed) {
  Algebra bad = perturbed_m7(1, 2, 6, 3, false);
  Report r = verify_malcev(bad);
  ASSERT_FALSE(r.passed());
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(r.witness->indices, (std::vector<std::size_t>{1, 2}));
}

TEST(Identities, PerturbationFailsWithWitnessAgreeingWithOracle) {
  Algebra bad = perturbed_m7(1, 2, 6, 3, true);
  Report r = verify_malcev(bad);
  ASSERT_FALSE(r.passed());
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(r.witness->labels, (std::vector<std::string>{"e1", "e2", "e3", "e4"}));
  EXPECT_FALSE(oracle::is_malcev(oracle::from_algebra(bad)));
  Report h = verify_h_variety(bad, false);
  ASSERT_FALSE(h.passed());
  EXPECT_EQ(h.witness->labels, (std::vector<std::string>{"e1", "e2", "e1", "e3", "e5"}));
  ASSERT_EQ(h.witness->vectors.size(), 1u);
  EXPECT_EQ(h.witness->vectors[0], Scalar(8) * unit_vector(7, 2));
}

TEST(Identities, QuadraticAndLinearizedChecksAgree) {
  EXPECT_TRUE(verify_malcev_quadratic(build_m7()).passed());
  EXPECT_FALSE(verify_malcev_quadratic(perturbed_m7(4, 5, 3, -1, true)).passed());
}

TEST(Identities, LieAlgebraSatisfiesMalcevAndH) {
  // sl2: [h,e] = 2e, [h,f] = -2f, [e,f] = h
  Algebra sl2(std::vector<std::string>{"h", "e", "f"});
  sl2.set_product(0, 1, vec({0, 2, 0}));
  sl2.set_product(1, 0, vec({0, -2, 0}));
  sl2.set_product(0, 2, vec({0, 0, -2}));
  sl2.set_product(2, 0, vec({0, 0, 2}));
  sl2.set_product(1, 2, vec({1, 0, 0}));
  sl2.set_product(2, 1, vec({-1, 0, 0}));
  EXPECT_TRUE(verify_malcev(sl2).passed());
  EXPECT_TRUE(verify_h_variety(sl2).passed());
  EXPECT_TRUE(jacobian(sl2, SVec::basis(0), SVec::basis(1), SVec::basis(2)).is_zero());
}

TEST(Structure, SimplicityOfBothVariants) {
  for (const auto& v : {M7Variant::split(), M7Variant::division(-1)}) {
    Algebra m = build_m7(v);
    for (std::size_t i = 0; i < 7; ++i) EXPECT_EQ(ideal_closure(m, {unit_vector(7, i)}).dim(), 7u);
    EXPECT_TRUE(check_simple(m).passed());
  }
}

TEST(Structure, NonSimpleTensorsAreDetected) {
  // M7 (x) F[t]/(t^2): the basis vector e1 (x) t generates the ideal M7 (x) t
  Report nil = check_simple(tensor_with_coordinates(build_m7(), sample_coordinates("dual")));
  ASSERT_FALSE(nil.passed());
  ASSERT_TRUE(nil.witness);
  EXPECT_EQ(nil.witness->labels, std::vector<std::string>{"e1*t"});

  // M7 (x) F[t]/(t^2 - 1) = M7 + M7: every basis vector generates everything, the
  // idempotent (1 + t)/2 of the centroid does not
  Algebra sum = build_m7_over(sample_coordinates("quadratic"));
  for (std::size_t i = 0; i < sum.dim(); ++i) EXPECT_EQ(ideal_closure(sum, {unit_vector(sum.dim(), i)}).dim(), 14u);
  Report r = check_simple(sum);
  EXPECT_EQ(r.status, Status::fail);
  ASSERT_TRUE(r.witness);
  ASSERT_EQ(r.witness->vectors.size(), 7u);
  EXPECT_FALSE(is_simple(sum));
}

TEST(Structure, SimplicityOverAFieldExtensionIsUndetermined) {
  // M7 (x) Q(sqrt 2) is simple over Q with a two-dimensional centroid that is a field
  Algebra ext = tensor_with_coordinates(build_m7(), build_sample_coordinates(CoordinateKind::polynomial, {2, 0}));
  EXPECT_EQ(check_simple(ext).status, Status::error);
}

TEST(Structure, GradedSimplicity) {
  // odd part of M7 (x) Lambda(theta) is a graded ideal
  EXPECT_FALSE(is_simple(tensor_with_coordinates(build_m7(), sample_coordinates("lambda1"))));
  Algebra odd = split_null_extension(build_m7(), regular_representation(build_m7(), true)).total;
  EXPECT_FALSE(is_simple(odd));
}

TEST(Structure, CentroidDimensionEqualsCoordinateDimension) {
  for (const char* name : {"F", "dual", "quadratic", "truncated3"}) {
    Algebra u = sample_coordinates(name);
    Algebra t = tensor_with_coordinates(build_m7(), u);
    auto c = centroid_basis(t);
    EXPECT_EQ(c.size(), u.dim()) << name;
    for (const auto& op : c) EXPECT_TRUE(check_centroid_member(t, op).passed());
  }
}

TEST(Structure, SupercentroidOfGrassmannTensorIsOneOne) {
  Algebra t = tensor_with_coordinates(build_m7(), sample_coordinates("lambda1"));
  auto c = centroid_basis(t);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0].parity, 0);
  EXPECT_EQ(c[1].parity, 1);
  for (const auto& op : c) EXPECT_TRUE(check_centroid_member(t, op).passed());
  EXPECT_EQ(centroid_basis(build_m7()).size(), 1u);
}

TEST(Structure, NucleusOfOctonionsIsScalars) {
  Algebra o = build_division_octonions(-1);
  auto n = nucleus(o);
  ASSERT_EQ(n.size(), 1u);
  Span s(8);
  s.add(n[0]);
  EXPECT_TRUE(s.contains(unit_vector(8, 0)));
}

TEST(Structure, CoordinateAlgebrasAreUnitalSupercommutativeAssociative) {
  for (const char* name : {"F", "dual", "quadratic", "truncated3", "lambda1", "lambda2", "dual-lambda1"}) {
    Algebra u = sample_coordinates(name);
    EXPECT_TRUE(check_coordinate_algebra(u).passed()) << name;
    auto unit = find_unit(u);
    ASSERT_TRUE(unit) << name;
    EXPECT_EQ(*unit, unit_vector(u.dim(), 0));
  }
}

TEST(Structure, GrassmannEnvelopeDimensionAndSuperAgreement) {
  Algebra super = tensor_with_coordinates(build_m7(), sample_coordinates("lambda1"));
  Algebra env = grassmann_envelope(super, 2);
  EXPECT_EQ(env.dim(), 28u);
  EXPECT_TRUE(verify_malcev(super).passed());
  EXPECT_TRUE(verify_malcev(env).passed());

  // odd-odd product e2*th . e5*th perturbed away from zero: both checks must fail
  Algebra bad = super;
  std::size_t x = *bad.index_of("e2*th"), y = *bad.index_of("e5*th");
  bad.add_product_term(x, y, *bad.index_of("e1*1"), 1);
  bad.add_product_term(y, x, *bad.index_of("e1*1"), 1);
  EXPECT_FALSE(verify_malcev(bad).passed());
  EXPECT_FALSE(verify_malcev(grassmann_envelope(bad, 2)).passed());
}
