#include "support.hpp"

#include <gtest/gtest.h>

using namespace malcev;

TEST(Module, RegularModuleIsMalcevModule) {
  for (const auto& v : {M7Variant::split(), M7Variant::division(-1)}) {
    Algebra m = build_m7(v);
    Representation reg = regular_representation(m);
    Report r = verify_module(m, reg);
    EXPECT_TRUE(r.passed()) << r.detail;
  }
}

TEST(Module, SplitExtensionTableFollowsSignRule) {
  Algebra m = build_m7();
  Representation reg = regular_representation(m);
  SplitExtension ext = split_null_extension(m, reg);
  ASSERT_EQ(ext.total.dim(), 14u);
  // v . y = rho_y(v) and y . v = -v . y on even elements
  for (std::size_t y = 0; y < 7; ++y)
    for (std::size_t v = 7; v < 14; ++v) {
      Vector vy = ext.total.mul(unit_vector(14, v), unit_vector(14, y));
      Vector yv = ext.total.mul(unit_vector(14, y), unit_vector(14, v));
      EXPECT_EQ(vy, Scalar(-1) * yv);
      EXPECT_EQ(ext.carrier_part(vy), reg.operator_of(unit_vector(7, y)) * unit_vector(7, v - 7));
    }
  // the carrier is an abelian ideal
  for (std::size_t v = 7; v < 14; ++v)
    for (std::size_t w = 7; w < 14; ++w) EXPECT_TRUE(ext.total.product(v, w).is_zero());
}

TEST(Module, OddShiftedRegularModule) {
  Algebra m = build_m7();
  Representation odd = regular_representation(m, true);
  EXPECT_EQ(odd.carrier_parity, std::vector<int>(7, 1));
  EXPECT_TRUE(verify_module(m, odd).passed());
}

TEST(Module, NonModuleIsRejected) {
  Algebra m = build_m7();
  Representation bad = regular_representation(m);
  bad.action[0].matrix = Scalar(2) * bad.action[0].matrix;  // rescale the action of e1 only
  EXPECT_FALSE(verify_module(m, bad, false).passed());
}

TEST(Module, IrreducibilityAndCentralizer) {
  Algebra m = build_m7();
  Representation reg = regular_representation(m);
  EXPECT_TRUE(is_irreducible(reg));
  EXPECT_TRUE(almost_faithful(reg));
  EXPECT_EQ(centralizer_basis(reg).size(), 1u);
  Representation two = direct_sum(reg, reg);
  EXPECT_FALSE(is_irreducible(two));
  EXPECT_EQ(centralizer_basis(two).size(), 4u);
  for (std::size_t i = 0; i < 7; ++i) EXPECT_EQ(submodule_generated(reg, unit_vector(7, i)).dim(), 7u);
}

TEST(Module, TrivialModuleIsNotAlmostFaithful) {
  Algebra m = build_m7();
  Representation z = zero_representation(m, {0, 0});
  EXPECT_TRUE(z.is_zero_map());
  EXPECT_FALSE(almost_faithful(z));
  EXPECT_EQ(annihilated_vectors(z).size(), 2u);
}

TEST(Decomposition, HostSplitsIntoRegularCopies) {
  for (const char* name : {"F", "dual", "quadratic", "truncated3", "lambda1", "lambda2", "dual-lambda1"}) {
    Algebra u = sample_coordinates(name);
    Algebra host = tensor_with_coordinates(build_m7(), u);
    Representation rho = adjoint_restriction(host, build_m7(), canonical_tensor_embedding(7, u));
    Decomposition d = decompose_into_irreducibles(rho);
    EXPECT_EQ(d.components.size(), u.dim()) << name;
    EXPECT_EQ(rank(d.change_of_basis), host.dim()) << name;
    EXPECT_TRUE(check_decomposition(rho, d).passed()) << name;
    // the components carry the parities of the coordinates
    std::vector<int> parities;
    for (const auto& c : d.components) parities.push_back(c.parity);
    std::sort(parities.begin(), parities.end());
    std::vector<int> expected = u.parities();
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(parities, expected) << name;
  }
}

TEST(Decomposition, IsoColumnsIntertwineTheAction) {
  Algebra u = sample_coordinates("dual");
  Algebra host = tensor_with_coordinates(build_m7(), u);
  Algebra m = build_m7();
  Representation rho = adjoint_restriction(host, m, canonical_tensor_embedding(7, u));
  Decomposition d = decompose_into_irreducibles(rho);
  Representation reg = regular_representation(m);
  for (const auto& c : d.components)
    for (std::size_t y = 0; y < 7; ++y)
      EXPECT_EQ(rho.operator_of(unit_vector(7, y)) * c.iso, c.iso * reg.operator_of(unit_vector(7, y)));
}

TEST(Decomposition, TrivialSummandIsRejected) {
  Algebra m = build_m7();
  Representation rho = direct_sum(regular_representation(m), zero_representation(m, {0}));
  try {
    decompose_into_irreducibles(rho);
    FAIL() << "expected a hypothesis failure";
  } catch (const MalcevError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::hypothesis_violated);
  }
}

TEST(Irreducibility, MinimalPolynomialAndRationalRoots) {
  Matrix m(3, 3);
  m(0, 0) = 2;
  m(1, 1) = 2;
  m(2, 2) = Scalar(-1, 3);
  auto poly = detail::minimal_polynomial(m);  // (x - 2)(x + 1/3) = x^2 - 5/3 x - 2/3
  EXPECT_EQ(poly, (std::vector<Scalar>{Scalar(2, 3), Scalar(5, 3)}));
  auto roots = detail::rational_roots(poly);
  std::sort(roots.begin(), roots.end());
  EXPECT_EQ(roots, (std::vector<Scalar>{Scalar(-1, 3), Scalar(2)}));
  EXPECT_TRUE(detail::rational_roots({Scalar(2), Scalar(0)}).empty());  // x^2 = 2
}

TEST(Irreducibility, TwoCopiesOverAFieldExtensionAreReducible) {
  // over M7 alone the carrier M7 (x) Q(sqrt 2) is Reg + Reg; e1 (x) 1 spans one copy
  Algebra u = build_sample_coordinates(CoordinateKind::polynomial, {2, 0});
  Algebra host = tensor_with_coordinates(build_m7(), u);
  Representation rho = adjoint_restriction(host, build_m7(), canonical_tensor_embedding(7, u));
  IrreducibilityVerdict v = irreducibility(rho);
  EXPECT_FALSE(v.irreducible);
  EXPECT_EQ(v.proper_submodule.size(), 7u);
}
