#include <gtest/gtest.h>

#include "dialg/genlab.hpp"
#include "dialg/ideals.hpp"
#include "dialg/nilpotency.hpp"
#include "helpers.hpp"

using namespace dialg;
using namespace testing_helpers;

TEST(ProductSpace, Examples) {
  const auto d = d2b(kQ);
  const auto full = Subspace::full(kQ, 2);
  EXPECT_EQ(product_space(d, full, full, Op::Left), span(kQ, 2, {{0, 1}}));
  EXPECT_TRUE(product_space(d, full, full, Op::Right).is_zero());
  EXPECT_TRUE(product_space(d, Subspace::zero(kQ, 2), full, Op::Left).is_zero());
  EXPECT_THROW(product_space(d, Subspace::full(kQ, 3), full, Op::Left), UsageError);
}

TEST(Lozenge, Examples) {
  EXPECT_EQ(lozenge(d2b(kQ), Subspace::full(kQ, 2), Subspace::full(kQ, 2)), span(kQ, 2, {{0, 1}}));
  EXPECT_TRUE(lozenge(abelian(kQ, 3), Subspace::full(kQ, 3), Subspace::full(kQ, 3)).is_zero());
  EXPECT_TRUE(lozenge(idempotent_line(kQ), Subspace::full(kQ, 1), Subspace::full(kQ, 1)).is_full());
}

TEST(IsIdeal, Examples) {
  const auto d = d2b(kQ);
  const auto r = is_ideal(d, span(kQ, 2, {{0, 1}}));
  EXPECT_TRUE(r.is_ideal);
  EXPECT_TRUE(r.is_abelian);
  EXPECT_FALSE(r.witness.has_value());

  const auto bad = is_ideal(d, span(kQ, 2, {{1, 0}}));
  EXPECT_FALSE(bad.is_ideal);
  ASSERT_TRUE(bad.witness.has_value());
  EXPECT_EQ(bad.witness->op, Op::Left);
  EXPECT_EQ(bad.witness->product, vec(kQ, {0, 1}));

  EXPECT_TRUE(is_ideal(d, Subspace::full(kQ, 2)).is_ideal);
  EXPECT_TRUE(is_subalgebra(d, span(kQ, 2, {{0, 1}})));
  EXPECT_FALSE(is_subalgebra(d, span(kQ, 2, {{1, 0}})));
}

TEST(IdealClosure, Examples) {
  const auto d = d2b(kQ);
  EXPECT_TRUE(ideal_closure(d, {e(kQ, 2, 0)}).is_full());
  EXPECT_EQ(ideal_closure(d, {e(kQ, 2, 1)}), span(kQ, 2, {{0, 1}}));
  EXPECT_TRUE(ideal_closure(d, {}).is_zero());
}

TEST(IdealClosure, IsAnIdealAndMinimal) {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const auto d = generate({kQ, 3, GeneratorMode::SplitExtensionTower, seed});
    for (std::size_t g = 0; g < 3; ++g) {
      const Vector gen = e(kQ, 3, g);
      const Subspace c = ideal_closure(d, {gen});
      EXPECT_TRUE(is_ideal(d, c).is_ideal);
      EXPECT_TRUE(c.contains(gen));
      // Minimality: every ideal containing the generator contains the closure.
      for (const Subspace& other : {annihilator(d), dias_subspace(d), Subspace::full(kQ, 3),
                                    lozenge(d, Subspace::full(kQ, 3), Subspace::full(kQ, 3))}) {
        if (other.contains(gen)) EXPECT_TRUE(other.contains(c));
      }
    }
  }
}

TEST(Dias, Examples) {
  EXPECT_EQ(dias_subspace(d2b(kQ)), span(kQ, 2, {{0, 1}}));
  EXPECT_TRUE(dias_subspace(matrix_algebra(kQ, 2)).is_zero());
  EXPECT_TRUE(dias_subspace(abelian(kQ, 2)).is_zero());
}

TEST(Dias, ZeroExactlyForAssociative) {
  for (const auto& d : enumerate_all(kF2, 2)) EXPECT_EQ(dias_subspace(d).is_zero(), is_associative_dias(d));
  EXPECT_FALSE(dias_subspace(triangular_projection_dialgebra(kQ)).is_zero());
}

TEST(Annihilator, Examples) {
  EXPECT_EQ(annihilator(d2b(kQ)), span(kQ, 2, {{0, 1}}));
  EXPECT_TRUE(annihilator(abelian(kQ, 2)).is_full());
  EXPECT_TRUE(annihilator(idempotent_line(kQ)).is_zero());
}

TEST(Normalizer, Examples) {
  Tensor3 t = Tensor3::cube(kQ, 2);
  t.at(0, 0, 1) = Scalar::one(kQ);
  const auto a = from_associative(kQ, 2, t);  // (D2b, ⊣) as an associative algebra
  EXPECT_TRUE(normalizer(a, span(kQ, 2, {{0, 1}})).is_full());
  EXPECT_TRUE(normalizer(a, Subspace::zero(kQ, 2)).is_full());
  EXPECT_TRUE(normalizer(a, Subspace::full(kQ, 2)).is_full());
  EXPECT_THROW(normalizer(d2b(kQ), Subspace::zero(kQ, 2)), UsageError);
  EXPECT_THROW(normalizer(a, span(kQ, 2, {{1, 0}})), UsageError);
}

TEST(Normalizer, ContainsSubalgebraAndIsFullForIdeals) {
  const auto m2 = matrix_algebra(kF2, 2);
  for (const Subspace& k : finite_subalgebras(m2)) {
    const Subspace n = normalizer(m2, k);
    EXPECT_TRUE(n.contains(k));
    if (is_ideal(m2, k).is_ideal) EXPECT_TRUE(n.is_full());
  }
  // Diagonal matrices: normalized exactly by the diagonal.
  const Subspace diag = span(kQ, 4, {{1, 0, 0, 0}, {0, 0, 0, 1}});
  EXPECT_EQ(normalizer(matrix_algebra(kQ, 2), diag), diag);
}

TEST(FiniteSubalgebras, CountsForSmallCases) {
  // In the zero algebra every subspace is a subalgebra: F2^2 has 1 + 3 + 1.
  EXPECT_EQ(finite_subalgebras(abelian(kF2, 2)).size(), 5u);
  // F3^2: 1 + 4 + 1.
  EXPECT_EQ(finite_subalgebras(abelian(kF3, 2)).size(), 6u);
  EXPECT_THROW(finite_subalgebras(abelian(kQ, 2)), UsageError);
}
