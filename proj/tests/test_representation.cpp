#include <gtest/gtest.h>

#include "dialg/genlab.hpp"
#include "dialg/ideals.hpp"
#include "dialg/nilpotency.hpp"
#include "helpers.hpp"

using namespace dialg;
using namespace testing_helpers;

namespace {

Representation one_dim(const DiassociativeAlgebra& d, long long sl, long long sr, long long tl, long long tr) {
  const FieldSpec f = d.field();
  std::array<Tensor3, 4> t{Tensor3(f, 1, d.dim(), 1), Tensor3(f, 1, d.dim(), 1), Tensor3(f, d.dim(), 1, 1),
                           Tensor3(f, d.dim(), 1, 1)};
  const long long values[4] = {sl, sr, tl, tr};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t x = 0; x < d.dim(); ++x) {
      (i < 2 ? t[i].at(0, x, 0) : t[i].at(x, 0, 0)) = Scalar::from_int(f, values[i]);
    }
  }
  return Representation(d, 1, t[0], t[1], t[2], t[3]);
}

}  // namespace

TEST(Act, RegularD2b) {
  const auto rep = regular_rep(d2b(kQ));
  EXPECT_EQ(act(rep, e(kQ, 2, 0), e(kQ, 2, 0), ActionSide::T, Op::Left), e(kQ, 2, 1));
  EXPECT_TRUE(is_zero(act(rep, e(kQ, 2, 0), e(kQ, 2, 0), ActionSide::T, Op::Right)));
  EXPECT_TRUE(is_zero(act(rep, vec(kQ, {3, -1}), zero_vector(kQ, 2), ActionSide::S, Op::Left)));
  EXPECT_THROW(act(rep, e(kQ, 3, 0), e(kQ, 2, 0), ActionSide::S, Op::Left), UsageError);
}

TEST(RepIdentities, Examples) {
  const auto d = d2b(kQ);
  EXPECT_TRUE(check_rep_identities(regular_rep(d)).empty());
  EXPECT_TRUE(check_rep_identities(zero_rep(d, 3)).empty());
  const auto broken = mutate(regular_rep(d), ActionSide::T, Op::Right, 0, 0, 0, Scalar::one(kQ));
  EXPECT_FALSE(check_rep_identities(broken).empty());
  EXPECT_THROW(verify(broken), InvalidRepresentationError);
}

TEST(RepIdentities, RegularRepTracksAxioms) {
  // The self-action of an arbitrary table satisfies the 15 identities exactly
  // when the table satisfies the five axioms.
  for (const auto& base : {d2b(kF3), generate({kF3, 3, GeneratorMode::SplitExtensionTower, 5})}) {
    const std::size_t n = base.dim();
    for (Op op : kOps)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t k = 0; k < n; ++k) {
            const auto m = mutate(base, op, i, j, k, base.tensor(op)(i, j, k) + Scalar::one(kF3));
            const Representation self(m, n, m.tensor(Op::Left), m.tensor(Op::Right), m.tensor(Op::Left),
                                      m.tensor(Op::Right));
            EXPECT_EQ(check_rep_identities(self).empty(), check_axioms(m).empty());
          }
  }
}

TEST(RegularRep, Examples) {
  const auto zero = regular_rep(abelian(kQ, 2));
  for (ActionSide side : {ActionSide::S, ActionSide::T})
    for (Op op : kOps) EXPECT_TRUE(zero.tensor(side, op).is_zero());
  const auto rep = regular_rep(d2b(kQ));
  const Tensor3& tl = rep.tensor(ActionSide::T, Op::Left);
  EXPECT_TRUE(tl(0, 0, 1).is_one());
  std::size_t nonzero = 0;
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t c = 0; c < 2; ++c) nonzero += tl(a, b, c).is_zero() ? 0 : 1;
  EXPECT_EQ(nonzero, 1u);
  const auto idem = regular_rep(idempotent_line(kQ));
  for (ActionSide side : {ActionSide::S, ActionSide::T})
    for (Op op : kOps) EXPECT_TRUE(idem.tensor(side, op)(0, 0, 0).is_one());
}

TEST(RepKernel, Examples) {
  EXPECT_EQ(rep_kernel(regular_rep(d2b(kQ))), span(kQ, 2, {{0, 1}}));
  EXPECT_TRUE(rep_kernel(zero_rep(d2b(kQ), 2)).is_full());
  EXPECT_TRUE(rep_kernel(regular_rep(idempotent_line(kQ))).is_zero());
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto d = non_nilpotent_fixture(kQ, seed);
    EXPECT_EQ(rep_kernel(regular_rep(d)), annihilator(d));
  }
}

TEST(SplitExtension, Examples) {
  const auto d = d2b(kQ);
  const auto x = split_extension(zero_rep(d, 2));
  EXPECT_EQ(x.dim(), 4u);
  EXPECT_EQ(annihilator(x).dim(), 3u);  // e2 plus the abelian V

  const auto reg = split_extension(regular_rep(d));
  EXPECT_EQ(reg.dim(), 4u);
  EXPECT_TRUE(check_axioms(reg).empty());
  EXPECT_TRUE(dias_series(reg).nilpotent);
  // V = span(v1, v2) is an abelian ideal and the projection onto D is multiplicative.
  const auto v = span(kQ, 4, {{0, 0, 1, 0}, {0, 0, 0, 1}});
  const auto ideal = is_ideal(reg, v);
  EXPECT_TRUE(ideal.is_ideal);
  EXPECT_TRUE(ideal.is_abelian);
  const auto q = quotient(reg, v);
  EXPECT_EQ(q.algebra.tensor(Op::Left), d.tensor(Op::Left));

  const auto broken = mutate(regular_rep(d), ActionSide::S, Op::Left, 0, 0, 0, Scalar::one(kQ));
  EXPECT_FALSE(check_axioms(split_extension_unchecked(broken)).empty());
  EXPECT_THROW(split_extension(broken), UsageError);
}

TEST(SplitExtension, NamesStayDistinct) {
  const auto x = split_extension(regular_rep(d2b(kQ)));
  std::set<std::string> names(x.basis_names().begin(), x.basis_names().end());
  EXPECT_EQ(names.size(), 4u);
}

TEST(Irreducible, Examples) {
  const auto d = d2b(kQ);
  EXPECT_EQ(is_irreducible(verify(one_dim(d, 0, 0, 0, 0))).kind, IrreducibilityResult::Kind::Irreducible);
  const auto reg = is_irreducible(regular_rep(d));
  EXPECT_EQ(reg.kind, IrreducibilityResult::Kind::Reducible);
  ASSERT_TRUE(reg.witness.has_value());
  EXPECT_EQ(*reg.witness, span(kQ, 2, {{0, 1}}));
  const auto z = is_irreducible(zero_rep(d2b(kF2), 2));
  EXPECT_EQ(z.kind, IrreducibilityResult::Kind::Reducible);
  EXPECT_THROW(is_irreducible(zero_rep(d, 0)), UsageError);
}

TEST(Irreducible, NeverClaimedOverQ) {
  // The regular representation of End(Q^2) on its column-space pieces is
  // reducible, and a one-dimensional algebra acting by scalars on Q^2 always is.
  const auto m2 = matrix_algebra(kQ, 2);
  const auto r = is_irreducible(regular_rep(m2));
  EXPECT_NE(r.kind, IrreducibilityResult::Kind::Irreducible);
}

TEST(Irreducible, MatrixAlgebraOnColumnsOverF2) {
  // End(F2^2) acting on F2^2 from the left only (T⊣ = T⊢ = composition, S = 0)
  // is a representation with no invariant line.
  const auto m2 = matrix_algebra(kF2, 2);
  Tensor3 t(kF2, 4, 2, 2);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) t.at(a * 2 + b, b, a) = Scalar::one(kF2);  // E_ab e_b = e_a
  const auto rep = verify(Representation(m2, 2, Tensor3(kF2, 2, 4, 2), Tensor3(kF2, 2, 4, 2), t, t));
  EXPECT_EQ(is_irreducible(rep).kind, IrreducibilityResult::Kind::Irreducible);
  const auto report = dichotomy_check(rep);
  EXPECT_TRUE(report.quotient_associative);
  EXPECT_TRUE(report.agree_branch);
  EXPECT_FALSE(report.violation());
}

TEST(NullSpace, Examples) {
  EXPECT_EQ(common_null_space(regular_rep(d2b(kQ))), span(kQ, 2, {{0, 1}}));
  EXPECT_TRUE(common_null_space(zero_rep(d2b(kQ), 3)).is_full());
  EXPECT_TRUE(common_null_space(regular_rep(idempotent_line(kQ))).is_zero());
}

TEST(NullSpace, IsInvariantAndMaximal) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto d = generate({kQ, 4, GeneratorMode::GradedNilpotent, seed});
    const auto rep = regular_rep(d);
    const Subspace w = common_null_space(rep);
    EXPECT_FALSE(w.is_zero());
    for (const auto& v : w.basis_vectors()) {
      for (std::size_t i = 0; i < 4; ++i)
        for (ActionSide side : {ActionSide::S, ActionSide::T})
          for (Op op : kOps) EXPECT_TRUE(is_zero(act(rep, e(kQ, 4, i), v, side, op)));
    }
    // Every vector killed by all basis actions lies in w: check the complement basis.
    for (std::size_t c : w.free_columns()) {
      const Vector v = e(kQ, 4, c);
      bool killed = true;
      for (std::size_t i = 0; i < 4; ++i)
        for (ActionSide side : {ActionSide::S, ActionSide::T})
          for (Op op : kOps) killed = killed && is_zero(act(rep, e(kQ, 4, i), v, side, op));
      EXPECT_EQ(killed, w.contains(v));
    }
  }
}

TEST(Dichotomy, Examples) {
  const auto idem = idempotent_line(kQ);
  const auto agree = dichotomy_check(verify(one_dim(idem, 1, 1, 1, 1)));
  EXPECT_EQ(agree.branch(), "actions agree");
  EXPECT_FALSE(agree.violation());

  const auto zero = dichotomy_check(verify(one_dim(d2b(kQ), 0, 0, 0, 0)));
  EXPECT_TRUE(zero.zero_branch);
  EXPECT_TRUE(zero.quotient_associative);
  EXPECT_FALSE(zero.violation());

  EXPECT_THROW(dichotomy_check(regular_rep(d2b(kQ))), UsageError);
}

TEST(Dichotomy, EnumeratedIrreduciblesOverF2) {
  std::size_t irreducible = 0;
  for (std::size_t n = 1; n <= 2; ++n)
    for (const auto& d : enumerate_all(kF2, n))
      for (std::size_t m = 1; m <= 2; ++m)
        for (const auto& rep : enumerate_reps(d, m)) {
          if (is_irreducible(rep).kind != IrreducibilityResult::Kind::Irreducible) continue;
          ++irreducible;
          EXPECT_FALSE(dichotomy_check(rep).violation());
        }
  EXPECT_GT(irreducible, 0u);
}

TEST(EnumerateReps, MatchesBruteForce) {
  // All action tensors with entries in F2, filtered by the identity checker.
  for (std::size_t n = 1; n <= 2; ++n) {
    for (const auto& d : enumerate_all(kF2, n)) {
      const std::size_t m = 1;
      const std::size_t entries = 4 * n;
      std::size_t count = 0;
      for (std::uint32_t mask = 0; mask < (1u << entries); ++mask) {
        std::array<Tensor3, 4> t{Tensor3(kF2, 1, n, 1), Tensor3(kF2, 1, n, 1), Tensor3(kF2, n, 1, 1), Tensor3(kF2, n, 1, 1)};
        for (std::size_t b = 0; b < entries; ++b) {
          if (!(mask >> b & 1u)) continue;
          const std::size_t which = b / n;
          const std::size_t x = b % n;
          (which < 2 ? t[which].at(0, x, 0) : t[which].at(x, 0, 0)) = Scalar::one(kF2);
        }
        count += check_rep_identities(Representation(d, m, t[0], t[1], t[2], t[3])).empty() ? 1 : 0;
      }
      EXPECT_EQ(enumerate_reps(d, m).size(), count);
    }
  }
  // dim V = 2 over the one-dimensional algebras: 2^16 candidates each.
  for (const auto& d : enumerate_all(kF2, 1)) {
    std::size_t count = 0;
    for (std::uint32_t mask = 0; mask < (1u << 16); ++mask) {
      std::array<Tensor3, 4> t{Tensor3(kF2, 2, 1, 2), Tensor3(kF2, 2, 1, 2), Tensor3(kF2, 1, 2, 2), Tensor3(kF2, 1, 2, 2)};
      for (std::size_t b = 0; b < 16; ++b) {
        if (!(mask >> b & 1u)) continue;
        const std::size_t which = b / 4, in = (b % 4) / 2, out = b % 2;
        (which < 2 ? t[which].at(in, 0, out) : t[which].at(0, in, out)) = Scalar::one(kF2);
      }
      count += check_rep_identities(Representation(d, 2, t[0], t[1], t[2], t[3])).empty() ? 1 : 0;
    }
    EXPECT_EQ(enumerate_reps(d, 2).size(), count);
  }
}

TEST(AssocPair, Examples) {
  const auto m2 = matrix_algebra(kQ, 2);
  EXPECT_TRUE(check_assoc_rep_identities(assoc_pair_view(regular_rep(m2))).empty());
  EXPECT_TRUE(check_assoc_rep_identities(assoc_pair_view(zero_rep(m2, 2))).empty());
  const auto broken = mutate(regular_rep(m2), ActionSide::S, Op::Left, 0, 0, 0, Scalar::from_int(kQ, 5));
  const auto vs = check_assoc_rep_identities(assoc_pair_view(broken));
  ASSERT_FALSE(vs.empty());
  EXPECT_NE(vs.front().lhs, vs.front().rhs);
  EXPECT_THROW(assoc_pair_view(regular_rep(d2b(kQ))), UsageError);
}
