#include <gtest/gtest.h>

#include "dialg/genlab.hpp"
#include "dialg/ideals.hpp"
#include "dialg/io.hpp"
#include "dialg/nilpotency.hpp"
#include "helpers.hpp"
#include "oracle.hpp"

using namespace dialg;
using namespace testing_helpers;

namespace dialg {
void PrintTo(GeneratorMode mode, std::ostream* os) { *os << mode_name(mode); }
}  // namespace dialg

// Frozen after the first exhaustive run; the brute-force oracle below
// recomputes it from scratch.
constexpr std::size_t kF2Dim2Census = 49;

TEST(Census, OneDimensionalOverF2) {
  const auto all = enumerate_all(kF2, 1);
  ASSERT_EQ(all.size(), 2u);
  EXPECT_EQ(oracle::census(2, 1), 2u);
  // Exactly the tables with e1⊣e1 = e1⊢e1.
  for (const auto& d : all) EXPECT_EQ(d.tensor(Op::Left), d.tensor(Op::Right));
}

TEST(Census, TwoDimensionalOverF2) {
  EXPECT_EQ(oracle::census(2, 2), kF2Dim2Census);
  EXPECT_EQ(enumerate_all(kF2, 2).size(), kF2Dim2Census);
}

TEST(Census, SmallCasesOverF3) {
  EXPECT_EQ(enumerate_all(kF3, 1).size(), oracle::census(3, 1));
  EXPECT_EQ(enumerate_all(kF3, 0).size(), 1u);
}

TEST(Census, EveryTableIsValidAndDistinct) {
  const auto all = enumerate_all(kF2, 2);
  std::set<std::string> seen;
  for (const auto& d : all) {
    EXPECT_TRUE(d.verified());
    EXPECT_EQ(oracle::failing_axiom_triples(oracle::raw(d), 2), 0u);
    seen.insert(write_algebra(d));
  }
  EXPECT_EQ(seen.size(), all.size());
}

TEST(Census, WorkersDoNotChangeOrder) {
  const auto one = enumerate_all(kF3, 2, 1);
  const auto four = enumerate_all(kF3, 2, 4);
  ASSERT_EQ(one.size(), four.size());
  for (std::size_t i = 0; i < one.size(); ++i) EXPECT_EQ(one[i], four[i]);
}

TEST(Census, Bounds) {
  EXPECT_THROW(enumerate_all(kQ, 1), UsageError);
  EXPECT_THROW(enumerate_all(FieldSpec::prime(5), 1), UsageError);
  EXPECT_THROW(enumerate_all(kF2, 3), UsageError);
}

TEST(Generate, Abelian) {
  const auto d = generate({kQ, 3, GeneratorMode::Abelian, 1});
  EXPECT_TRUE(d.tensor(Op::Left).is_zero());
  EXPECT_TRUE(d.tensor(Op::Right).is_zero());
  EXPECT_EQ(dias_series(d).nilpotency_class, 2u);
}

TEST(Generate, GradedNilpotentRespectsGrading) {
  const auto d = generate({kQ, 3, GeneratorMode::GradedNilpotent, 1});
  EXPECT_TRUE(d.verified());
  for (Op op : kOps)
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k <= std::max(i, j); ++k) EXPECT_TRUE(d.tensor(op)(i, j, k).is_zero());
  const auto s = dias_series(d);
  EXPECT_TRUE(s.nilpotent);
  EXPECT_LE(*s.nilpotency_class, 4u);
}

TEST(Generate, TowerFromD2b) {
  const auto x = split_extension(regular_rep(d2b(kQ)));
  EXPECT_TRUE(check_axioms(x).empty());
  EXPECT_TRUE(dias_series(x).nilpotent);
}

class GeneratorModes : public ::testing::TestWithParam<std::tuple<GeneratorMode, int>> {};

TEST_P(GeneratorModes, VerifiedDeterministicAndAsAdvertised) {
  const auto [mode, field_id] = GetParam();
  const FieldSpec f = field_id == 0 ? kQ : field_id == 1 ? kF2 : kF3;
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    for (std::size_t dim = 1; dim <= (mode == GeneratorMode::ExhaustiveEnumeration ? 2u : 5u); ++dim) {
      if (mode == GeneratorMode::ExhaustiveEnumeration && !f.is_finite()) continue;
      const GeneratorSpec spec{f, dim, mode, seed};
      const auto d = generate(spec);
      EXPECT_EQ(d.dim(), dim);
      EXPECT_TRUE(d.verified());
      EXPECT_EQ(oracle::failing_axiom_triples(oracle::raw(d), f.characteristic()), 0u);
      EXPECT_EQ(write_algebra(d), write_algebra(generate(spec)));
      if (mode == GeneratorMode::GradedNilpotent || mode == GeneratorMode::SplitExtensionTower) {
        EXPECT_TRUE(dias_series(d).nilpotent);
      }
      if (mode == GeneratorMode::AssociativeTriangular) {
        EXPECT_TRUE(is_associative_dias(d));
        for (std::size_t i = 0; i < dim; ++i) EXPECT_TRUE(element_nilpotency_index(d, e(f, dim, i), Op::Left).has_value());
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(
    All, GeneratorModes,
    ::testing::Combine(::testing::Values(GeneratorMode::Abelian, GeneratorMode::GradedNilpotent,
                                         GeneratorMode::SplitExtensionTower, GeneratorMode::AssociativeTriangular,
                                         GeneratorMode::ExhaustiveEnumeration),
                       ::testing::Values(0, 1, 2)),
    [](const auto& info) {
      std::string name(mode_name(std::get<0>(info.param)));
      std::replace(name.begin(), name.end(), '-', '_');
      return name + "_" + std::to_string(std::get<1>(info.param));
    });

TEST(Generate, SeedsDiffer) {
  std::set<std::string> seen;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) seen.insert(write_algebra(generate({kQ, 4, GeneratorMode::GradedNilpotent, seed})));
  EXPECT_GT(seen.size(), 5u);
}

TEST(Generate, ModeNames) {
  for (auto mode : {GeneratorMode::Abelian, GeneratorMode::GradedNilpotent, GeneratorMode::SplitExtensionTower,
                    GeneratorMode::AssociativeTriangular, GeneratorMode::ExhaustiveEnumeration}) {
    EXPECT_EQ(parse_mode(mode_name(mode)), mode);
  }
  EXPECT_FALSE(parse_mode("uniform").has_value());
}

TEST(NonNilpotentFixture, IsNotNilpotent) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto d = non_nilpotent_fixture(kQ, seed);
    EXPECT_TRUE(d.verified());
    EXPECT_FALSE(dias_series(d).nilpotent);
    EXPECT_EQ(write_algebra(d), write_algebra(non_nilpotent_fixture(kQ, seed)));
  }
}

TEST(Catalog, Fixtures) {
  for (std::size_t n = 1; n <= 4; ++n) EXPECT_TRUE(check_axioms(abelian(kQ, n)).empty());
  EXPECT_TRUE(check_axioms(matrix_algebra(kQ, 2)).empty());
  const auto tp = triangular_projection_dialgebra(kQ);
  EXPECT_FALSE(is_associative_dias(tp));
  EXPECT_FALSE(dias_series(tp).nilpotent);
  EXPECT_EQ(direct_sum(d2b(kQ), idempotent_line(kQ)).dim(), 3u);
  EXPECT_THROW(change_basis(d2b(kQ), Matrix(kQ, 2, 2)), UsageError);
}

TEST(Catalog, ChangeOfBasisPreservesInvariants) {
  const auto d = generate({kQ, 4, GeneratorMode::GradedNilpotent, 2});
  const Matrix c = mat(kQ, {{1, 2, 0, 0}, {0, 1, 0, 3}, {1, 0, 1, 0}, {0, 0, 0, 1}});
  const auto moved = change_basis(d, c);
  EXPECT_TRUE(moved.verified());
  EXPECT_EQ(dias_series(moved).nilpotency_class, dias_series(d).nilpotency_class);
  EXPECT_EQ(dias_subspace(moved).dim(), dias_subspace(d).dim());
  EXPECT_EQ(annihilator(moved).dim(), annihilator(d).dim());
}

TEST(Mutate, RevertRestores) {
  const auto d = d2b(kQ);
  const auto m = mutate(d, Op::Right, 1, 0, 0, Scalar::one(kQ));
  EXPECT_FALSE(check_axioms(m).empty());
  const auto back = mutate(m, Op::Right, 1, 0, 0, Scalar::zero(kQ));
  EXPECT_EQ(back, DiassociativeAlgebra(kQ, 2, d.tensor(Op::Left), d.tensor(Op::Right)));
}

TEST(Suites, EmptyCorpusIsVacuous) {
  for (Suite s : kSuites) {
    const auto r = run_suite({}, s);
    EXPECT_EQ(r.instances, 0u);
    EXPECT_TRUE(r.ok());
  }
}

TEST(Suites, IdempotentEngel) {
  const auto r = run_suite({{idempotent_line(kQ)}, {}}, Suite::Engel);
  EXPECT_EQ(r.instances, 1u);
  EXPECT_EQ(r.passed, 1u);
  EXPECT_EQ(r.counters.at("not_nilpotent"), 1u);
}

TEST(Suites, CensusEngel) {
  Corpus c{enumerate_all(kF2, 2), {}};
  const auto r = run_suite(c, Suite::Engel);
  EXPECT_EQ(r.instances, kF2Dim2Census);
  EXPECT_EQ(r.failed, 0u);
  EXPECT_TRUE(r.counterexamples.empty());
}

TEST(Suites, FailuresCarryReplayableWitness) {
  // An unverified algebra can't enter; an invalid representation can, and the
  // dichotomy suite skips it while the split-extension suite judges it.
  const auto rep = mutate(regular_rep(d2b(kF2)), ActionSide::T, Op::Right, 0, 0, 0, Scalar::one(kF2));
  const auto r = run_suite({{}, {rep}}, Suite::SplitExtension);
  EXPECT_TRUE(r.ok());
  EXPECT_GE(r.counters.at("invalid_rep"), 1u);
  const DiassociativeAlgebra raw(kQ, 2, d2b(kQ).tensor(Op::Left), d2b(kQ).tensor(Op::Right));
  EXPECT_THROW(run_suite({{raw}, {}}, Suite::Engel), UsageError);
}

TEST(Suites, WorkersDoNotChangeReports) {
  Corpus c{enumerate_all(kF2, 2), {}};
  for (std::uint64_t seed = 1; seed <= 6; ++seed) c.algebras.push_back(generate({kQ, 4, GeneratorMode::SplitExtensionTower, seed}));
  for (Suite s : kSuites) {
    SuiteOptions one;
    SuiteOptions many;
    many.workers = 4;
    one.operator_trials = many.operator_trials = 10;
    EXPECT_EQ(run_suite(c, s, one).to_json(), run_suite(c, s, many).to_json()) << suite_name(s);
  }
}

TEST(Suites, Names) {
  for (Suite s : kSuites) EXPECT_EQ(parse_suite(suite_name(s)), s);
  EXPECT_FALSE(parse_suite("nope").has_value());
}

TEST(Fingerprint, KnownValues) {
  EXPECT_EQ(fingerprint(""), "cbf29ce484222325");
  EXPECT_EQ(fingerprint("a"), "af63dc4c8601ec8c");
}
