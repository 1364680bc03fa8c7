#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace klrc;
using klrc::testing::standard_count_oracle;

namespace {

const LieRank L2 = LieRank::finite(2), L3 = LieRank::finite(3), L4 = LieRank::finite(4);
RationalField Q;

Rational entry(const Matrix<RationalField>& m, std::size_t r, std::size_t c) { return m(r, c); }

}  // namespace

TEST(BuildIrreducible, OneRowShape) {
  auto rep = build_irreducible(parse_multipartition("2"), Multicharge({2}), L3, Q);
  EXPECT_EQ(rep.dim, 1u);
  EXPECT_EQ(rep.support(), (std::vector<ResidueSequence>{{2, 3}}));
  EXPECT_TRUE(verify_representation(rep).ok());
  EXPECT_TRUE(rep.psi_matrix(1).is_zero());
}

TEST(BuildIrreducible, HookShape) {
  auto rep = build_irreducible(parse_multipartition("2,1"), Multicharge({2}), L3, Q);
  ASSERT_EQ(rep.dim, 2u);
  EXPECT_TRUE(rep.psi_matrix(1).is_zero());
  // psi_2 swaps the two standard tableaux.
  EXPECT_EQ(entry(rep.psi_matrix(2), 0, 1), 1);
  EXPECT_EQ(entry(rep.psi_matrix(2), 1, 0), 1);
  EXPECT_EQ(entry(rep.psi_matrix(2), 0, 0), 0);
  EXPECT_TRUE(verify_representation(rep).ok());
  EXPECT_TRUE(is_irreducible(rep));
}

TEST(BuildIrreducible, Refusals) {
  EXPECT_THROW(build_irreducible(parse_multipartition("2"), Multicharge({0}), L2, Q), std::domain_error);
  EXPECT_THROW(build_irreducible(parse_multipartition("1|1"), Multicharge({2}), L3, Q), std::invalid_argument);
  EXPECT_THROW(build_irreducible(parse_multipartition("1|1"), Multicharge({1, 2}), L4, Q), std::domain_error);
}

// On every semisimple point of the grid: each irreducible verifies, has
// dimension |Std(lambda)| (hook length oracle), x = 0, every nonzero psi
// entry has degree 0, and the module is irreducible.
TEST(BuildIrreducible, SemisimpleGridProperties) {
  PrimeField f5(5);
  std::size_t modules = 0;
  for (const auto& p : klrc::testing::desk_grid(4)) {
    if (!is_semisimple(p.kappa, p.n, p.rank).verdict) continue;
    for (const auto& lambda : enumerate_multipartitions(p.n, p.kappa.level())) {
      auto rep = build_irreducible(lambda, p.kappa, p.rank, f5);
      ++modules;
      EXPECT_EQ(static_cast<std::int64_t>(rep.dim), standard_count_oracle(lambda));
      EXPECT_TRUE(verify_representation(rep).ok());
      for (int r = 1; r <= p.n; ++r) EXPECT_TRUE(rep.x_matrix(r).is_zero());
      for (const auto& [i, e] : rep.idempotents)
        for (int r = 1; r < p.n; ++r) {
          auto moved = rep.psi_matrix(r) * e;
          if (!moved.is_zero()) {
            EXPECT_EQ(generator_degree(Generator::psi(r), i, p.rank), 0) << lambda.to_string();
          }
        }
      if (rep.dim <= 6) {
        EXPECT_TRUE(is_irreducible(rep)) << lambda.to_string();
      }
    }
  }
  EXPECT_GT(modules, 30u);
}

TEST(MatrixUnits, AlgebraDimensions) {
  auto two = matrix_units(2, Multicharge({2}), L3, Q);
  EXPECT_TRUE(two.ok());
  EXPECT_EQ(two.algebra_dimension, 2u);
  auto three = matrix_units(3, Multicharge({2}), L3, Q);
  EXPECT_TRUE(three.ok());
  EXPECT_EQ(three.algebra_dimension, 6u);
  EXPECT_EQ(three.units, 6u);
  EXPECT_TRUE(three.failures.empty());
}

TEST(MatrixUnits, AlgebraDimensionIsSumOfSquares) {
  PrimeField f7(7);
  for (const auto& p : klrc::testing::desk_grid(4)) {
    if (!is_semisimple(p.kappa, p.n, p.rank).verdict) continue;
    std::size_t expected = 0;
    for (const auto& lambda : enumerate_multipartitions(p.n, p.kappa.level())) {
      const auto d = static_cast<std::size_t>(standard_count_oracle(lambda));
      expected += d * d;
    }
    auto report = matrix_units(p.n, p.kappa, p.rank, f7);
    EXPECT_TRUE(report.ok()) << p.rank.to_string() << " " << p.kappa.to_string() << " " << p.n;
    EXPECT_EQ(report.algebra_dimension, expected);
  }
}

TEST(BoundaryUniserial, XMatrices) {
  auto rep = build_boundary_uniserial(Multicharge({0}), 1, 3, L2, Q);
  ASSERT_EQ(rep.dim, 2u);
  EXPECT_EQ(rep.labels, (std::vector<std::string>{"u", "v"}));
  EXPECT_TRUE(rep.x_matrix(1).is_zero());
  EXPECT_TRUE(rep.x_matrix(3).is_zero());
  EXPECT_EQ(entry(rep.x_matrix(2), 0, 1), 1);  // x_2 v = u
  EXPECT_TRUE(verify_representation(rep).ok());
  EXPECT_FALSE(is_irreducible(rep));
}

TEST(BoundaryUniserial, VerifiesForEveryEndCharge) {
  for (int ell = 2; ell <= 4; ++ell) {
    const auto rank = LieRank::finite(ell);
    for (int c : {0, ell})
      for (int n = 2; n <= 6; ++n) {
        auto rep = build_boundary_uniserial(Multicharge({c}), 1, n, rank, PrimeField(7));
        EXPECT_TRUE(verify_representation(rep).ok()) << ell << " " << c << " " << n;
        // Uniserial: the only invariant line is span(u) and v generates.
        auto lines = invariant_lines(rep);
        ASSERT_EQ(lines.size(), 1u);
        EXPECT_EQ(lines[0].dim(), 1u);
        EXPECT_EQ(invariant_closure(rep, {{ModP(0, 7), ModP(1, 7)}}).dim(), 2u);
      }
  }
  EXPECT_THROW(build_boundary_uniserial(Multicharge({1}), 1, 3, L3, Q), std::invalid_argument);
  EXPECT_THROW(build_boundary_uniserial(Multicharge({0}), 2, 3, L3, Q), std::invalid_argument);
  EXPECT_THROW(build_boundary_uniserial(Multicharge({0}), 1, 1, L3, Q), std::invalid_argument);
}

TEST(RepeatUniserial, XMatrices) {
  auto a = build_repeat_uniserial(Multicharge({1, 1}), 1, 2, L3, Q);
  EXPECT_EQ(entry(a.x_matrix(1), 0, 1), 1);
  EXPECT_EQ(entry(a.x_matrix(2), 0, 1), -1);
  EXPECT_TRUE(verify_representation(a).ok());
  auto b = build_repeat_uniserial(Multicharge({2, 2}), 1, 2, L4, Q);
  EXPECT_EQ(entry(b.x_matrix(1), 0, 1), 1);
  EXPECT_EQ(entry(b.x_matrix(2), 0, 1), -1);
  EXPECT_TRUE(verify_representation(b).ok());
  EXPECT_FALSE(is_irreducible(b));
}

TEST(RepeatUniserial, VerifiesWheneverSs2Holds) {
  std::size_t built = 0;
  for (const auto& p : klrc::testing::desk_grid()) {
    if (p.kappa.level() != 2 || !ss2_check(p.kappa, p.n, p.rank).holds) continue;
    const auto bar = p.kappa.bar(p.rank);
    if (bar[0] != bar[1]) continue;
    auto rep = build_repeat_uniserial(p.kappa, 1, p.n, p.rank, PrimeField(5));
    EXPECT_TRUE(verify_representation(rep).ok()) << p.rank.to_string() << " " << p.kappa.to_string() << " " << p.n;
    ++built;
  }
  EXPECT_GT(built, 3u);
  EXPECT_THROW(build_repeat_uniserial(Multicharge({1, 2}), 1, 2, L4, Q), std::invalid_argument);
  EXPECT_THROW(build_repeat_uniserial(Multicharge({0, 0}), 1, 2, L3, Q), std::invalid_argument);
}

TEST(OneDimensional, AcceptsAndRejects) {
  auto ok = build_one_dimensional({1, 0, 1, 2}, WeightVector::of({1}), L2, Q);
  ASSERT_TRUE(ok.rep.has_value());
  EXPECT_TRUE(ok.violations.empty());
  auto bad = build_one_dimensional({2, 0}, WeightVector::of({2}), L3, Q);
  EXPECT_FALSE(bad.rep.has_value());
  EXPECT_FALSE(bad.violations.empty());
  EXPECT_THROW(build_one_dimensional({}, WeightVector::of({2}), L3, Q), std::invalid_argument);
}

TEST(IsIrreducible, Cases) {
  auto one = build_irreducible(parse_multipartition("1"), Multicharge({2}), L3, Q);
  EXPECT_TRUE(is_irreducible(one));
  Representation<RationalField> zero(Q, L3, WeightVector::of({2}), 2, 0);
  EXPECT_FALSE(is_irreducible(zero));
  auto broken = build_boundary_uniserial(Multicharge({0}), 1, 3, L2, Q);
  broken.x_matrix(1)(0, 1) = 5;
  EXPECT_THROW(is_irreducible(broken), std::invalid_argument);
}
