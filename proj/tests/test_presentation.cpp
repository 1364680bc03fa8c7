#include <gtest/gtest.h>

#include <algorithm>

#include "test_support.hpp"

using namespace klrc;

namespace {

const LieRank L2 = LieRank::finite(2), L3 = LieRank::finite(3), L4 = LieRank::finite(4);

const RelationInstance* find(const std::vector<RelationInstance>& rels, const std::string& family, int r, const ResidueSequence& i) {
  for (const auto& rel : rels)
    if (rel.family == family && rel.r == r && rel.i == i) return &rel;
  return nullptr;
}

std::vector<std::string> term_strings(const RelationInstance& rel) {
  std::vector<std::string> out;
  for (const auto& t : rel.terms) {
    std::string s = std::to_string(t.coefficient);
    for (const auto& l : t.letters) s += " " + l.to_string();
    out.push_back(s);
  }
  return out;
}

Support full_support(int n, const LieRank& rank, int bound = 0) {
  auto all = all_sequences(n, rank, bound);
  return Support(std::set<ResidueSequence>(all.begin(), all.end()));
}

}  // namespace

TEST(Support, OrbitClosure) {
  auto s = Support::orbit_closure({{0, 1, 1}});
  EXPECT_EQ(s.size(), 3u);
  EXPECT_TRUE(s.is_closed());
  EXPECT_TRUE(s.contains({1, 0, 1}));
  EXPECT_FALSE(Support(std::set<ResidueSequence>{{0, 1}}).is_closed());
  EXPECT_THROW(Support(std::set<ResidueSequence>{{0, 1}, {0}}), std::invalid_argument);
}

TEST(Instantiate, QuadraticEndCase) {
  auto rels = instantiate_relations(2, WeightVector::of({0}), L2, Support::orbit_closure({{0, 1}}));
  const auto* q = find(rels, "quadratic", 1, {0, 1});
  ASSERT_NE(q, nullptr);
  EXPECT_EQ(term_strings(*q), (std::vector<std::string>{"1 psi1 psi1 e(0,1)", "-1 x1 e(0,1)", "-1 x2 x2 e(0,1)"}));
  const auto* q2 = find(rels, "quadratic", 1, {1, 0});
  ASSERT_NE(q2, nullptr);
  EXPECT_EQ(term_strings(*q2), (std::vector<std::string>{"1 psi1 psi1 e(1,0)", "-1 x1 x1 e(1,0)", "-1 x2 e(1,0)"}));
}

TEST(Instantiate, BraidErrorCase) {
  for (int ell = 2; ell <= 4; ++ell) {
    auto rels = instantiate_relations(3, WeightVector::of({1}), LieRank::finite(ell), Support::orbit_closure({{1, 0, 1}}));
    const auto* b = find(rels, "braid", 1, {1, 0, 1});
    ASSERT_NE(b, nullptr);
    EXPECT_EQ(term_strings(*b), (std::vector<std::string>{"1 psi2 psi1 psi2 e(1,0,1)", "-1 psi1 psi2 psi1 e(1,0,1)", "-1 x1 e(1,0,1)",
                                                          "-1 x3 e(1,0,1)"}));
  }
  // The mirrored pattern at the other end of the diagram.
  auto rels = instantiate_relations(3, WeightVector::of({3}), L4, Support::orbit_closure({{3, 4, 3}}));
  ASSERT_NE(find(rels, "braid", 1, {3, 4, 3}), nullptr);
  EXPECT_EQ(term_strings(*find(rels, "braid", 1, {3, 4, 3})).size(), 4u);
  // Interior pattern: the error is the identity.
  auto rels2 = instantiate_relations(3, WeightVector::of({2}), L4, Support::orbit_closure({{2, 1, 2}}));
  ASSERT_NE(find(rels2, "braid", 1, {2, 1, 2}), nullptr);
  EXPECT_EQ(term_strings(*find(rels2, "braid", 1, {2, 1, 2})).back(), "-1 e(2,1,2)");
  // (1,2,1) with ell = 4: the middle residue is not an end.
  auto rels3 = instantiate_relations(3, WeightVector::of({1}), L4, Support::orbit_closure({{1, 2, 1}}));
  ASSERT_NE(find(rels3, "braid", 1, {1, 2, 1}), nullptr);
  EXPECT_EQ(term_strings(*find(rels3, "braid", 1, {1, 2, 1})).back(), "-1 e(1,2,1)");
  // (0,1,0): the outer residues are the end, the middle one is not.
  auto rels4 = instantiate_relations(3, WeightVector::of({0}), L4, Support::orbit_closure({{0, 1, 0}}));
  ASSERT_NE(find(rels4, "braid", 1, {0, 1, 0}), nullptr);
  EXPECT_EQ(term_strings(*find(rels4, "braid", 1, {0, 1, 0})).back(), "-1 e(0,1,0)");
}

TEST(Instantiate, EqualResiduesSquareToZero) {
  for (int ell : {2, 3, 5}) {
    for (int a = 0; a <= ell; ++a) {
      auto rels = instantiate_relations(2, WeightVector::of({a}), LieRank::finite(ell), Support::orbit_closure({{a, a}}));
      const auto* q = find(rels, "quadratic", 1, {a, a});
      ASSERT_NE(q, nullptr);
      EXPECT_EQ(q->terms.size(), 1u);
    }
  }
}

TEST(Instantiate, CyclotomicExponentIsTheWeightPairing) {
  auto rels = instantiate_relations(2, WeightVector::of({1, 1}), L3, Support::orbit_closure({{1, 2}, {0, 3}}));
  EXPECT_EQ(term_strings(*find(rels, "cyclotomic", 0, {1, 2})), (std::vector<std::string>{"1 x1 x1 e(1,2)"}));
  EXPECT_EQ(term_strings(*find(rels, "cyclotomic", 0, {0, 3})), (std::vector<std::string>{"1 e(0,3)"}));
}

TEST(Instantiate, RelationCountFormula) {
  for (int n = 1; n <= 5; ++n) {
    auto support = full_support(n, L2);
    auto rels = instantiate_relations(n, WeightVector::of({1}), L2, support);
    const std::size_t per = 2 + n + n * (n - 1) / 2 + (n - 1) * (n + 2) + (n >= 3 ? (n - 3) * (n - 2) / 2 : 0) + (n >= 2 ? n - 2 : 0);
    EXPECT_EQ(rels.size(), 1 + support.size() * per) << "n=" << n;
    auto again = instantiate_relations(n, WeightVector::of({1}), L2, support);
    for (std::size_t k = 0; k < rels.size(); ++k) EXPECT_EQ(rels[k].describe(), again[k].describe());
  }
}

TEST(Instantiate, RejectsBadSupports) {
  EXPECT_THROW(instantiate_relations(2, WeightVector::of({0}), L2, Support(std::set<ResidueSequence>{{0, 1}})), std::invalid_argument);
  EXPECT_THROW(instantiate_relations(3, WeightVector::of({0}), L2, Support::orbit_closure({{0, 1}})), std::invalid_argument);
  EXPECT_THROW(instantiate_relations(2, WeightVector::of({0}), L2, Support::orbit_closure({{0, 3}})), std::invalid_argument);
}

TEST(Homogeneity, FullSupportsOnSmallRanks) {
  for (int n = 1; n <= 4; ++n) {
    for (int ell = 2; ell <= 4; ++ell) {
      const auto rank = LieRank::finite(ell);
      auto rels = instantiate_relations(n, WeightVector::of({0, 1}), rank, full_support(n, rank));
      auto h = homogeneity_check(rels, rank);
      EXPECT_TRUE(h.homogeneous) << "n=" << n << " ell=" << ell << " first offender "
                                 << (h.offending.empty() ? std::string() : rels[h.offending.front()].describe());
    }
    const auto linf = LieRank::infinite();
    EXPECT_TRUE(homogeneity_check(instantiate_relations(n, WeightVector::of({0}), linf, full_support(n, linf, 4)), linf).homogeneous);
  }
}

TEST(Homogeneity, QuadraticEndCaseDegrees) {
  auto rels = instantiate_relations(2, WeightVector::of({0}), L2, Support::orbit_closure({{0, 1}}));
  for (const auto& t : find(rels, "quadratic", 1, {0, 1})->terms) EXPECT_EQ(word_degree(t, L2), 4);
}

TEST(Homogeneity, DeltaTermForcesTheNegativePsiDegree) {
  auto rels = instantiate_relations(2, WeightVector::of({1}), L3, Support::orbit_closure({{1, 1}}));
  const auto* rel = find(rels, "x-psi-left", 1, {1, 1});
  ASSERT_NE(rel, nullptr);
  ASSERT_EQ(rel->terms.size(), 3u);
  for (const auto& t : rel->terms) EXPECT_EQ(word_degree(t, L3), 0);
  // With the opposite sign the first two terms would have degree 4 against 0.
  EXPECT_EQ(generator_degree(Generator::x(1), {1, 1}, L3) - generator_degree(Generator::psi(1), {1, 1}, L3), 4);
}

TEST(Homogeneity, DetectsAnInhomogeneousRelation) {
  RelationInstance bad{"made-up", 1, 0, {0, 1}, {{1, {Letter::x(1), Letter::e({0, 1})}}, {1, {Letter::e({0, 1})}}}};
  auto h = homogeneity_check({bad}, L2);
  EXPECT_FALSE(h.homogeneous);
  EXPECT_EQ(h.offending, (std::vector<std::size_t>{0}));
}

TEST(Verify, ZeroDimensionalModule) {
  Representation<RationalField> rep(RationalField{}, L3, WeightVector::of({2}), 3, 0);
  auto report = verify_representation(rep);
  EXPECT_TRUE(report.ok());
}

TEST(Verify, OneDimensionalOtherwiseCaseViolated) {
  Representation<RationalField> rep(RationalField{}, L3, WeightVector::of({2}), 2, 1);
  rep.idempotents.emplace(ResidueSequence{2, 0}, Matrix<RationalField>::identity(RationalField{}, 1));
  auto report = verify_representation(rep);
  ASSERT_FALSE(report.ok());
  auto rels = instantiate_relations(2, rep.weight, L3, Support::orbit_closure({{2, 0}}));
  bool quadratic = false;
  for (const auto& v : report.violations)
    if (v.relation < rels.size() && rels[v.relation].family == "quadratic" && rels[v.relation].i == ResidueSequence{2, 0}) quadratic = true;
  EXPECT_TRUE(quadratic);
}

TEST(Verify, MissingIdempotentMassIsReported) {
  // e(i) = 0 everywhere on a 1-dimensional space: completeness fails.
  Representation<PrimeField> rep(PrimeField(5), L2, WeightVector::of({1}), 1, 1);
  rep.idempotents.emplace(ResidueSequence{1}, Matrix<PrimeField>(PrimeField(5), 1, 1));
  EXPECT_FALSE(verify_representation(rep).ok());
}

TEST(Verify, NonOrthogonalIdempotentsAreReported) {
  // Two rank-one idempotents with the same image sum to a non-identity.
  RationalField q;
  Representation<RationalField> rep(q, L2, WeightVector::of({1}), 1, 2);
  Matrix<RationalField> e1(q, 2, 2), e2(q, 2, 2);
  e1(0, 0) = 1;
  e2(0, 0) = 1;
  e2(0, 1) = 1;
  rep.idempotents.emplace(ResidueSequence{1}, e1);
  rep.idempotents.emplace(ResidueSequence{0}, e2);
  EXPECT_FALSE(verify_representation(rep).ok());
}

TEST(Verify, DirectSumOfIrreduciblesOnSemisimplePoints) {
  std::size_t checked = 0;
  for (const auto& p : klrc::testing::desk_grid(4)) {
    if (!is_semisimple(p.kappa, p.n, p.rank).verdict) continue;
    auto sum = build_direct_sum(p.n, p.kappa, p.rank, PrimeField(7));
    auto report = verify_representation(sum.rep);
    EXPECT_TRUE(report.ok()) << p.rank.to_string() << " " << p.kappa.to_string() << " " << p.n;
    ++checked;
  }
  EXPECT_GT(checked, 10u);
}
