#include <gtest/gtest.h>

#include <set>

#include "test_support.hpp"

using namespace klrc;
using klrc::testing::make_rng;
using klrc::testing::uniform;

namespace {

const LieRank L2 = LieRank::finite(2), L3 = LieRank::finite(3), L4 = LieRank::finite(4);

Multipartition mp(const std::string& s) { return parse_multipartition(s); }

std::set<ResidueSequence> seqs(std::initializer_list<ResidueSequence> l) { return {l}; }

}  // namespace

TEST(Multipartition, ParseNormalizeAndPrint) {
  EXPECT_EQ(mp("8,3,2|5,3,1").to_string(), "8,3,2|5,3,1");
  EXPECT_EQ(mp("-|1,1").to_string(), "-|1,1");
  EXPECT_EQ(mp("-|1,1").size(), 2);
  EXPECT_EQ(mp("2,1,0").to_string(), "2,1");
  EXPECT_THROW(mp("2,a"), std::invalid_argument);
  EXPECT_THROW(mp("2||1"), std::invalid_argument);
  EXPECT_THROW(mp("1,2"), std::invalid_argument);
}

TEST(EnumerateMultipartitions, Examples) {
  auto two = enumerate_multipartitions(2, 1);
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0].to_string(), "2");
  EXPECT_EQ(two[1].to_string(), "1,1");
  auto empty = enumerate_multipartitions(0, 3);
  ASSERT_EQ(empty.size(), 1u);
  EXPECT_EQ(empty[0].to_string(), "-|-|-");
  EXPECT_EQ(enumerate_multipartitions(3, 2).size(), 10u);
}

TEST(EnumerateMultipartitions, CountsMatchPartitionConvolution) {
  // p(n) for n = 0..7, and the level-l counts by convolution.
  const std::vector<std::size_t> p{1, 1, 2, 3, 5, 7, 11, 15};
  for (int n = 0; n <= 7; ++n) {
    EXPECT_EQ(enumerate_partitions(n).size(), p[static_cast<std::size_t>(n)]);
    std::size_t two = 0;
    for (int a = 0; a <= n; ++a) two += p[static_cast<std::size_t>(a)] * p[static_cast<std::size_t>(n - a)];
    auto list = enumerate_multipartitions(n, 2);
    EXPECT_EQ(list.size(), two);
    EXPECT_EQ(std::set<Multipartition>(list.begin(), list.end()).size(), list.size());
  }
}

TEST(Dominance, Examples) {
  EXPECT_TRUE(dominates(mp("2,1"), mp("2,1")));
  EXPECT_TRUE(dominates(mp("2|-"), mp("1,1|-")));
  EXPECT_FALSE(dominates(mp("1|1"), mp("2|-")));
  EXPECT_TRUE(dominates(mp("2|-"), mp("1|1")));
  EXPECT_THROW(dominates(mp("2"), mp("1")), std::invalid_argument);
  EXPECT_THROW(dominates(mp("2"), mp("2|-")), std::invalid_argument);
}

TEST(Dominance, IsAPartialOrderExhaustively) {
  for (int level = 1; level <= 2; ++level)
    for (int n = 1; n <= 5; ++n) {
      auto all = enumerate_multipartitions(n, level);
      for (const auto& a : all) {
        EXPECT_TRUE(dominates(a, a));
        for (const auto& b : all) {
          if (a != b && dominates(a, b)) {
            EXPECT_FALSE(dominates(b, a)) << a.to_string() << " " << b.to_string();
          }
          if (!dominates(a, b)) continue;
          for (const auto& c : all)
            if (dominates(b, c)) {
              EXPECT_TRUE(dominates(a, c));
            }
        }
      }
    }
}

TEST(Dominance, EnumerationOrderIsALinearExtension) {
  for (int n = 1; n <= 5; ++n) {
    auto all = enumerate_multipartitions(n, 2);
    for (std::size_t a = 0; a < all.size(); ++a)
      for (std::size_t b = a + 1; b < all.size(); ++b) EXPECT_FALSE(dominates(all[b], all[a]) && all[a] != all[b]);
  }
}

TEST(Nodes, AddableAndRemovable) {
  auto a0 = addable_nodes(Multipartition::empty(1));
  ASSERT_EQ(a0.size(), 1u);
  EXPECT_TRUE((a0[0] == Node{1, 1, 1}));
  auto a1 = addable_nodes(mp("1"));
  EXPECT_EQ(a1, (std::vector<Node>{{1, 2, 1}, {2, 1, 1}}));
  auto a2 = addable_nodes(mp("2,1|-"));
  EXPECT_EQ(a2, (std::vector<Node>{{1, 3, 1}, {2, 2, 1}, {3, 1, 1}, {1, 1, 2}}));
  EXPECT_EQ(removable_nodes(mp("2,1|-")), (std::vector<Node>{{1, 2, 1}, {2, 1, 1}}));
}

TEST(Residue, WorkedExample) {
  const Multicharge k({1, 4});
  EXPECT_EQ(residue({1, 1, 1}, k, L3), 1);
  EXPECT_EQ(residue({1, 4, 1}, k, L3), 2);
  EXPECT_EQ(residue({3, 1, 2}, k, L3), 2);
  auto i = residue_sequence(initial_tableau(mp("8,3,2|5,3,1")), k, L3);
  EXPECT_EQ(ResidueSequence(i.begin(), i.begin() + 8), (ResidueSequence{1, 2, 3, 2, 1, 0, 1, 2}));
}

TEST(InitialTableau, Examples) {
  EXPECT_EQ(initial_tableau(mp("2,1")).rows(), (Tableau::Rows{{{1, 2}, {3}}}));
  EXPECT_EQ(initial_tableau(mp("1|1")).rows(), (Tableau::Rows{{{1}}, {{2}}}));
  EXPECT_EQ(initial_tableau(mp("2|1,1")).rows(), (Tableau::Rows{{{1, 2}}, {{3}, {4}}}));
}

TEST(EnumerateStandard, Examples) {
  EXPECT_EQ(enumerate_standard(mp("5")).size(), 1u);
  EXPECT_EQ(enumerate_standard(mp("2,1")).size(), 2u);
  EXPECT_EQ(enumerate_standard(mp("2,1,1")).size(), 3u);
}

TEST(EnumerateStandard, CountsMatchHookLengthOracle) {
  auto rng = make_rng(31);
  for (int trial = 0; trial < 80; ++trial) {
    auto lambda = klrc::testing::random_multipartition(rng, uniform(rng, 1, 7), uniform(rng, 1, 3));
    auto tabs = enumerate_standard(lambda);
    EXPECT_EQ(static_cast<std::int64_t>(tabs.size()), klrc::testing::standard_count_oracle(lambda)) << lambda.to_string();
    EXPECT_EQ(std::set<Tableau>(tabs.begin(), tabs.end()).size(), tabs.size());
    for (const auto& t : tabs) EXPECT_TRUE(t.is_standard());
    EXPECT_EQ(tabs.front(), initial_tableau(lambda));
    for (std::size_t a = 0; a < tabs.size(); ++a)
      for (std::size_t b = a + 1; b < tabs.size(); ++b) EXPECT_FALSE(tableau_strictly_dominates(tabs[b], tabs[a]));
  }
}

TEST(EnumerateStandard, RowStrictCountIsMultinomial) {
  // Row-strict fillings: n! / prod(row lengths)!.
  for (const char* s : {"2,1", "3,2|1", "2,2,1", "1|1|1"}) {
    auto lambda = mp(s);
    std::int64_t expected = klrc::testing::factorial_oracle(lambda.size());
    for (const auto& comp : lambda.components())
      for (int part : comp) expected /= klrc::testing::factorial_oracle(part);
    EXPECT_EQ(static_cast<std::int64_t>(enumerate_row_strict(lambda).size()), expected) << s;
  }
}

TEST(ResidueSequence, Examples) {
  EXPECT_EQ(residue_sequence(initial_tableau(mp("3")), Multicharge({0}), L2), (ResidueSequence{0, 1, 2}));
  EXPECT_EQ(residue_sequence(initial_tableau(mp("2,1,1")), Multicharge({1}), L2), (ResidueSequence{1, 2, 0, 1}));
}

TEST(TableauWord, Examples) {
  auto lambda = mp("1|1");
  auto w0 = tableau_word(initial_tableau(lambda));
  EXPECT_TRUE(w0.permutation.is_identity());
  EXPECT_TRUE(w0.word.empty());
  Tableau t(Tableau::Rows{{{2}}, {{1}}});
  auto w1 = tableau_word(t);
  EXPECT_EQ(w1.permutation.image(), (std::vector<int>{2, 1}));
  EXPECT_EQ(w1.word, (std::vector<int>{1}));
  EXPECT_EQ(tableau_word(initial_tableau(mp("2,1")).swapped(2)).word, (std::vector<int>{2}));
}

TEST(TableauWord, ReducedAndReproducesTheTableau) {
  auto rng = make_rng(32);
  for (int trial = 0; trial < 60; ++trial) {
    auto lambda = klrc::testing::random_multipartition(rng, uniform(rng, 1, 6), uniform(rng, 1, 2));
    const auto init = initial_tableau(lambda);
    for (const auto& t : enumerate_standard(lambda)) {
      auto tw = tableau_word(t);
      EXPECT_EQ(init.permuted(tw.permutation), t);
      EXPECT_EQ(static_cast<int>(tw.word.size()), klrc::testing::inversions(tw.permutation));
      EXPECT_EQ(Permutation::from_word(lambda.size(), tw.word), tw.permutation);
      // Leftmost descent: each letter is the smallest descent of what remains.
      Permutation rest = tw.permutation;
      for (int r : tw.word) {
        EXPECT_EQ(rest.smallest_left_descent(), r);
        rest = rest.left_simple(r);
      }
      EXPECT_TRUE(rest.is_identity());
    }
  }
}

TEST(Garnir, Examples) {
  auto g = garnir_tableau(mp("1,1"), {1, 1, 1});
  EXPECT_EQ(g.rows(), (Tableau::Rows{{{2}, {1}}}));
  auto belt = garnir_belt(mp("2,2"), {1, 2, 1});
  std::set<Node> b(belt.begin(), belt.end());
  EXPECT_EQ(b, (std::set<Node>{{1, 2, 1}, {2, 1, 1}, {2, 2, 1}}));
  EXPECT_THROW(garnir_tableau(mp("2"), {1, 1, 1}), std::invalid_argument);
  EXPECT_TRUE(garnir_nodes(mp("4|3")).empty());
}

TEST(Garnir, TableauIsRowStrictAndAgreesOffTheBelt) {
  for (const char* s : {"2,2", "3,2,1", "2,1|2,2", "3,3"}) {
    auto lambda = mp(s);
    auto init = initial_tableau(lambda);
    for (const auto& a : garnir_nodes(lambda)) {
      auto g = garnir_tableau(lambda, a);
      EXPECT_TRUE(g.is_row_strict());
      EXPECT_FALSE(g.is_standard());
      auto belt = garnir_belt(lambda, a);
      for (const auto& node : lambda.nodes())
        if (std::find(belt.begin(), belt.end(), node) == belt.end()) {
          EXPECT_EQ(g.at(node), init.at(node));
        }
    }
  }
}

TEST(TableauDominance, Examples) {
  auto tabs = enumerate_standard(mp("2,1"));
  const auto init = initial_tableau(mp("2,1"));
  for (const auto& t : tabs) {
    EXPECT_TRUE(tableau_dominates(t, t));
    EXPECT_TRUE(tableau_dominates(init, t));
  }
  Tableau column(Tableau::Rows{{{1, 3}, {2}}});
  EXPECT_EQ(least_dominant(tabs), column);
  EXPECT_THROW(tableau_dominates(init, initial_tableau(mp("3"))), std::invalid_argument);
}

TEST(LeastDominant, HookAndColumnShapesHaveAUniqueMinimum) {
  for (const char* s : {"2,1,1", "3,1,1", "1,1,1|1", "1|1,1", "4,1,1"}) {
    auto tabs = enumerate_standard(mp(s));
    auto t = least_dominant(tabs);
    ASSERT_TRUE(t.has_value()) << s;
    for (const auto& u : tabs) EXPECT_TRUE(tableau_dominates(u, *t));
  }
}

TEST(ResidueSequencesOfLevel, Examples) {
  EXPECT_EQ(residue_sequences_of_level(1, Multicharge({2}), L3), seqs({{2}}));
  EXPECT_EQ(residue_sequences_of_level(3, Multicharge({2}), L3), seqs({{2, 3, 2}, {2, 3, 1}, {2, 1, 3}, {2, 1, 0}}));
  EXPECT_EQ(residue_sequences_of_level(2, Multicharge({0}), L2), seqs({{0, 1}}));
}

TEST(Neighbourres, Examples) {
  for (auto reading : {NeighbourresReading::Literal, NeighbourresReading::Amended}) {
    EXPECT_TRUE(neighbourres_check({2, 1, 0}, WeightVector::of({2}), L3, reading));
    EXPECT_FALSE(neighbourres_check({2, 2, 1}, WeightVector::of({2}), L3, reading));
    EXPECT_FALSE(neighbourres_check({2, 2}, WeightVector::of({2, 2}), L3, reading));
    EXPECT_FALSE(neighbourres_check({1, 2, 3}, WeightVector::of({2}), L3, reading));
  }
}

TEST(Neighbourres, ReadingsDifferWhereTheFirstColumnFolds) {
  // ell = 4, kappa = (2), n = 5: the column 2,1,0,1,2 folds at 0.
  const auto w = WeightVector::of({2});
  EXPECT_FALSE(neighbourres_check({2, 1, 0, 1, 2}, w, L4));
  EXPECT_TRUE(neighbourres_check({2, 1, 0, 1, 2}, w, L4, NeighbourresReading::Amended));
  EXPECT_TRUE(neighbourres_check({2, 1, 0, 1, 0}, w, L4));
  EXPECT_FALSE(neighbourres_check({2, 1, 0, 1, 0}, w, L4, NeighbourresReading::Amended));
  // ell = 2: a repeated 1 needs only one of the ends in between.
  EXPECT_FALSE(neighbourres_check({1, 0, 1}, WeightVector::of({1}), L2));
  EXPECT_TRUE(neighbourres_check({1, 0, 1}, WeightVector::of({1}), L2, NeighbourresReading::Amended));
}

// Points of G where (SS2) holds with equality and a first row or column of
// length n reaches an end residue and returns.
static bool folds_back(const klrc::testing::DeskPoint& p) {
  for (auto c : p.kappa.bar(p.rank))
    if (p.n == 2 * c + 1 || p.n == 2 * (p.rank.ell() - c) + 1) return true;
  return false;
}

// Exhaustive checks on the semisimple part of the desk grid: the predicate
// agrees with brute force over all of I^n; t -> i^t is injective; and an
// adjacent swap of a neighbouring pair leaves I^n_Lambda.
TEST(SemisimpleGrid, NeighbourresResidueInjectivityAndLeaveResidue) {
  std::size_t points = 0, literal_mismatches = 0;
  for (const auto& p : klrc::testing::desk_grid(5)) {
    if (!is_semisimple(p.kappa, p.n, p.rank).verdict) continue;
    ++points;
    const auto w = p.kappa.weight(p.rank);
    const auto brute = residue_sequences_of_level(p.n, p.kappa, p.rank);
    std::set<ResidueSequence> literal, amended;
    for (const auto& i : all_sequences(p.n, p.rank)) {
      if (neighbourres_check(i, w, p.rank)) literal.insert(i);
      if (neighbourres_check(i, w, p.rank, NeighbourresReading::Amended)) amended.insert(i);
    }
    EXPECT_EQ(amended, brute) << "ell " << p.rank.to_string() << " kappa " << p.kappa.to_string() << " n " << p.n;
    if (literal != brute) {
      ++literal_mismatches;
      EXPECT_TRUE(folds_back(p)) << "ell " << p.rank.to_string() << " kappa " << p.kappa.to_string() << " n " << p.n;
    }

    std::set<ResidueSequence> seen;
    std::size_t count = 0;
    for (const auto& lambda : enumerate_multipartitions(p.n, p.kappa.level()))
      for (const auto& t : enumerate_standard(lambda)) {
        seen.insert(residue_sequence(t, p.kappa, p.rank));
        ++count;
      }
    EXPECT_EQ(seen.size(), count);

    for (const auto& i : brute)
      for (int r = 1; r < p.n; ++r) {
        if (std::abs(i[static_cast<std::size_t>(r - 1)] - i[static_cast<std::size_t>(r)]) == 1) {
          EXPECT_FALSE(brute.count(swap_places(i, r)));
        }
      }
  }
  EXPECT_GE(points, 16u);
  EXPECT_EQ(literal_mismatches, 2u);
}

TEST(ResidueBound, InfiniteRankEnumerationStaysInsideTheBound) {
  const auto linf = LieRank::infinite();
  for (int a = 0; a <= 4; ++a)
    for (int n = 1; n <= 5; ++n) {
      Multicharge k({a});
      const int bound = residue_bound(n, k, linf);
      for (const auto& i : residue_sequences_of_level(n, k, linf))
        for (auto r : i) EXPECT_LT(r, bound);
    }
  EXPECT_THROW(all_sequences(2, linf), std::invalid_argument);
}
