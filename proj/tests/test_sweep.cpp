#include <gtest/gtest.h>

#include <map>

#include "klrc/sweep.hpp"
#include "test_support.hpp"

using namespace klrc;

namespace {

GridSpec small_grid() {
  GridSpec g;
  g.ranks = {LieRank::finite(2), LieRank::finite(3)};
  g.levels = {1};
  g.ns = {2, 3, 4, 5};
  g.fields = {"p5"};
  return g;
}

}  // namespace

TEST(GridPoints, CountAndCanonicalOrder) {
  auto g = small_grid();
  g.levels = {1, 2};
  g.fields = {"q", "p7"};
  auto pts = grid_points(g);
  // (3 + 9 charges at ell = 2) + (4 + 16 at ell = 3), times 4 values of n and 2 fields.
  EXPECT_EQ(pts.size(), (3u + 9u + 4u + 16u) * 4u * 2u);
  EXPECT_EQ(pts.front().rank.ell(), 2);
  EXPECT_EQ(pts.front().kappa.to_string(), "0");
  EXPECT_EQ(pts.front().n, 2);
  EXPECT_EQ(pts.front().field, "q");
  EXPECT_EQ(pts[1].field, "p7");
  EXPECT_EQ(pts[2].n, 3);
  EXPECT_EQ(pts.back().rank.ell(), 3);
  EXPECT_EQ(pts.back().kappa.to_string(), "3,3");
}

TEST(GridPoints, EmptyExplicitAndInfinite) {
  GridSpec empty;
  EXPECT_TRUE(grid_points(empty).empty());
  auto g = small_grid();
  g.charges = std::vector<Multicharge>{Multicharge({1, 1}), Multicharge({2})};
  g.levels = {2};
  auto pts = grid_points(g);
  ASSERT_EQ(pts.size(), 2u * 4u);
  for (const auto& p : pts) EXPECT_EQ(p.kappa.to_string(), "1,1");
  GridSpec inf;
  inf.ranks = {LieRank::infinite()};
  inf.levels = {1};
  inf.ns = {2};
  inf.fields = {"q"};
  inf.max_infinite_charge = 5;
  EXPECT_EQ(grid_points(inf).size(), 6u);
}

TEST(GridPoints, Caps) {
  auto g = small_grid();
  g.ranks = {LieRank::finite(kSweepMaxEll + 1)};
  EXPECT_THROW(grid_points(g), std::invalid_argument);
  g = small_grid();
  g.levels = {kSweepMaxLevel + 1};
  EXPECT_THROW(grid_points(g), std::invalid_argument);
  g = small_grid();
  g.ns = {kSweepMaxN + 1};
  EXPECT_THROW(grid_points(g), std::invalid_argument);
  g = small_grid();
  g.ns = {0};
  EXPECT_THROW(grid_points(g), std::invalid_argument);
  g = small_grid();
  g.fields = {"p9"};
  EXPECT_THROW(grid_points(g), std::invalid_argument);
}

TEST(EvaluatePoint, RepeatedChargeRoutesToTheRepeatWitness) {
  auto j = evaluate_point(GridPoint{LieRank::finite(3), Multicharge({1, 1}), 2, "q"});
  EXPECT_FALSE(j["verdict"].get<bool>());
  EXPECT_EQ(j["witness"], "repeat");
  EXPECT_TRUE(j["certified"].get<bool>());
  EXPECT_TRUE(j["ok"].get<bool>());
}

TEST(EvaluatePoint, SemisimplePointCarriesMatrixUnits) {
  auto j = evaluate_point(GridPoint{LieRank::finite(3), Multicharge({2}), 3, "p7"});
  EXPECT_TRUE(j["verdict"].get<bool>());
  EXPECT_EQ(j["algebra_dimension"], 6);
  EXPECT_TRUE(j["ok"].get<bool>());
}

TEST(RunSweep, EveryPointGetsOneVerdictOrOneWitness) {
  auto results = run_sweep(grid_points(small_grid()), 2);
  std::map<std::string, int> kinds;
  for (const auto& j : results) {
    EXPECT_TRUE(j["ok"].get<bool>()) << j.dump();
    if (j["verdict"].get<bool>()) {
      EXPECT_FALSE(j.contains("witness"));
    } else {
      ASSERT_TRUE(j.contains("witness"));
      ++kinds[j["witness"].get<std::string>()];
    }
  }
  EXPECT_GT(kinds["boundary"], 0);
  EXPECT_GT(kinds["ss2fail"], 0);
}

TEST(RunSweep, ResultsDoNotDependOnTheThreadCount) {
  auto pts = grid_points(small_grid());
  auto one = run_sweep(pts, 1), three = run_sweep(pts, 3);
  ASSERT_EQ(one.size(), three.size());
  for (std::size_t k = 0; k < one.size(); ++k) EXPECT_EQ(one[k].dump(), three[k].dump());
  EXPECT_TRUE(run_sweep({}, 4).empty());
}
