#include "placebench/hpwl.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "placebench/connectivity.hpp"
#include "placebench/rng.hpp"
#include "support.hpp"

using namespace placebench;
using placebench::testing::PlacedNetlist;
using placebench::testing::add_cell;
using placebench::testing::add_net_over;
using placebench::testing::point_net;

namespace {

// Oracle: minimum half-perimeter over all rectangles holding t unit cells.
int min_hpwl_by_packing(long t) {
  int best = INT_MAX;
  for (long r = 1; r <= t; ++r) {
    long s = (t + r - 1) / r;
    best = std::min<long>(best, r + s - 2);
  }
  return best;
}

// Oracle: count multisets of size n over {n,s,e,w} by direct enumeration.
long p4_by_enumeration(int n) {
  long count = 0;
  for (int a = 0; a <= n; ++a)
    for (int b = 0; a + b <= n; ++b)
      for (int c = 0; a + b + c <= n; ++c) ++count;  // d is forced
  return count;
}

}  // namespace

TEST(Hpwl, BoundingBoxHalfPerimeter) {
  EXPECT_EQ(hpwl_cells(std::vector<GridPoint>{{0, 0}, {3, 4}}), 7);
  EXPECT_EQ(hpwl_cells(std::vector<GridPoint>{{5, 5}, {5, 5}, {5, 5}}), 0);
  EXPECT_EQ(hpwl_cells(std::vector<GridPoint>{{0, 0}, {1, 2}, {4, 1}}), 6);
}

TEST(Hpwl, RealFrameMatchesCells) {
  PlacedNetlist f = point_net({{0, 0}, {3, 4}});
  EXPECT_DOUBLE_EQ(hpwl(f.nl, f.pl, f.nl.nets[0]), 7.0);
  f = point_net({{0, 0}, {1, 2}, {4, 1}});
  EXPECT_DOUBLE_EQ(hpwl(f.nl, f.pl, f.nl.nets[0]), 6.0);
}

TEST(Hpwl, UnplacedPinNamesModule) {
  PlacedNetlist f;
  int a = add_cell(f, 0, 0, "left");
  Module m;
  m.name = "floating";
  int b = f.nl.add_module(m);
  f.pl.resize(2);
  add_net_over(f, {a, b});
  try {
    hpwl(f.nl, f.pl, f.nl.nets[0]);
    FAIL() << "expected error for unplaced pin";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("floating"), std::string::npos);
  }
}

TEST(Hpwl, TotalSumsInNetOrder) {
  PlacedNetlist f;
  int a = add_cell(f, 0, 0), b = add_cell(f, 3, 4);
  int c = add_cell(f, 10, 0), d = add_cell(f, 11, 2), e = add_cell(f, 14, 1);
  add_net_over(f, {a, b});
  add_net_over(f, {c, d, e});
  EXPECT_DOUBLE_EQ(total_hpwl(f.nl, f.pl), 13.0);

  Netlist empty;
  Placement none;
  EXPECT_DOUBLE_EQ(total_hpwl(empty, none), 0.0);
}

TEST(Hpwl, TwoPinNetEqualsManhattan) {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    GridPoint a{int(rng.range(0, 50)), int(rng.range(0, 50))};
    GridPoint b{int(rng.range(0, 50)), int(rng.range(0, 50))};
    EXPECT_EQ(hpwl_cells(std::vector<GridPoint>{a, b}), manhattan(a, b));
  }
}

TEST(MinHpwl, PaperAndDerivedValues) {
  EXPECT_EQ(min_hpwl(7), 4);
  EXPECT_EQ(min_hpwl(1), 0);
  EXPECT_EQ(min_hpwl(5), 3);
  EXPECT_EQ(min_hpwl(12), 5);
  EXPECT_THROW(min_hpwl(0), Error);
}

TEST(MinHpwl, MatchesPackingOracleUpTo10000) {
  for (long t = 1; t <= 10000; ++t)
    ASSERT_EQ(min_hpwl(t), min_hpwl_by_packing(t)) << "t = " << t;
}

TEST(P4Sequences, PaperAndDerivedValues) {
  EXPECT_EQ(p4_sequences(1), 4);
  EXPECT_EQ(p4_sequences(0), 1);
  EXPECT_EQ(p4_sequences(2), 10);
  EXPECT_EQ(p4_sequences(3), 20);
  EXPECT_THROW(p4_sequences(-1), Error);
}

TEST(P4Sequences, MatchesEnumerationUpTo12) {
  for (int n = 0; n <= 12; ++n)
    EXPECT_EQ(p4_sequences(n), p4_by_enumeration(n)) << "N = " << n;
}

TEST(EquivalentEdges, TwoPinNetIsItsOwnEdge) {
  std::vector<GridPoint> pins{{0, 0}, {2, 3}};
  auto edges = equivalent_edges(std::span<const GridPoint>(pins));
  ASSERT_EQ(edges.size(), 1u);
  EXPECT_EQ(Rect::spanning(edges[0].a, edges[0].b),
            Rect::spanning({0, 0}, {2, 3}));
}

TEST(EquivalentEdges, OneTwoAndZeroEdgeCases) {
  std::vector<GridPoint> one{{0, 0}, {2, 3}, {1, 1}};
  auto e1 = equivalent_edges(std::span<const GridPoint>(one));
  ASSERT_EQ(e1.size(), 1u);
  EXPECT_EQ(Rect::spanning(e1[0].a, e1[0].b), Rect::spanning({0, 0}, {2, 3}));

  std::vector<GridPoint> two{{0, 0}, {2, 3}, {0, 3}, {2, 0}};
  EXPECT_EQ(equivalent_edges(std::span<const GridPoint>(two)).size(), 2u);

  std::vector<GridPoint> zero{{0, 0}, {0, 3}, {2, 1}};
  EXPECT_TRUE(equivalent_edges(std::span<const GridPoint>(zero)).empty());
}

TEST(EquivalentEdges, ReturnedPairSpansNetBox) {
  Rng rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<GridPoint> pins;
    int degree = int(rng.range(2, 6));
    for (int i = 0; i < degree; ++i)
      pins.push_back({int(rng.range(0, 8)), int(rng.range(0, 8))});
    long net_hpwl = hpwl_cells(pins);
    auto edges = equivalent_edges(std::span<const GridPoint>(pins));
    EXPECT_LE(edges.size(), 2u);
    for (const auto& e : edges) {
      EXPECT_EQ(manhattan(e.a, e.b), net_hpwl);
      EXPECT_NE(e.pin_a, e.pin_b);
    }
  }
}

TEST(Monotone, Examples) {
  std::vector<GridPoint> stair{{0, 0}, {1, 1}, {2, 2}};
  EXPECT_TRUE(is_monotone(std::span<const GridPoint>(stair)));
  std::vector<GridPoint> back{{0, 0}, {3, 0}, {1, 0}};
  EXPECT_FALSE(is_monotone(std::span<const GridPoint>(back)));
  std::vector<GridPoint> regress{{0, 0}, {2, 1}, {1, 3}};
  EXPECT_FALSE(is_monotone(std::span<const GridPoint>(regress)));
  std::vector<GridPoint> single{{0, 0}};
  EXPECT_THROW(is_monotone(std::span<const GridPoint>(single)), Error);
}

TEST(Monotone, DefinitionsAgreeOnRandomPaths) {
  Rng rng(123);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<GridPoint> path;
    int n = int(rng.range(2, 20));
    for (int i = 0; i < n; ++i)
      path.push_back({int(rng.range(0, 10)), int(rng.range(0, 10))});
    EXPECT_EQ(is_monotone(std::span<const GridPoint>(path)),
              is_monotone_by_length(std::span<const GridPoint>(path)))
        << "trial " << trial;
  }
}

TEST(LocalNet, GridExamples) {
  // 4 pins on a 2x2 block attain min_hpwl(4) = 2.
  PlacedNetlist f = point_net({{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  EXPECT_TRUE(is_local_net(f.nl, f.pl, f.nl.nets[0]));

  // 7 pins filling a 2x4 box minus one corner attain min_hpwl(7) = 4.
  f = point_net({{0, 0}, {1, 0}, {2, 0}, {3, 0}, {0, 1}, {1, 1}, {2, 1}});
  EXPECT_TRUE(is_local_net(f.nl, f.pl, f.nl.nets[0]));

  // 3 pins spanning a 1x5 row: HPWL 4 > min_hpwl(3) = 2.
  f = point_net({{0, 0}, {2, 0}, {4, 0}});
  EXPECT_FALSE(is_local_net(f.nl, f.pl, f.nl.nets[0]));
}

TEST(LocalNet, NonIntegralPlacementRejected) {
  PlacedNetlist f = point_net({{0, 0}, {1, 1}});
  f.pl.set(0, 0.3, 0.0);
  EXPECT_THROW(is_local_net(f.nl, f.pl, f.nl.nets[0]), Error);
}

TEST(Connectivity, ComponentsViaSharedNets) {
  PlacedNetlist f;
  int a = add_cell(f, 0, 0), b = add_cell(f, 1, 0);
  int c = add_cell(f, 5, 5), d = add_cell(f, 6, 5);
  add_net_over(f, {a, b});
  add_net_over(f, {c, d});
  auto rep = connectivity_check(f.nl);
  EXPECT_FALSE(rep.connected);
  EXPECT_EQ(rep.component_count, 2);

  Netlist lonely;
  for (int i = 0; i < 4; ++i) {
    Module m;
    m.name = "m" + std::to_string(i);
    lonely.add_module(m);
  }
  EXPECT_EQ(connectivity_check(lonely).component_count, 4);

  add_net_over(f, {b, c});
  EXPECT_TRUE(connectivity_check(f.nl).connected);
}
