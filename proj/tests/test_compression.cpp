#include "sachs/compression.hpp"
#include "sachs/fuzz.hpp"

#include "oracles.hpp"
#include "shapes.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace sachs;

namespace {

auto rows(std::vector<int> r) { return YoungMatrix(std::move(r)); }

// P5 as a-b-c-d-e = 0-1-2-3-4
const auto p5 = shapes::path(5);

}  // namespace

TEST(NeighborSplit, Examples) {
  auto s = neighbor_split(p5, 1, 3);
  EXPECT_EQ(s.common, bit(2));
  EXPECT_EQ(s.u_only, bit(0));
  EXPECT_EQ(s.v_only, bit(4));

  auto k = shapes::complete_bipartite(3, 2);
  s = neighbor_split(k, 0, 1);
  EXPECT_EQ(s.u_only, VertexMask{0});
  EXPECT_EQ(s.v_only, VertexMask{0});

  s = neighbor_split(shapes::path(2), 0, 1);
  EXPECT_EQ(s.common | s.u_only | s.v_only, VertexMask{0});

  EXPECT_THROW(neighbor_split(p5, 1, 1), precondition_error);
  EXPECT_THROW(neighbor_split(p5, 1, 5), range_error);
}

TEST(Compress, PathExample) {
  auto h = compress(p5, 1, 3);
  EXPECT_EQ(h, load_graph("5 4\n0 3\n1 2\n2 3\n3 4\n"));
  EXPECT_EQ(oracle::two_matchings(p5), 3);
  EXPECT_EQ(oracle::two_matchings(h), 2);
}

TEST(Compress, DuplicatesAreFixed) {
  auto k = shapes::complete_bipartite(3, 2);
  EXPECT_EQ(compress(k, 0, 2), k);
}

TEST(Compress, HexagonExample) {
  // vertices 1..6 of the cycle are 0..5 here; compress 1 -> 3
  auto c6 = shapes::cycle(6);
  auto h = compress(c6, 0, 2);
  EXPECT_FALSE(h.adjacent(0, 5));
  EXPECT_TRUE(h.adjacent(2, 5));
  EXPECT_EQ(oracle::a4(c6), 9);
  EXPECT_EQ(oracle::a4(h), 6);
}

TEST(Compress, PreservesEdgeCount) {
  Rng rng(41);
  for (int t = 0; t < 500; ++t) {
    auto g = random_graph(rng, 2 + t % 10);
    int u = t % g.order();
    int v = (t / 3 + 1) % g.order();
    if (u == v)
      continue;
    EXPECT_EQ(compress(g, u, v).size(), g.size());
  }
}

TEST(Compress, SamePartKeepsBipartiteness) {
  Rng rng(42);
  int checked = 0;
  for (int t = 0; t < 500; ++t) {
    auto g = random_connected_bipartite(rng, 3 + t % 10);
    auto parts = validate_membership(g).bipartition;
    auto side = vertices_of(parts->part_a);
    if (side.size() < 2)
      continue;
    auto h = compress(g, side[0], side[1]);
    EXPECT_TRUE(validate_membership(h).bipartition);
    ++checked;
  }
  EXPECT_GT(checked, 100);
}

TEST(Compress, CrossPartMayBreakBipartiteness) {
  auto g = load_graph("5 4\n0 1\n1 2\n2 3\n0 4\n");
  // 0 and 3 sit on opposite sides; moving 0-1 to 3-1 closes the triangle 1-2-3
  auto h = compress(g, 0, 3);
  EXPECT_FALSE(validate_membership(h).bipartition);
}

TEST(Audit, Examples) {
  auto a = audit_vertex_compression(p5, 1, 3, 2);
  EXPECT_EQ(a.matchings[1].before, 3);
  EXPECT_EQ(a.matchings[1].after, 2);
  EXPECT_FALSE(a.violated());

  auto k = shapes::complete_bipartite(3, 2);
  a = audit_vertex_compression(k, 0, 1, 3);
  for (const auto &row : a.matchings)
    EXPECT_EQ(row.before, row.after);
  EXPECT_FALSE(a.violated());

  a = audit_vertex_compression(shapes::cycle(6), 0, 2, 2);
  EXPECT_EQ(a.distance, 2);
  EXPECT_EQ(a.a4_before, 9);
  EXPECT_EQ(a.a4_after, 6);
  EXPECT_FALSE(a.violated());
}

TEST(Audit, MatchingCountsUseTheOracle) {
  Rng rng(43);
  for (int t = 0; t < 100; ++t) {
    auto g = random_connected_bipartite(rng, 2 + t % 9);
    int u = t % g.order();
    int v = (u + 1) % g.order();
    if (u == v)
      continue;
    auto a = audit_vertex_compression(g, u, v, 4);
    auto h = compress(g, u, v);
    for (const auto &row : a.matchings) {
      EXPECT_EQ(row.before, oracle::matchings(g, row.k));
      EXPECT_EQ(row.after, oracle::matchings(h, row.k));
    }
  }
}

TEST(Fuzz, CompressionMonotone) {
  auto r = fuzz_compression(2024, 300);
  EXPECT_EQ(r.trials, 300);
  EXPECT_TRUE(r.violations.empty());
  EXPECT_EQ(r.bipartite_after_same_part, r.same_part_pairs);
}

TEST(Corners, Examples) {
  auto c = corner_sets(rows({3, 1, 1}));
  EXPECT_EQ(c.out_corners, (std::vector<Position>{{1, 3}, {3, 1}}));
  EXPECT_EQ(c.in_corners, (std::vector<Position>{{2, 2}}));
  c = corner_sets(rows({2, 2, 1, 1}));
  EXPECT_EQ(c.out_corners, (std::vector<Position>{{2, 2}, {4, 1}}));
  EXPECT_EQ(c.in_corners, (std::vector<Position>{{3, 2}}));
  c = corner_sets(rows({4, 4, 4}));
  EXPECT_EQ(c.out_corners, (std::vector<Position>{{3, 4}}));
  EXPECT_TRUE(c.in_corners.empty());
}

TEST(YoungCompress, Examples) {
  EXPECT_EQ(young_compress(rows({3, 1, 1}), {1, 3}, {2, 2}), rows({2, 2, 1}));
  EXPECT_EQ(young_compress(rows({4, 2, 1}), {1, 4}, {3, 2}), rows({3, 2, 2}));
  try {
    young_compress(rows({2, 2, 1, 1}), {2, 2}, {3, 2});
    FAIL() << "adjacent corners accepted";
  } catch (const corner_error &e) {
    EXPECT_EQ(e.why, corner_error::reason::adjacent);
  }
  try {
    young_compress(rows({3, 1, 1}), {1, 2}, {2, 2});
    FAIL();
  } catch (const corner_error &e) {
    EXPECT_EQ(e.why, corner_error::reason::not_out_corner);
  }
  try {
    young_compress(rows({3, 1, 1}), {1, 3}, {3, 2});
    FAIL();
  } catch (const corner_error &e) {
    EXPECT_EQ(e.why, corner_error::reason::not_in_corner);
  }
}

TEST(YoungCompress, ResultIsStaircaseWithSameTotal) {
  for (const auto &y : difference_young_matrices(9))
    for (auto [from, to] : legal_moves(y)) {
      auto next = young_compress(y, from, to);
      EXPECT_EQ(next.total(), y.total());
      EXPECT_TRUE(std::is_sorted(next.rows().rbegin(), next.rows().rend()));
    }
}

TEST(CornerMatchingCount, Examples) {
  EXPECT_EQ(corner_matching_count(rows({3, 1, 1}), {1, 3}), 2);
  EXPECT_EQ(corner_matching_count(rows({2, 2, 1, 1}), {2, 2}), 2);
  EXPECT_EQ(corner_matching_count(rows({1}), {1, 1}), 0);
  EXPECT_THROW(corner_matching_count(rows({3, 1, 1}), {2, 2}), corner_error);
}

TEST(CornerMatchingCount, MatchesDirectEnumeration) {
  for (const auto &y : difference_young_matrices(9))
    for (auto p : corner_sets(y).out_corners)
      ASSERT_EQ(corner_matching_count(y, p),
                oracle::corner_pairs(y.rows(), p.row, p.col))
          << to_string(y);
}

TEST(CornerAudit, SmallExampleAndCompleteness) {
  auto audit = audit_corner_theorem(6);
  bool seen = false;
  std::int64_t expected_moves = 0;
  for (const auto &y : difference_young_matrices(6))
    expected_moves += oracle::legal_move_count(y.rows());
  EXPECT_EQ(static_cast<std::int64_t>(audit.moves.size()), expected_moves);
  for (const auto &r : audit.moves)
    if (r.instance == rows({3, 1, 1}) && r.result == rows({2, 2, 1})) {
      seen = true;
      EXPECT_EQ(r.before, 4);
      EXPECT_EQ(r.after, 2);
      EXPECT_TRUE(r.forward_holds());
      EXPECT_FALSE(r.identity_holds());
    }
  EXPECT_TRUE(seen);
  EXPECT_THROW(audit_corner_theorem(13), scale_error);
}

TEST(CornerAudit, RectanglesHaveNoMoves) {
  EXPECT_TRUE(legal_moves(rows({3, 3})).empty());
  EXPECT_TRUE(legal_moves(rows({1})).empty());
}

TEST(DifferenceYoungMatrices, OnePerClass) {
  // one canonical Young matrix per difference-graph class; compare with the
  // number of classes counted from labelled graphs for n <= 6
  for (int n = 2; n <= 6; ++n) {
    auto scan = oracle::scan_labelled(n, true);
    std::set<std::uint64_t> difference_classes;
    for (auto &[m, masks] : scan.classes)
      for (auto mask : masks)
        if (is_difference(oracle::from_pair_mask(n, mask)))
          difference_classes.insert(mask);
    std::int64_t ours = 0;
    for (const auto &y : difference_young_matrices(n))
      if (y.height() + y.width() == n)
        ++ours;
    EXPECT_EQ(ours, static_cast<std::int64_t>(difference_classes.size())) << n;
  }
}
