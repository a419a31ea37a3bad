#include <algorithm>

#include "doctest.h"
#include "flipdist/oracle.hpp"
#include "helpers.hpp"

using namespace flipdist;
using flipdist::test::E;
using flipdist::test::P;

TEST_CASE("path counts") {
  CHECK(enumerate_paths(ConvexInstance(2)).size() == 1);
  CHECK(enumerate_paths(ConvexInstance(3)).size() == 3);
  CHECK(enumerate_paths(ConvexInstance(4)).size() == 8);
  CHECK(enumerate_paths(ConvexInstance(6)).size() == 48);
  for (Label n = 3; n <= 10; ++n) {
    auto a = enumerate_paths(ConvexInstance(n));
    CHECK(a.size() == static_cast<std::size_t>(n) << (n - 3));
    CHECK(a == enumerate_paths_by_arcs(ConvexInstance(n)));
  }
}

TEST_CASE("caps") {
  try {
    enumerate_paths(ConvexInstance(11));
    FAIL("expected InstanceTooLarge");
  } catch (const FlipError& e) {
    CHECK(e.kind() == ErrorKind::InstanceTooLarge);
  }
  CHECK_THROWS_AS(enumerate_paths(ConvexInstance(17), 20), FlipError);
  CHECK_THROWS_AS(FlipGraph::polygon(comb_polygon(10)), FlipError);
}

TEST_CASE("neighbors") {
  auto nbs = neighbors(P({0, 1, 2, 3}), FlipModel::Plain);
  bool found = std::any_of(nbs.begin(), nbs.end(), [](const Neighbor& nb) {
    return nb.path == P({1, 2, 3, 0}) && nb.step.flip_type == FlipType::Type2;
  });
  CHECK(found);
  for (Label n = 4; n <= 7; ++n) {
    for (FlipModel m :
         {FlipModel::Plain, FlipModel::Compatible, FlipModel::Local}) {
      FlipGraph g = FlipGraph::convex(n, m);
      for (std::size_t i = 0; i < g.size(); ++i) {
        for (const auto& arc : g.arcs(i)) {
          if (m == FlipModel::Compatible) {
            CHECK(arc.step.flip_type != FlipType::Type3);
          }
          const auto& back = g.arcs(arc.to);
          CHECK(std::any_of(back.begin(), back.end(),
                            [&](const auto& r) { return r.to == i; }));
        }
      }
    }
  }
}

TEST_CASE("bfs_distance") {
  FlipGraph g = FlipGraph::convex(4, FlipModel::Plain);
  CHECK(bfs_distance(g, P({1, 0, 2, 3}), P({1, 0, 2, 3})) == 0u);
  CHECK(bfs_distance(g, P({1, 0, 2, 3}), P({3, 0, 2, 1})) == 3u);
  CHECK_THROWS_AS(bfs_distance(g, P({1, 0, 2, 3}), P({0, 1, 2, 3, 4})),
                  FlipError);
  FlipGraph five = FlipGraph::convex(5, FlipModel::Plain);
  CHECK(diameter(five) == 4);
}

TEST_CASE("flip graphs of convex sets are connected metrics") {
  for (Label n = 2; n <= 6; ++n) {
    FlipGraph g = FlipGraph::convex(n, FlipModel::Plain);
    std::vector<std::vector<int>> d;
    for (std::size_t s = 0; s < g.size(); ++s) d.push_back(g.bfs(s));
    for (std::size_t a = 0; a < g.size(); ++a) {
      CHECK(d[a][a] == 0);
      for (std::size_t b = 0; b < g.size(); ++b) {
        CHECK(d[a][b] >= 0);
        CHECK(d[a][b] == d[b][a]);
        if (a != b) CHECK(d[a][b] > 0);
        for (std::size_t c = 0; c < g.size(); ++c) {
          CHECK(d[a][c] <= d[a][b] + d[b][c]);
        }
      }
    }
  }
}

TEST_CASE("diameters") {
  CHECK(diameter(FlipGraph::convex(4, FlipModel::Plain)) == 3);
  CHECK(diameter(FlipGraph::convex(6, FlipModel::Plain)) == 6);
  CHECK(diameter(FlipGraph::polygon(comb_polygon(6))) == 3);
}

TEST_CASE("happy_edge_search") {
  auto four = happy_edge_search(FlipGraph::convex(4, FlipModel::Plain));
  bool found = std::any_of(four.begin(), four.end(), [](const auto& v) {
    return v.p == P({1, 0, 2, 3}) && v.q == P({3, 0, 2, 1}) &&
           v.shared == E(0, 2, 4) && v.distance == 3 && !v.distance_keeping;
  });
  CHECK(found);
  CHECK(happy_edge_search(FlipGraph::convex(3, FlipModel::Plain)).empty());
  CHECK_FALSE(happy_edge_search(FlipGraph::convex(5, FlipModel::Plain)).empty());
}

TEST_CASE("exports") {
  FlipGraph g = FlipGraph::convex(4, FlipModel::Plain);
  std::string dot = to_dot(g);
  CHECK(std::count(dot.begin(), dot.end(), '\n') ==
        static_cast<long>(3 + g.size() + g.edge_count()));
  CHECK(dot.find("graph flips {") == 0);
  std::string json = to_json(g);
  CHECK(json.find("\"model\": \"plain\"") != std::string::npos);
}
