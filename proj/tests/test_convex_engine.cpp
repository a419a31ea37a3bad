#include <algorithm>

#include "doctest.h"
#include "flipdist/convex_engine.hpp"
#include "flipdist/oracle.hpp"
#include "helpers.hpp"

using namespace flipdist;
using flipdist::test::E;
using flipdist::test::P;

namespace {

PathSeq replay_all(PathSeq p, const std::vector<FlipStep>& steps) {
  for (const FlipStep& f : steps) {
    REQUIRE(classify_flip(p, f) == f.flip_type);
    p = apply_flip(p, f);
  }
  return p;
}

}  // namespace

TEST_CASE("happy_analysis") {
  SUBCASE("identical paths") {
    HappyAnalysis h = happy_analysis(P({1, 0, 2, 3}), P({1, 0, 2, 3}));
    REQUIRE(h.runs.size() == 1);
    CHECK(h.runs[0].start == 0);
    CHECK(h.runs[0].end == 2);
    REQUIRE(h.diagonals.size() == 1);
    CHECK(h.diagonals[0].good);
    CHECK(h.m == 1);
  }
  SUBCASE("the four-point counterexample has a bad shared diagonal") {
    HappyAnalysis h = happy_analysis(P({1, 0, 2, 3}), P({3, 0, 2, 1}));
    REQUIRE(h.diagonals.size() == 1);
    CHECK(h.diagonals[0].diag == E(0, 2, 4));
    CHECK_FALSE(h.diagonals[0].good);
    CHECK(h.m == 0);
  }
  SUBCASE("n=5 run with a good diagonal") {
    PathSeq in = P({1, 0, 2, 3, 4});
    HappyAnalysis h = happy_analysis(in, P({1, 0, 2, 4, 3}));
    REQUIRE(h.best_run.has_value());
    const HappyRun& r = h.runs[*h.best_run];
    CHECK(in.edge(r.start) == E(0, 1, 5));
    CHECK(in.edge(r.end) == E(0, 2, 5));
    CHECK(r.good_diag_count == 1);
    CHECK(h.m == 1);
  }
}

TEST_CASE("diagonal endpoints always have a defined side") {
  for (Label n = 4; n <= 8; ++n) {
    for (const PathSeq& p : enumerate_paths(ConvexInstance(n))) {
      HappyAnalysis h = happy_analysis(p, p);
      for (const HappyDiagonalInfo& d : h.diagonals) {
        for (int e = 0; e < 2; ++e) {
          CHECK(d.side_in_initial[e] != Side::EndpointOfPath);
        }
        // The two branches leave on opposite sides.
        CHECK(d.side_in_initial[0] != d.side_in_initial[1]);
        CHECK(d.good);
      }
    }
  }
}

TEST_CASE("type3_pair") {
  SUBCASE("four points") {
    auto t = type3_pair(P({1, 0, 2, 3}), P({0, 1, 3, 2}));
    REQUIRE(t.has_value());
    CHECK(t->d1 == E(0, 2, 4));
    CHECK(t->d2 == E(1, 3, 4));
    CHECK(t->direction == -1);
  }
  SUBCASE("seven points") {
    PathSeq in = P({3, 2, 1, 4, 5, 6, 0});
    PathSeq tar = P({1, 2, 3, 0, 6, 5, 4});
    auto t = type3_pair(in, tar);
    REQUIRE(t.has_value());
    CHECK(t->d1 == E(1, 4, 7));
    CHECK(t->d2 == E(0, 3, 7));
    CHECK(t->direction == -1);
    FlipStep f{E(1, 4, 7), E(0, 3, 7)};
    CHECK(apply_flip(in, f) == tar);
    CHECK(classify_flip(in, f) == FlipType::Type3);
  }
  SUBCASE("counterexample pair has none") {
    CHECK_FALSE(type3_pair(P({1, 0, 2, 3}), P({3, 0, 2, 1})).has_value());
  }
  SUBCASE("gaps alone are not enough") {
    // Both hull slots of the rotation are common gaps, yet the target's
    // branches leave 0-3 on the wrong sides: the distance is k+l, not k+l-1.
    PathSeq in = P({0, 1, 2, 5, 3, 4});
    PathSeq tar = P({2, 1, 3, 0, 4, 5});
    CHECK_FALSE(type3_pair(in, tar).has_value());
    CHECK(flip_distance(in, tar).distance == 5);
  }
}

TEST_CASE("common_gap") {
  CHECK_FALSE(common_gap(P({0, 1, 2, 3}), P({1, 2, 3, 0})).has_value());
  CHECK(common_gap(P({1, 0, 2, 3, 4}), P({4, 3, 2, 0, 1})) == 1);
  CHECK(common_gap(P({1, 0, 2, 3}), P({0, 1, 3, 2})) == 1);
}

TEST_CASE("flip_distance") {
  SUBCASE("identical paths") {
    DistanceResult a = flip_distance(P({1, 0, 2, 3}), P({1, 0, 2, 3}));
    CHECK(a.distance == 0);
    CHECK(a.verdict.case_tag == CaseTag::Case1);
    DistanceResult b = flip_distance(P({0, 1, 2, 3}), P({0, 1, 2, 3}));
    CHECK(b.distance == 0);
    CHECK(b.verdict.case_tag == CaseTag::Case2b);
    DistanceResult c = flip_distance(P({0, 1}), P({1, 0}));
    CHECK(c.distance == 0);
  }
  SUBCASE("four-point counterexample") {
    DistanceResult r = flip_distance(P({1, 0, 2, 3}), P({3, 0, 2, 1}));
    CHECK(r.distance == 3);
    CHECK(r.verdict.case_tag == CaseTag::Case2c);
  }
  SUBCASE("single Type 3 flip") {
    DistanceResult r = flip_distance(P({1, 0, 2, 3}), P({0, 1, 3, 2}));
    CHECK(r.distance == 1);
    CHECK(r.verdict.case_tag == CaseTag::Case2a);
  }
  SUBCASE("good run") {
    DistanceResult r = flip_distance(P({1, 0, 2, 3, 4}), P({1, 0, 2, 4, 3}));
    CHECK(r.distance == 1);
    CHECK(r.verdict.case_tag == CaseTag::Case1);
    CHECK(r.k == 1);
    CHECK(r.l == 2);
    CHECK(r.verdict.m == 1);
  }
  SUBCASE("instances must match") {
    CHECK_THROWS_AS(flip_distance(P({0, 1, 2, 3}), P({0, 1, 2, 3, 4})),
                    FlipError);
  }
}

TEST_CASE("reductions") {
  SUBCASE("hull path needs nothing") {
    CHECK(reduce_keeping(P({0, 1, 2, 3, 4}), std::nullopt).empty());
    CHECK(reduce_toward_gap(P({0, 1, 2, 3, 4}), 4).empty());
  }
  SUBCASE("two diagonals removed one at a time") {
    PathSeq p = P({2, 1, 3, 0, 4});
    auto steps = reduce_keeping(p, std::nullopt);
    REQUIRE(steps.size() == 2);
    std::size_t count = diagonal_count(p);
    for (const FlipStep& f : steps) {
      CHECK(classify_flip(p, f) == FlipType::Type1);
      p = apply_flip(p, f);
      CHECK(diagonal_count(p) == --count);
    }
  }
  SUBCASE("kept run survives") {
    PathSeq in = P({1, 0, 2, 4, 3});
    HappyAnalysis h = happy_analysis(in, P({1, 0, 2, 3, 4}));
    REQUIRE(h.best_run.has_value());
    EdgeRange keep{h.runs[*h.best_run].start, h.runs[*h.best_run].end};
    auto steps = reduce_keeping(in, keep);
    REQUIRE(steps.size() == 1);
    CHECK(steps[0].removed == E(2, 4, 5));
  }
  SUBCASE("toward a gap") {
    auto steps = reduce_toward_gap(P({1, 0, 2, 3}), 1);
    REQUIRE(steps.size() == 1);
    CHECK(replay_all(P({1, 0, 2, 3}), steps) == P({2, 3, 0, 1}));
    try {
      reduce_toward_gap(P({1, 0, 2, 3}), 0);
      FAIL("expected GapNotPresent");
    } catch (const FlipError& e) {
      CHECK(e.kind() == ErrorKind::GapNotPresent);
    }
  }
  SUBCASE("every path reaches every one of its gaps") {
    for (Label n = 3; n <= 8; ++n) {
      for (const PathSeq& p : enumerate_paths(ConvexInstance(n))) {
        for (Label g : gap_set(p)) {
          auto steps = reduce_toward_gap(p, g);
          CHECK(steps.size() == diagonal_count(p));
          CHECK(replay_all(p, steps) == hull_path_with_gap(n, g));
        }
      }
    }
  }
}

TEST_CASE("flip_sequence") {
  CHECK(flip_sequence(P({1, 0, 2, 3}), P({1, 0, 2, 3})).empty());
  SUBCASE("counterexample removes the shared diagonal") {
    auto steps = flip_sequence(P({1, 0, 2, 3}), P({3, 0, 2, 1}));
    CHECK(steps.size() == 3);
    CHECK(replay_all(P({1, 0, 2, 3}), steps) == P({3, 0, 2, 1}));
    bool removed = false;
    for (const FlipStep& f : steps) removed |= f.removed == E(0, 2, 4);
    CHECK(removed);
  }
  SUBCASE("single Type 3 step") {
    auto steps = flip_sequence(P({1, 0, 2, 3}), P({0, 1, 3, 2}));
    REQUIRE(steps.size() == 1);
    CHECK(steps[0] == FlipStep{E(0, 2, 4), E(1, 3, 4), FlipType::Type3});
  }
}

TEST_CASE("every bad shared diagonal is removed on every geodesic") {
  for (Label n = 4; n <= 7; ++n) {
    FlipGraph g = FlipGraph::convex(n, FlipModel::Plain);
    for (std::size_t s = 0; s < g.size(); ++s) {
      std::vector<int> full = g.bfs(s);
      for (std::size_t t = 0; t < g.size(); ++t) {
        for (const HappyDiagonalInfo& d :
             happy_analysis(g.node(s), g.node(t)).diagonals) {
          if (d.good) continue;
          CHECK(g.bfs(s, d.diag)[t] != full[t]);
        }
      }
    }
  }
}

TEST_CASE("Case 1 sequences keep every edge of the chosen run") {
  for (Label n = 4; n <= 7; ++n) {
    auto paths = enumerate_paths(ConvexInstance(n));
    for (const PathSeq& p : paths) {
      for (const PathSeq& q : paths) {
        DistanceResult r = flip_distance(p, q);
        if (r.verdict.case_tag != CaseTag::Case1) continue;
        std::vector<Edge> run;
        for (std::size_t i = r.verdict.run->start; i <= r.verdict.run->end; ++i) {
          run.push_back(p.edge(i));
        }
        for (const FlipStep& f : flip_sequence(p, q)) {
          CHECK(std::find(run.begin(), run.end(), f.removed) == run.end());
        }
      }
    }
  }
}
