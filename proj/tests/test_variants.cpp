#include "doctest.h"
#include "flipdist/oracle.hpp"
#include "flipdist/variants.hpp"
#include "helpers.hpp"

using namespace flipdist;
using flipdist::test::E;
using flipdist::test::P;

TEST_CASE("model names") {
  CHECK(parse_model("local") == FlipModel::Local);
  CHECK_FALSE(parse_model("fast").has_value());
  CHECK(std::string(to_string(FlipModel::Compatible)) == "compatible");
}

TEST_CASE("is_model_flip") {
  PathSeq p = P({1, 0, 2, 3});
  FlipStep t3{E(0, 2, 4), E(1, 3, 4), FlipType::Type3};
  CHECK(is_model_flip(p, t3, FlipModel::Plain));
  CHECK_FALSE(is_model_flip(p, t3, FlipModel::Compatible));
  PathSeq q = P({0, 1, 2, 3, 4});
  CHECK(is_model_flip(q, {E(2, 3, 5), E(2, 4, 5)}, FlipModel::Local));
  CHECK_FALSE(is_model_flip(P({0, 1, 2, 3}), {E(1, 2, 4), E(0, 3, 4)},
                            FlipModel::Local));
}

TEST_CASE("compatible_flip_distance") {
  CHECK(compatible_flip_distance(P({1, 0, 2, 3}), P({1, 0, 2, 3})).distance == 0);
  CHECK(compatible_flip_distance(P({1, 0, 2, 3}), P({0, 1, 3, 2})).distance == 2);
  CHECK(compatible_flip_distance(P({1, 0, 2, 3}), P({3, 0, 2, 1})).distance == 3);
}

TEST_CASE("local_gap_relation") {
  GapRelation same = local_gap_relation(P({0, 1, 2, 3, 4}), P({0, 1, 2, 3, 4}));
  CHECK(same.relation == GapRelationKind::CommonGap);
  // Hull paths missing 0-1 and 1-2.
  PathSeq miss01 = hull_path_with_gap(6, 0);
  PathSeq miss12 = hull_path_with_gap(6, 1);
  PathSeq miss34 = hull_path_with_gap(6, 3);
  GapRelation adj = local_gap_relation(miss01, miss12);
  CHECK(adj.relation == GapRelationKind::AdjacentGaps);
  CHECK(adj.initial_gap == 0);
  CHECK(adj.target_gap == 1);
  GapRelation far = local_gap_relation(miss01, miss34);
  CHECK(far.relation == GapRelationKind::Disjoint);
  // Wraparound between the last slot and slot 0.
  GapRelation wrap =
      local_gap_relation(hull_path_with_gap(6, 5), hull_path_with_gap(6, 0));
  CHECK(wrap.relation == GapRelationKind::AdjacentGaps);
}

TEST_CASE("local_flip_distance") {
  CHECK(local_flip_distance(hull_path_with_gap(6, 0), hull_path_with_gap(6, 1))
            .distance == 1);
  CHECK(local_flip_distance(hull_path_with_gap(6, 0), hull_path_with_gap(6, 3))
            .distance == 2);
  CHECK(local_flip_distance(P({1, 0, 2, 3}), P({3, 0, 2, 1})).distance == 3);
}

TEST_CASE("simulate_type2_local") {
  SUBCASE("gaps sharing a vertex") {
    auto steps = simulate_type2_local(hull_path_with_gap(6, 0), 1);
    CHECK(steps.size() == 1);
  }
  SUBCASE("far gaps take two local steps") {
    PathSeq p = hull_path_with_gap(6, 0);
    auto steps = simulate_type2_local(p, 3);
    REQUIRE(steps.size() == 2);
    for (const FlipStep& f : steps) {
      CHECK(is_model_flip(p, f, FlipModel::Local));
      CHECK(classify_flip(p, f) == f.flip_type);
      p = apply_flip(p, f);
    }
    CHECK(diagonal_count(apply_flip(hull_path_with_gap(6, 0), steps[0])) == 1);
    CHECK(p == hull_path_with_gap(6, 3));
  }
  SUBCASE("same gap") {
    try {
      simulate_type2_local(hull_path_with_gap(6, 2), 2);
      FAIL("expected SameGap");
    } catch (const FlipError& e) {
      CHECK(e.kind() == ErrorKind::SameGap);
    }
  }
  SUBCASE("never more than two steps") {
    for (Label n = 3; n <= 9; ++n) {
      for (Label a = 0; a < n; ++a) {
        for (Label b = 0; b < n; ++b) {
          if (a == b) continue;
          PathSeq p = hull_path_with_gap(n, a);
          auto steps = simulate_type2_local(p, b);
          CHECK(steps.size() <= 2);
          for (const FlipStep& f : steps) {
            REQUIRE(is_model_flip(p, f, FlipModel::Local));
            p = apply_flip(p, f);
          }
          CHECK(p == hull_path_with_gap(n, b));
        }
      }
    }
  }
}

TEST_CASE("variant sequences") {
  for (FlipModel m : {FlipModel::Plain, FlipModel::Compatible, FlipModel::Local}) {
    CHECK(variant_flip_sequence(P({1, 0, 2, 3}), P({1, 0, 2, 3}), m).empty());
  }
  PathSeq in = hull_path_with_gap(6, 0);
  PathSeq tar = hull_path_with_gap(6, 3);
  auto steps = variant_flip_sequence(in, tar, FlipModel::Local);
  CHECK(steps.size() == 2);
}

TEST_CASE("restricting moves never shortens distances") {
  for (Label n = 2; n <= 7; ++n) {
    auto paths = enumerate_paths(ConvexInstance(n));
    for (const PathSeq& p : paths) {
      for (const PathSeq& q : paths) {
        std::size_t plain = flip_distance(p, q).distance;
        CHECK(plain <= compatible_flip_distance(p, q).distance);
        CHECK(plain <= local_flip_distance(p, q).distance);
        for (const FlipStep& f :
             variant_flip_sequence(p, q, FlipModel::Compatible)) {
          CHECK(f.flip_type != FlipType::Type3);
        }
        for (const FlipStep& f : variant_flip_sequence(p, q, FlipModel::Local)) {
          CHECK(f.removed.shares_vertex(f.added));
          CHECK(f.flip_type != FlipType::Type3);
        }
      }
    }
  }
}
