#pragma once

// Restricted flip models on convex point sets.
//
// Compatible flips forbid Type 3 (removed and added edge may not cross).
// Local flips require the removed and added edge to share a vertex; a
// Type 2 realignment between far-apart gaps then costs two steps.
//
// Verdicts reuse CaseTag with each model's own numbering:
//   Compatible: Case1 k+l-2m, Case2a common gap k+l, Case2b k+l+1
//   Local:      Case1 k+l-2m, Case2a common gap k+l,
//               Case2b adjacent gaps k+l+1, Case2c k+l+2

#include <optional>
#include <string_view>
#include <vector>

#include "flipdist/convex_engine.hpp"
#include "flipdist/path_core.hpp"

namespace flipdist {

enum class FlipModel : std::uint8_t { Plain, Compatible, Local };

const char* to_string(FlipModel model);
std::optional<FlipModel> parse_model(std::string_view name);

bool is_model_flip(const PathSeq& p, const FlipStep& f, FlipModel model);

enum class GapRelationKind : std::uint8_t { CommonGap, AdjacentGaps, Disjoint };

struct GapRelation {
  GapRelationKind relation = GapRelationKind::Disjoint;
  Label initial_gap = 0;  // gap the initial path is reduced towards
  Label target_gap = 0;   // equal to initial_gap for CommonGap
};

GapRelation local_gap_relation(const PathSeq& p_in, const PathSeq& p_tar);

DistanceResult compatible_flip_distance(const PathSeq& p_in,
                                        const PathSeq& p_tar);
DistanceResult local_flip_distance(const PathSeq& p_in, const PathSeq& p_tar);
DistanceResult model_flip_distance(const PathSeq& p_in, const PathSeq& p_tar,
                                   FlipModel model);

// Replaces the Type 2 flip between two hull paths by at most two local
// flips. `p` must have no diagonals.
std::vector<FlipStep> simulate_type2_local(const PathSeq& p, Label target_gap);

std::vector<FlipStep> variant_flip_sequence(const PathSeq& p_in,
                                            const PathSeq& p_tar,
                                            FlipModel model);

}  // namespace flipdist
