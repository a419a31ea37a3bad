#pragma once

// Exact flip distance and minimum flip sequences between two plane spanning
// paths on a convex point set, in time linear in the number of points.
//
// Pairs fall into four cases, checked in this order:
//   Case1   a run of shared edges holds m >= 1 good shared diagonals: k+l-2m
//   Case2a  one diagonal of each path can meet in a single Type 3 flip: k+l-1
//   Case2b  the paths share a hull gap: k+l
//   Case2c  otherwise: k+l+1
// where k and l count the diagonals of the initial and target path.

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "flipdist/path_core.hpp"

namespace flipdist {

enum class Side : std::uint8_t { Inside, Outside, EndpointOfPath };

// Side of the diagonal (a, b) that x lies on; Inside is the clockwise open
// interval from a to b.
inline Side side_of(const Edge& d, Label x, Label n) {
  if (x == AdjTables::kNone) return Side::EndpointOfPath;
  return strictly_between(d.a, d.b, x, n) ? Side::Inside : Side::Outside;
}

// Maximal stretch of consecutive shared edges, as inclusive edge indices
// into the initial path.
struct HappyRun {
  std::size_t start = 0;
  std::size_t end = 0;
  std::size_t diag_count = 0;
  std::size_t good_diag_count = 0;
};

struct HappyDiagonalInfo {
  Edge diag;
  // Indexed by endpoint: [0] is diag.a, [1] is diag.b.
  std::array<Side, 2> side_in_initial{};
  std::array<Side, 2> side_in_target{};
  bool good = false;
};

struct HappyAnalysis {
  std::vector<HappyRun> runs;
  std::vector<HappyDiagonalInfo> diagonals;
  std::size_t m = 0;
  std::optional<std::size_t> best_run;  // index into runs when m >= 1
};

struct Type3Pair {
  Edge d1;            // diagonal of the initial path
  Edge d2;            // diagonal of the target path, d1 rotated by direction
  int direction = 0;  // +1 or -1
  std::size_t pos_initial = 0;  // edge index of d1 in the initial path
  std::size_t pos_target = 0;   // edge index of d2 in the target path
};

enum class CaseTag : std::uint8_t { Case1, Case2a, Case2b, Case2c };

const char* case_name(CaseTag tag);  // "1", "2a", "2b", "2c"

struct CaseVerdict {
  CaseTag case_tag = CaseTag::Case2c;
  std::size_t m = 0;
  std::optional<HappyRun> run;         // Case1
  std::optional<Type3Pair> type3;      // Case2a
  std::optional<Label> gap;            // Case2b common gap; Case2c gap of P_in
  std::optional<Label> target_gap;     // Case2c gap of P_tar
};

struct DistanceResult {
  std::size_t distance = 0;
  std::size_t k = 0;
  std::size_t l = 0;
  CaseVerdict verdict;
};

// Slot marks: bit 0 set when the hull edge is in the initial path, bit 1
// when it is in the target path.
struct GapTable {
  std::vector<std::uint8_t> marks;

  static GapTable build(const PathSeq& p_in, const PathSeq& p_tar);
  bool gap_of_initial(Label slot) const { return (marks[slot] & 1) == 0; }
  bool gap_of_target(Label slot) const { return (marks[slot] & 2) == 0; }
  std::optional<Label> first_with(std::uint8_t mark) const;
};

void require_same_instance(const PathSeq& p_in, const PathSeq& p_tar);

HappyAnalysis happy_analysis(const PathSeq& p_in, const PathSeq& p_tar);

std::optional<Type3Pair> type3_pair(const PathSeq& p_in, const PathSeq& p_tar);

std::optional<Label> common_gap(const PathSeq& p_in, const PathSeq& p_tar);

DistanceResult flip_distance(const PathSeq& p_in, const PathSeq& p_tar);

// Inclusive range of edge indices into a path.
struct EdgeRange {
  std::size_t first = 0;
  std::size_t last = 0;
};

// Position of the edges of `run` (taken from the initial path) inside p.
EdgeRange locate_run(const PathSeq& p_in, const HappyRun& run,
                     const PathSeq& p);

// Type 1 flips removing every diagonal outside `keep`: diagonals before the
// range are removed from the front endpoint, those after it from the back.
std::vector<FlipStep> reduce_keeping(const PathSeq& p,
                                     std::optional<EdgeRange> keep);

// Type 1 flips removing every diagonal so that the final hull path has its
// only gap at `gap`.
std::vector<FlipStep> reduce_toward_gap(const PathSeq& p, Label gap);

// The path reduce_keeping produces when only the diagonal at `pos` is kept.
PathSeq reduce_to_single_diagonal(const PathSeq& p, std::size_t pos);

// The hull path whose only gap is `gap`, i.e. gap+1, gap+2, ..., gap.
PathSeq hull_path_with_gap(Label n, Label gap);

// Appends the inverse of `back_half` (steps taken from the target side)
// so that the combined sequence ends at the target.
void append_reversed(std::vector<FlipStep>& out,
                     const std::vector<FlipStep>& back_half);

std::vector<FlipStep> flip_sequence(const PathSeq& p_in, const PathSeq& p_tar);

// Sequence for an already computed verdict; shared with the variants.
std::vector<FlipStep> sequence_for(const PathSeq& p_in, const PathSeq& p_tar,
                                   const CaseVerdict& verdict);

}  // namespace flipdist
