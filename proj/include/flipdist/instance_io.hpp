#pragma once

// Text instance files, sequence JSON and independent replay checking.
//
//   convex <n>            or   polygon <n>
//                              x y        (n lines, counterclockwise)
//   path <n labels>
//   path <n labels>

#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "flipdist/convex_engine.hpp"
#include "flipdist/path_core.hpp"
#include "flipdist/polygon_engine.hpp"
#include "flipdist/variants.hpp"

namespace flipdist {

enum class InstanceKind : std::uint8_t { Convex, Polygon };

struct InstanceFile {
  InstanceKind kind = InstanceKind::Convex;
  Label n = 0;
  std::vector<Point> points;  // polygon only
  std::vector<Label> initial;
  std::vector<Label> target;
  friend bool operator==(const InstanceFile&, const InstanceFile&) = default;
};

// Parse failures are FlipErrors whose message starts with "line L, column C".
// A path whose length differs from the header raises InstanceMismatch.
InstanceFile parse_instance(std::string_view text);
std::string serialize_instance(const InstanceFile& file);

struct SequenceReport {
  std::size_t distance = 0;
  std::string case_tag;
  std::vector<FlipStep> steps;
};

std::string report_json(const SequenceReport& report);
// Accepts the output of report_json.
SequenceReport parse_report_json(std::string_view text, Label n);

struct VerifyResult {
  bool ok = true;
  std::optional<std::size_t> failed_step;  // nullopt with !ok: end mismatch
  std::string message;
};

VerifyResult verify_sequence(const PathSeq& p_in, const PathSeq& p_tar,
                             const std::vector<FlipStep>& steps,
                             FlipModel model);
VerifyResult verify_sequence(const PolyPath& p_in, const PolyPath& p_tar,
                             const std::vector<FlipStep>& steps,
                             const PolygonModel& poly);

// Uniform start vertex, then a fair coin per step for growing the visited
// arc clockwise or counterclockwise.
PathSeq random_convex_path(Label n, std::mt19937_64& rng);

}  // namespace flipdist
