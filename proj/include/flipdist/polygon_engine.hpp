#pragma once

// Plane spanning paths inside a simple polygon.
//
// Boundary edges play the role of hull edges and interior edges (visible
// non-adjacent vertex pairs) the role of diagonals. Two interior edges of a
// simple polygon cross exactly when their endpoints interleave along the
// boundary, so the combinatorics of the convex case carry over once
// visibility is settled with exact integer predicates.

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "flipdist/convex_engine.hpp"
#include "flipdist/path_core.hpp"

namespace flipdist {

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend bool operator==(const Point&, const Point&) = default;
};

enum class Orientation : std::uint8_t { Left, Right, Collinear };

Orientation orientation(Point a, Point b, Point c);

// True iff the closed segments ab and cd share a point.
bool segments_intersect(Point a, Point b, Point c, Point d);

class PolygonModel {
 public:
  // Throws InvalidPolygon unless the vertices form a simple polygon in
  // counterclockwise order with no three vertices collinear.
  explicit PolygonModel(std::vector<Point> vertices);

  Label n() const noexcept { return static_cast<Label>(vertices_.size()); }
  const std::vector<Point>& vertices() const noexcept { return vertices_; }
  Point at(Label i) const { return vertices_[i]; }

  bool is_boundary(Label a, Label b) const noexcept;
  // Boundary edge or interior edge.
  bool usable(Label a, Label b) const;
  // Geometric crossing of two usable edges (shared endpoints never cross).
  bool edges_cross(const Edge& e1, const Edge& e2) const;

 private:
  std::vector<Point> vertices_;
  std::vector<std::int8_t> visible_;  // n*n, empty for large polygons
};

bool is_interior_edge(Label a, Label b, const PolygonModel& poly);

// Path in the polygon's visibility graph; the labels follow the boundary.
struct PolyPath {
  PathSeq path;
  friend bool operator==(const PolyPath&, const PolyPath&) = default;
};

PolyPath validate_poly_path(std::span<const Label> order,
                            const PolygonModel& poly);

PolyPath poly_apply_flip(const PolyPath& p, const FlipStep& f,
                         const PolygonModel& poly);

std::size_t interior_edge_count(const PolyPath& p);

struct InteriorHappyInfo {
  Edge edge;
  std::array<Side, 2> side_in_initial{};
  std::array<Side, 2> side_in_target{};
  bool good = false;
};

std::vector<InteriorHappyInfo> interior_happy_edges(const PolyPath& p_in,
                                                    const PolyPath& p_tar);

// Checks each interior edge of p_in against its two boundary rotations by
// building the pre-flip and post-flip configurations explicitly.
std::optional<Type3Pair> poly_type3_pair(const PolyPath& p_in,
                                         const PolyPath& p_tar,
                                         const PolygonModel& poly);

DistanceResult poly_flip_distance(const PolyPath& p_in, const PolyPath& p_tar,
                                  const PolygonModel& poly);

// Replays every step inside the polygon before returning; throws
// ConstructionFailure if a step is not a legal polygon flip.
std::vector<FlipStep> poly_flip_sequence(const PolyPath& p_in,
                                         const PolyPath& p_tar,
                                         const PolygonModel& poly);

// Polygon with sharp teeth around a common apex. For even n no plane
// spanning path uses more than one interior edge.
PolygonModel comb_polygon(Label n);

// Random simple polygon: random points in general position, connected in
// random order and untangled by 2-opt moves.
PolygonModel random_simple_polygon(Label n, std::mt19937_64& rng,
                                   std::int64_t coord_range = 1000);

}  // namespace flipdist
