#pragma once

// Plane spanning paths on points in convex position.
//
// Points carry no coordinates: vertex i sits at position i of the cyclic
// (clockwise) hull order, and every geometric question reduces to cyclic
// interval tests on labels.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace flipdist {

using Label = std::int32_t;

enum class ErrorKind {
  InvalidInstance,
  InstanceMismatch,
  NotPermutation,
  CrossingEdges,
  RemovedAbsent,
  AddedPresent,
  NotAPath,
  InvalidFlip,
  GapNotPresent,
  SameGap,
  EdgeNotVisible,
  InvalidPolygon,
  InstanceTooLarge,
  ConstructionFailure,
};

const char* to_string(ErrorKind kind);

class FlipError : public std::runtime_error {
 public:
  FlipError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

struct ConvexInstance {
  Label n = 0;

  explicit ConvexInstance(Label count);
  friend bool operator==(const ConvexInstance&, const ConvexInstance&) = default;
};

enum class EdgeKind : std::uint8_t { Hull, Diagonal };

struct Edge {
  Label a = 0;  // a < b
  Label b = 0;
  EdgeKind kind = EdgeKind::Hull;

  static Edge make(Label u, Label v, Label n);
  bool is_diagonal() const noexcept { return kind == EdgeKind::Diagonal; }
  bool has(Label v) const noexcept { return a == v || b == v; }
  bool shares_vertex(const Edge& o) const noexcept {
    return has(o.a) || has(o.b);
  }
  friend bool operator==(const Edge& x, const Edge& y) noexcept {
    return x.a == y.a && x.b == y.b;
  }
  friend bool operator<(const Edge& x, const Edge& y) noexcept {
    return x.a != y.a ? x.a < y.a : x.b < y.b;
  }
};

std::string to_string(const Edge& e);  // "a-b"

enum class FlipType : std::uint8_t { Type1 = 1, Type2 = 2, Type3 = 3 };

struct FlipStep {
  Edge removed;
  Edge added;
  FlipType flip_type = FlipType::Type1;

  // The inverse step, valid on the path this step produces.
  FlipStep swapped() const { return {added, removed, flip_type}; }
  friend bool operator==(const FlipStep&, const FlipStep&) = default;
};

// A validated, canonically oriented (front < back) plane spanning path.
class PathSeq {
 public:
  PathSeq() = default;

  Label n() const noexcept { return static_cast<Label>(order_.size()); }
  std::span<const Label> order() const noexcept { return order_; }
  Label operator[](std::size_t i) const noexcept { return order_[i]; }
  Label front() const noexcept { return order_.front(); }
  Label back() const noexcept { return order_.back(); }

  // Edge between positions i and i+1.
  Edge edge(std::size_t i) const;
  std::size_t edge_count() const noexcept { return order_.size() - 1; }
  std::vector<Edge> edges() const;

  friend bool operator==(const PathSeq&, const PathSeq&) = default;
  friend bool operator<(const PathSeq& x, const PathSeq& y) {
    return x.order_ < y.order_;
  }

 private:
  friend PathSeq validate_path(std::span<const Label>, const ConvexInstance&);
  friend PathSeq unchecked_path(std::vector<Label>);
  std::vector<Label> order_;
};

// Trusts that `order` is a plane spanning path; only canonicalizes.
PathSeq unchecked_path(std::vector<Label> order);

// Cyclic open interval test: is x strictly between a and b going clockwise?
inline bool strictly_between(Label a, Label b, Label x, Label n) noexcept {
  Label db = (b - a + n) % n;
  Label dx = (x - a + n) % n;
  return dx > 0 && dx < db;
}

bool crossing_convex(const Edge& e1, const Edge& e2, Label n) noexcept;

PathSeq validate_path(std::span<const Label> order, const ConvexInstance& inst);

// Pairwise test over all edge pairs; O(n^2). The validator uses the
// linear arc-growth characterization instead.
bool is_plane_pairwise(std::span<const Label> order, Label n);

std::size_t diagonal_count(const PathSeq& p);

PathSeq apply_flip(const PathSeq& p, const FlipStep& f);

FlipType classify_flip(const PathSeq& p, const FlipStep& f);

// Builds the step for (remove, add) on p and tags it; throws like
// apply_flip when the exchange does not yield a plane spanning path.
FlipStep make_step(const PathSeq& p, Edge removed, Edge added);

struct AdjTables {
  static constexpr Label kNone = -1;
  std::vector<std::pair<Label, Label>> neighbors;  // kNone marks absent
  Label first_endpoint = kNone;
  Label second_endpoint = kNone;

  bool adjacent(Label u, Label v) const noexcept {
    return neighbors[u].first == v || neighbors[u].second == v;
  }
  // The neighbor of u other than v (kNone if u has no other neighbor).
  Label other(Label u, Label v) const noexcept {
    return neighbors[u].first == v ? neighbors[u].second : neighbors[u].first;
  }
  int degree(Label u) const noexcept {
    return (neighbors[u].first != kNone) + (neighbors[u].second != kNone);
  }
};

AdjTables adjacency_tables(const PathSeq& p);

// Hull slot i stands for the hull edge (i, i+1 mod n).
Label hull_slot(const Edge& e, Label n);
Edge slot_edge(Label slot, Label n);

std::vector<Label> gap_set(const PathSeq& p);

}  // namespace flipdist
