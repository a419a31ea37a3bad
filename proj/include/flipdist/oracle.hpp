#pragma once

// Brute-force ground truth: every plane spanning path of a small instance,
// the flip graph between them, and searches over that graph.

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "flipdist/path_core.hpp"
#include "flipdist/polygon_engine.hpp"
#include "flipdist/variants.hpp"

namespace flipdist {

inline constexpr Label kConvexCap = 10;
inline constexpr Label kPolygonCap = 9;
// Paths are packed four bits per label.
inline constexpr Label kHardCap = 16;

// Backtracking over partial paths with a pairwise crossing check.
std::vector<PathSeq> enumerate_paths(const ConvexInstance& inst,
                                     Label cap = kConvexCap);
// Independent enumerator: a start vertex and a left/right choice per step.
std::vector<PathSeq> enumerate_paths_by_arcs(const ConvexInstance& inst,
                                             Label cap = kConvexCap);
std::vector<PolyPath> enumerate_paths(const PolygonModel& poly,
                                      Label cap = kPolygonCap);

struct Neighbor {
  PathSeq path;
  FlipStep step;
};

// Tries every (removed, added) pair.
std::vector<Neighbor> neighbors(const PathSeq& p, FlipModel model);
std::vector<Neighbor> neighbors(const PolyPath& p, const PolygonModel& poly);

class FlipGraph {
 public:
  static FlipGraph convex(Label n, FlipModel model, Label cap = kConvexCap);
  static FlipGraph polygon(const PolygonModel& poly, Label cap = kPolygonCap);

  Label n() const noexcept { return n_; }
  std::string model_name() const { return model_name_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  std::size_t edge_count() const noexcept;
  const PathSeq& node(std::size_t i) const { return nodes_[i]; }
  const std::vector<PathSeq>& nodes() const noexcept { return nodes_; }
  std::optional<std::size_t> index_of(const PathSeq& p) const;

  struct Arc {
    std::uint32_t to;
    FlipStep step;
  };
  const std::vector<Arc>& arcs(std::size_t i) const { return adj_[i]; }

  // Distances from `source`; -1 marks unreachable nodes. With `kept`, only
  // nodes containing that edge are visited.
  std::vector<int> bfs(std::size_t source,
                       const std::optional<Edge>& kept = std::nullopt) const;

 private:
  Label n_ = 0;
  std::string model_name_;
  std::vector<PathSeq> nodes_;
  std::unordered_map<std::uint64_t, std::uint32_t> index_;
  std::vector<std::vector<Arc>> adj_;

  void index_nodes();
};

std::uint64_t path_key(const PathSeq& p);

std::optional<std::size_t> bfs_distance(const FlipGraph& g, const PathSeq& p,
                                        const PathSeq& q);
std::size_t diameter(const FlipGraph& g);

// Every shortest flip sequence from p to q must remove e.
struct HappyViolation {
  PathSeq p;
  PathSeq q;
  Edge shared;
  std::size_t distance = 0;
  std::optional<std::size_t> distance_keeping;  // nullopt if unreachable
};

// Unordered pairs, each reported once with p before q in node order.
std::vector<HappyViolation> happy_edge_search(const FlipGraph& g);

std::string to_dot(const FlipGraph& g);
std::string to_json(const FlipGraph& g);
std::string path_string(const PathSeq& p);  // "1 0 2 3"

}  // namespace flipdist
