#include "flipdist/oracle.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "json.hpp"

namespace flipdist {

namespace {

void check_cap(Label n, Label cap) {
  Label limit = std::min(cap, kHardCap);
  if (n > limit) {
    throw FlipError(ErrorKind::InstanceTooLarge,
                    "n=" + std::to_string(n) + " exceeds the enumeration cap " +
                        std::to_string(limit));
  }
}

// Depth-first extension of a partial path; `fits` decides whether the next
// edge may join the edges placed so far.
template <typename Fits>
void extend(std::vector<Label>& cur, std::vector<char>& used,
            std::vector<Edge>& edges, Label n, const Fits& fits,
            std::vector<std::vector<Label>>& out) {
  if (static_cast<Label>(cur.size()) == n) {
    if (cur.front() < cur.back() || n == 1) out.push_back(cur);
    return;
  }
  for (Label w = 0; w < n; ++w) {
    if (used[w]) continue;
    Edge e = Edge::make(cur.back(), w, n);
    if (!fits(e, edges)) continue;
    used[w] = 1;
    cur.push_back(w);
    edges.push_back(e);
    extend(cur, used, edges, n, fits, out);
    edges.pop_back();
    cur.pop_back();
    used[w] = 0;
  }
}

template <typename Fits>
std::vector<std::vector<Label>> backtrack(Label n, const Fits& fits) {
  std::vector<std::vector<Label>> out;
  std::vector<Label> cur;
  std::vector<char> used(n, 0);
  std::vector<Edge> edges;
  for (Label s = 0; s < n; ++s) {
    used[s] = 1;
    cur.assign(1, s);
    extend(cur, used, edges, n, fits, out);
    used[s] = 0;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<PathSeq> enumerate_paths(const ConvexInstance& inst, Label cap) {
  const Label n = inst.n;
  check_cap(n, cap);
  auto fits = [n](const Edge& e, const std::vector<Edge>& placed) {
    for (const Edge& f : placed) {
      if (crossing_convex(e, f, n)) return false;
    }
    return true;
  };
  std::vector<PathSeq> out;
  for (auto& order : backtrack(n, fits)) out.push_back(unchecked_path(order));
  return out;
}

std::vector<PathSeq> enumerate_paths_by_arcs(const ConvexInstance& inst,
                                             Label cap) {
  const Label n = inst.n;
  check_cap(n, cap);
  std::set<std::vector<Label>> seen;
  const std::uint32_t choices = 1u << (n - 1);
  for (Label s = 0; s < n; ++s) {
    for (std::uint32_t mask = 0; mask < choices; ++mask) {
      std::vector<Label> order{s};
      Label lo = s;
      Label hi = s;
      for (Label i = 0; i + 1 < n; ++i) {
        if (mask >> i & 1u) {
          lo = (lo - 1 + n) % n;
          order.push_back(lo);
        } else {
          hi = (hi + 1) % n;
          order.push_back(hi);
        }
      }
      if (order.front() > order.back()) std::reverse(order.begin(), order.end());
      seen.insert(order);
    }
  }
  std::vector<PathSeq> out;
  for (const auto& order : seen) out.push_back(unchecked_path(order));
  return out;
}

std::vector<PolyPath> enumerate_paths(const PolygonModel& poly, Label cap) {
  const Label n = poly.n();
  check_cap(n, cap);
  auto fits = [&poly](const Edge& e, const std::vector<Edge>& placed) {
    if (!poly.usable(e.a, e.b)) return false;
    for (const Edge& f : placed) {
      if (poly.edges_cross(e, f)) return false;
    }
    return true;
  };
  std::vector<PolyPath> out;
  for (auto& order : backtrack(n, fits)) {
    out.push_back(PolyPath{unchecked_path(order)});
  }
  return out;
}

namespace {

template <typename Apply>
std::vector<Neighbor> try_all_exchanges(const PathSeq& p, const Apply& apply) {
  const Label n = p.n();
  AdjTables adj = adjacency_tables(p);
  std::vector<Neighbor> out;
  for (std::size_t i = 0; i < p.edge_count(); ++i) {
    const Edge removed = p.edge(i);
    for (Label u = 0; u < n; ++u) {
      for (Label v = u + 1; v < n; ++v) {
        if (adj.adjacent(u, v)) continue;
        FlipStep step{removed, Edge::make(u, v, n), FlipType::Type1};
        try {
          PathSeq q = apply(step);
          step.flip_type = classify_flip(p, step);
          out.push_back({std::move(q), step});
        } catch (const FlipError&) {
        }
      }
    }
  }
  return out;
}

}  // namespace

std::vector<Neighbor> neighbors(const PathSeq& p, FlipModel model) {
  std::vector<Neighbor> all =
      try_all_exchanges(p, [&p](const FlipStep& f) { return apply_flip(p, f); });
  std::erase_if(all, [&](const Neighbor& nb) {
    return !is_model_flip(p, nb.step, model);
  });
  return all;
}

std::vector<Neighbor> neighbors(const PolyPath& p, const PolygonModel& poly) {
  return try_all_exchanges(p.path, [&](const FlipStep& f) {
    return poly_apply_flip(p, f, poly).path;
  });
}

std::uint64_t path_key(const PathSeq& p) {
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < p.order().size(); ++i) {
    key |= static_cast<std::uint64_t>(p[i]) << (4 * i);
  }
  return key;
}

void FlipGraph::index_nodes() {
  index_.clear();
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    index_.emplace(path_key(nodes_[i]), static_cast<std::uint32_t>(i));
  }
}

FlipGraph FlipGraph::convex(Label n, FlipModel model, Label cap) {
  FlipGraph g;
  g.n_ = n;
  g.model_name_ = to_string(model);
  g.nodes_ = enumerate_paths(ConvexInstance(n), cap);
  g.index_nodes();
  g.adj_.resize(g.nodes_.size());
  for (std::size_t i = 0; i < g.nodes_.size(); ++i) {
    for (Neighbor& nb : neighbors(g.nodes_[i], model)) {
      g.adj_[i].push_back({g.index_.at(path_key(nb.path)), nb.step});
    }
  }
  return g;
}

FlipGraph FlipGraph::polygon(const PolygonModel& poly, Label cap) {
  FlipGraph g;
  g.n_ = poly.n();
  g.model_name_ = "polygon";
  for (PolyPath& p : enumerate_paths(poly, cap)) g.nodes_.push_back(p.path);
  g.index_nodes();
  g.adj_.resize(g.nodes_.size());
  for (std::size_t i = 0; i < g.nodes_.size(); ++i) {
    for (Neighbor& nb : neighbors(PolyPath{g.nodes_[i]}, poly)) {
      g.adj_[i].push_back({g.index_.at(path_key(nb.path)), nb.step});
    }
  }
  return g;
}

std::size_t FlipGraph::edge_count() const noexcept {
  std::size_t total = 0;
  for (const auto& a : adj_) total += a.size();
  return total / 2;
}

std::optional<std::size_t> FlipGraph::index_of(const PathSeq& p) const {
  if (p.n() != n_) return std::nullopt;
  auto it = index_.find(path_key(p));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> FlipGraph::bfs(std::size_t source,
                                const std::optional<Edge>& kept) const {
  std::vector<int> dist(nodes_.size(), -1);
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop_front();
    for (const Arc& arc : adj_[u]) {
      if (kept && arc.step.removed == *kept) continue;
      if (dist[arc.to] >= 0) continue;
      dist[arc.to] = dist[u] + 1;
      queue.push_back(arc.to);
    }
  }
  return dist;
}

std::optional<std::size_t> bfs_distance(const FlipGraph& g, const PathSeq& p,
                                        const PathSeq& q) {
  if (p.n() != q.n() || p.n() != g.n()) {
    throw FlipError(ErrorKind::InstanceMismatch,
                    "paths do not belong to this flip graph");
  }
  auto s = g.index_of(p);
  auto t = g.index_of(q);
  if (!s || !t) {
    throw FlipError(ErrorKind::InvalidInstance,
                    "path is not a node of this flip graph");
  }
  int d = g.bfs(*s)[*t];
  if (d < 0) return std::nullopt;
  return static_cast<std::size_t>(d);
}

std::size_t diameter(const FlipGraph& g) {
  int best = 0;
  for (std::size_t s = 0; s < g.size(); ++s) {
    for (int d : g.bfs(s)) best = std::max(best, d);
  }
  return static_cast<std::size_t>(best);
}

std::vector<HappyViolation> happy_edge_search(const FlipGraph& g) {
  const std::size_t size = g.size();
  std::vector<std::vector<int>> full(size);
  for (std::size_t s = 0; s < size; ++s) full[s] = g.bfs(s);

  std::vector<HappyViolation> out;
  for (std::size_t s = 0; s < size; ++s) {
    const PathSeq& p = g.node(s);
    std::vector<Edge> p_edges = p.edges();
    std::sort(p_edges.begin(), p_edges.end());
    for (const Edge& e : p_edges) {
      std::vector<int> keeping = g.bfs(s, e);
      for (std::size_t t = s + 1; t < size; ++t) {
        const PathSeq& q = g.node(t);
        AdjTables q_adj = adjacency_tables(q);
        if (!q_adj.adjacent(e.a, e.b)) continue;
        if (full[s][t] < 0 || keeping[t] == full[s][t]) continue;
        HappyViolation v{p, q, e, static_cast<std::size_t>(full[s][t]), {}};
        if (keeping[t] >= 0) v.distance_keeping = keeping[t];
        out.push_back(std::move(v));
      }
    }
  }
  return out;
}

std::string path_string(const PathSeq& p) {
  std::string s;
  for (std::size_t i = 0; i < p.order().size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(p[i]);
  }
  return s;
}

std::string to_dot(const FlipGraph& g) {
  std::ostringstream os;
  os << "graph flips {\n";
  os << "  // n=" << g.n() << " model=" << g.model_name() << " nodes="
     << g.size() << " edges=" << g.edge_count() << "\n";
  for (std::size_t i = 0; i < g.size(); ++i) {
    os << "  p" << i << " [label=\"" << path_string(g.node(i)) << "\"];\n";
  }
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (const auto& arc : g.arcs(i)) {
      if (arc.to < i) continue;
      os << "  p" << i << " -- p" << arc.to << " [label=\"T"
         << static_cast<int>(arc.step.flip_type) << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string to_json(const FlipGraph& g) {
  nlohmann::ordered_json j;
  j["n"] = g.n();
  j["model"] = g.model_name();
  auto nodes = nlohmann::ordered_json::array();
  for (const PathSeq& p : g.nodes()) {
    nodes.push_back(std::vector<Label>(p.order().begin(), p.order().end()));
  }
  j["nodes"] = std::move(nodes);
  auto edges = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (const auto& arc : g.arcs(i)) {
      if (arc.to < i) continue;
      edges.push_back({{"u", i},
                       {"v", arc.to},
                       {"remove", to_string(arc.step.removed)},
                       {"add", to_string(arc.step.added)},
                       {"type", static_cast<int>(arc.step.flip_type)}});
    }
  }
  j["edges"] = std::move(edges);
  return j.dump(2) + "\n";
}

}  // namespace flipdist
