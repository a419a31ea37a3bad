#include "flipdist/path_core.hpp"

#include <algorithm>
#include <sstream>

namespace flipdist {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInstance: return "InvalidInstance";
    case ErrorKind::InstanceMismatch: return "InstanceMismatch";
    case ErrorKind::NotPermutation: return "NotPermutation";
    case ErrorKind::CrossingEdges: return "CrossingEdges";
    case ErrorKind::RemovedAbsent: return "RemovedAbsent";
    case ErrorKind::AddedPresent: return "AddedPresent";
    case ErrorKind::NotAPath: return "NotAPath";
    case ErrorKind::InvalidFlip: return "InvalidFlip";
    case ErrorKind::GapNotPresent: return "GapNotPresent";
    case ErrorKind::SameGap: return "SameGap";
    case ErrorKind::EdgeNotVisible: return "EdgeNotVisible";
    case ErrorKind::InvalidPolygon: return "InvalidPolygon";
    case ErrorKind::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorKind::ConstructionFailure: return "ConstructionFailure";
  }
  return "Unknown";
}

ConvexInstance::ConvexInstance(Label count) : n(count) {
  if (count < 2) {
    throw FlipError(ErrorKind::InvalidInstance,
                    "instance needs at least 2 points, got " +
                        std::to_string(count));
  }
}

Edge Edge::make(Label u, Label v, Label n) {
  Edge e;
  e.a = std::min(u, v);
  e.b = std::max(u, v);
  bool hull = (e.b == e.a + 1) || (e.a == 0 && e.b == n - 1);
  e.kind = hull ? EdgeKind::Hull : EdgeKind::Diagonal;
  return e;
}

std::string to_string(const Edge& e) {
  return std::to_string(e.a) + "-" + std::to_string(e.b);
}

Edge PathSeq::edge(std::size_t i) const {
  return Edge::make(order_[i], order_[i + 1], n());
}

std::vector<Edge> PathSeq::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (std::size_t i = 0; i + 1 < order_.size(); ++i) out.push_back(edge(i));
  return out;
}

PathSeq unchecked_path(std::vector<Label> order) {
  PathSeq p;
  if (!order.empty() && order.front() > order.back()) {
    std::reverse(order.begin(), order.end());
  }
  p.order_ = std::move(order);
  return p;
}

bool crossing_convex(const Edge& e1, const Edge& e2, Label n) noexcept {
  if (e1.shares_vertex(e2)) return false;
  bool c_in = strictly_between(e1.a, e1.b, e2.a, n);
  bool d_in = strictly_between(e1.a, e1.b, e2.b, n);
  return c_in != d_in;
}

namespace {

[[noreturn]] void throw_crossing(const Edge& x, const Edge& y) {
  throw FlipError(ErrorKind::CrossingEdges,
                  "edges " + to_string(x) + " and " + to_string(y) + " cross");
}

// Finds an edge of `order` crossing the edge at position i; the arc-growth
// failure guarantees one exists.
[[noreturn]] void report_crossing(std::span<const Label> order, std::size_t i,
                                  Label n) {
  Edge bad = Edge::make(order[i], order[i + 1], n);
  for (std::size_t j = 0; j + 1 < order.size(); ++j) {
    Edge other = Edge::make(order[j], order[j + 1], n);
    if (crossing_convex(bad, other, n)) {
      if (other < bad) throw_crossing(other, bad);
      throw_crossing(bad, other);
    }
  }
  throw FlipError(ErrorKind::CrossingEdges,
                  "path is not plane at edge " + to_string(bad));
}

}  // namespace

PathSeq validate_path(std::span<const Label> order,
                      const ConvexInstance& inst) {
  const Label n = inst.n;
  if (static_cast<Label>(order.size()) != n) {
    throw FlipError(ErrorKind::NotPermutation,
                    "expected " + std::to_string(n) + " labels, got " +
                        std::to_string(order.size()));
  }
  std::vector<char> seen(n, 0);
  for (Label v : order) {
    if (v < 0 || v >= n || seen[v]) {
      throw FlipError(ErrorKind::NotPermutation,
                      "label " + std::to_string(v) +
                          " is out of range or repeated");
    }
    seen[v] = 1;
  }
  // Every prefix of a plane path on convex points visits a cyclic arc.
  Label lo = order[0];
  Label hi = order[0];
  for (std::size_t i = 1; i < order.size(); ++i) {
    Label v = order[i];
    if (v == (lo - 1 + n) % n) {
      lo = v;
    } else if (v == (hi + 1) % n) {
      hi = v;
    } else {
      report_crossing(order, i - 1, n);
    }
  }
  PathSeq p;
  p.order_.assign(order.begin(), order.end());
  if (p.order_.front() > p.order_.back()) {
    std::reverse(p.order_.begin(), p.order_.end());
  }
  return p;
}

bool is_plane_pairwise(std::span<const Label> order, Label n) {
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    Edge e = Edge::make(order[i], order[i + 1], n);
    for (std::size_t j = i + 2; j + 1 < order.size(); ++j) {
      if (crossing_convex(e, Edge::make(order[j], order[j + 1], n), n)) {
        return false;
      }
    }
  }
  return true;
}

std::size_t diagonal_count(const PathSeq& p) {
  std::size_t k = 0;
  for (std::size_t i = 0; i < p.edge_count(); ++i) {
    if (p.edge(i).is_diagonal()) ++k;
  }
  return k;
}

AdjTables adjacency_tables(const PathSeq& p) {
  const Label n = p.n();
  AdjTables t;
  t.neighbors.assign(n, {AdjTables::kNone, AdjTables::kNone});
  auto link = [&](Label u, Label v) {
    auto& slot = t.neighbors[u];
    if (slot.first == AdjTables::kNone) {
      slot.first = v;
    } else {
      slot.second = v;
    }
  };
  for (Label i = 0; i + 1 < n; ++i) {
    link(p[i], p[i + 1]);
    link(p[i + 1], p[i]);
  }
  t.first_endpoint = p.front();
  t.second_endpoint = p.back();
  return t;
}

PathSeq apply_flip(const PathSeq& p, const FlipStep& f) {
  const Label n = p.n();
  if (f.removed == f.added) {
    throw FlipError(ErrorKind::AddedPresent,
                    "removed and added edge coincide: " + to_string(f.added));
  }
  for (Label v : {f.removed.a, f.removed.b, f.added.a, f.added.b}) {
    if (v < 0 || v >= n) {
      throw FlipError(ErrorKind::InvalidFlip,
                      "label " + std::to_string(v) + " out of range");
    }
  }
  AdjTables t = adjacency_tables(p);
  if (!t.adjacent(f.removed.a, f.removed.b)) {
    throw FlipError(ErrorKind::RemovedAbsent,
                    "edge " + to_string(f.removed) + " is not in the path");
  }
  if (t.adjacent(f.added.a, f.added.b)) {
    throw FlipError(ErrorKind::AddedPresent,
                    "edge " + to_string(f.added) + " is already in the path");
  }

  auto unlink = [&](Label u, Label v) {
    auto& s = t.neighbors[u];
    if (s.first == v) {
      s.first = s.second;
    }
    s.second = AdjTables::kNone;
  };
  unlink(f.removed.a, f.removed.b);
  unlink(f.removed.b, f.removed.a);
  for (auto [u, v] : {std::pair{f.added.a, f.added.b},
                      std::pair{f.added.b, f.added.a}}) {
    auto& s = t.neighbors[u];
    if (s.second != AdjTables::kNone) {
      throw FlipError(ErrorKind::NotAPath,
                      "vertex " + std::to_string(u) + " would get degree 3");
    }
    (s.first == AdjTables::kNone ? s.first : s.second) = v;
  }

  Label start = AdjTables::kNone;
  for (Label v = 0; v < n; ++v) {
    if (t.degree(v) <= 1) {
      start = v;
      break;
    }
  }
  if (start == AdjTables::kNone) {
    throw FlipError(ErrorKind::NotAPath, "flip closes a cycle");
  }
  std::vector<Label> order;
  order.reserve(n);
  Label prev = AdjTables::kNone;
  Label cur = start;
  while (cur != AdjTables::kNone &&
         static_cast<Label>(order.size()) <= n) {
    order.push_back(cur);
    Label next = t.other(cur, prev);
    if (next == prev) next = AdjTables::kNone;
    prev = cur;
    cur = next;
  }
  if (static_cast<Label>(order.size()) != n) {
    throw FlipError(ErrorKind::NotAPath, "flip disconnects the path");
  }
  return validate_path(order, ConvexInstance(n));
}

FlipType classify_flip(const PathSeq& p, const FlipStep& f) {
  try {
    (void)apply_flip(p, f);
  } catch (const FlipError& err) {
    throw FlipError(ErrorKind::InvalidFlip,
                    std::string("not a flip: ") + err.what());
  }
  Edge closing = Edge::make(p.front(), p.back(), p.n());
  if (f.added == closing) {
    return crossing_convex(f.added, f.removed, p.n()) ? FlipType::Type3
                                                      : FlipType::Type2;
  }
  return FlipType::Type1;
}

FlipStep make_step(const PathSeq& p, Edge removed, Edge added) {
  FlipStep f{removed, added, FlipType::Type1};
  f.flip_type = classify_flip(p, f);
  return f;
}

Label hull_slot(const Edge& e, Label n) {
  if (e.b == e.a + 1) return e.a;
  if (e.a == 0 && e.b == n - 1) return n - 1;
  return -1;
}

Edge slot_edge(Label slot, Label n) {
  return Edge::make(slot, (slot + 1) % n, n);
}

std::vector<Label> gap_set(const PathSeq& p) {
  const Label n = p.n();
  std::vector<char> present(n, 0);
  for (std::size_t i = 0; i < p.edge_count(); ++i) {
    Label s = hull_slot(p.edge(i), n);
    if (s >= 0) present[s] = 1;
  }
  std::vector<Label> gaps;
  for (Label s = 0; s < n; ++s) {
    if (!present[s]) gaps.push_back(s);
  }
  return gaps;
}

}  // namespace flipdist
