#include "flipdist/polygon_engine.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace flipdist {

namespace {

using Wide = __int128;

Wide cross(Point a, Point b, Point c) {
  return static_cast<Wide>(b.x - a.x) * (c.y - a.y) -
         static_cast<Wide>(b.y - a.y) * (c.x - a.x);
}

int sign(Wide v) { return (v > 0) - (v < 0); }

bool on_segment(Point a, Point b, Point p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

[[noreturn]] void bad_polygon(const std::string& why) {
  throw FlipError(ErrorKind::InvalidPolygon, why);
}

constexpr Label kVisibilityCacheLimit = 512;

}  // namespace

Orientation orientation(Point a, Point b, Point c) {
  switch (sign(cross(a, b, c))) {
    case 1: return Orientation::Left;
    case -1: return Orientation::Right;
    default: return Orientation::Collinear;
  }
}

bool segments_intersect(Point a, Point b, Point c, Point d) {
  int d1 = sign(cross(c, d, a));
  int d2 = sign(cross(c, d, b));
  int d3 = sign(cross(a, b, c));
  int d4 = sign(cross(a, b, d));
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  if (d1 == 0 && on_segment(c, d, a)) return true;
  if (d2 == 0 && on_segment(c, d, b)) return true;
  if (d3 == 0 && on_segment(a, b, c)) return true;
  if (d4 == 0 && on_segment(a, b, d)) return true;
  return false;
}

namespace {

// Interior test for a point given in doubled coordinates against the
// doubled polygon; the point must not lie on the boundary.
bool strictly_inside_doubled(const std::vector<Point>& v, Point m2) {
  bool inside = false;
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    Point p{2 * v[i].x, 2 * v[i].y};
    Point q{2 * v[(i + 1) % n].x, 2 * v[(i + 1) % n].y};
    bool p_above = p.y > m2.y;
    bool q_above = q.y > m2.y;
    if (p_above == q_above) continue;
    int s = sign(cross(p, q, m2));
    if (q_above ? s > 0 : s < 0) inside = !inside;
  }
  return inside;
}

bool compute_interior(const std::vector<Point>& v, Label a, Label b) {
  const Label n = static_cast<Label>(v.size());
  for (Label c = 0; c < n; ++c) {
    Label d = (c + 1) % n;
    if (c == a || c == b || d == a || d == b) continue;
    if (segments_intersect(v[a], v[b], v[c], v[d])) return false;
  }
  Point m2{v[a].x + v[b].x, v[a].y + v[b].y};
  return strictly_inside_doubled(v, m2);
}

}  // namespace

PolygonModel::PolygonModel(std::vector<Point> vertices)
    : vertices_(std::move(vertices)) {
  const Label n = this->n();
  if (n < 3) bad_polygon("a polygon needs at least 3 vertices");
  for (Label i = 0; i < n; ++i) {
    for (Label j = i + 1; j < n; ++j) {
      for (Label k = j + 1; k < n; ++k) {
        if (orientation(vertices_[i], vertices_[j], vertices_[k]) ==
            Orientation::Collinear) {
          bad_polygon("vertices " + std::to_string(i) + ", " +
                      std::to_string(j) + ", " + std::to_string(k) +
                      " are collinear");
        }
      }
    }
  }
  for (Label i = 0; i < n; ++i) {
    for (Label j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      if (segments_intersect(vertices_[i], vertices_[(i + 1) % n],
                             vertices_[j], vertices_[(j + 1) % n])) {
        bad_polygon("boundary edges " + std::to_string(i) + " and " +
                    std::to_string(j) + " intersect");
      }
    }
  }
  Wide twice_area = 0;
  for (Label i = 0; i < n; ++i) {
    const Point& p = vertices_[i];
    const Point& q = vertices_[(i + 1) % n];
    twice_area += static_cast<Wide>(p.x) * q.y - static_cast<Wide>(q.x) * p.y;
  }
  if (twice_area <= 0) bad_polygon("vertices must be in counterclockwise order");

  if (n <= kVisibilityCacheLimit) {
    visible_.assign(static_cast<std::size_t>(n) * n, 0);
    for (Label a = 0; a < n; ++a) {
      for (Label b = a + 1; b < n; ++b) {
        bool ok = is_boundary(a, b) || compute_interior(vertices_, a, b);
        visible_[a * n + b] = visible_[b * n + a] = ok ? 1 : 0;
      }
    }
  }
}

bool PolygonModel::is_boundary(Label a, Label b) const noexcept {
  const Label n = this->n();
  return (a + 1) % n == b || (b + 1) % n == a;
}

bool PolygonModel::usable(Label a, Label b) const {
  if (a == b) return false;
  if (!visible_.empty()) return visible_[a * n() + b] != 0;
  return is_boundary(a, b) || compute_interior(vertices_, a, b);
}

bool PolygonModel::edges_cross(const Edge& e1, const Edge& e2) const {
  if (e1.shares_vertex(e2)) return false;
  return segments_intersect(vertices_[e1.a], vertices_[e1.b],
                            vertices_[e2.a], vertices_[e2.b]);
}

bool is_interior_edge(Label a, Label b, const PolygonModel& poly) {
  if (a == b || poly.is_boundary(a, b)) return false;
  return compute_interior(poly.vertices(), a, b);
}

PolyPath validate_poly_path(std::span<const Label> order,
                            const PolygonModel& poly) {
  const Label n = poly.n();
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
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    Edge e = Edge::make(order[i], order[i + 1], n);
    if (!poly.usable(e.a, e.b)) {
      throw FlipError(ErrorKind::EdgeNotVisible,
                      "edge " + to_string(e) + " leaves the polygon");
    }
    edges.push_back(e);
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (poly.edges_cross(edges[i], edges[j])) {
        throw FlipError(ErrorKind::CrossingEdges,
                        "edges " + to_string(edges[i]) + " and " +
                            to_string(edges[j]) + " cross");
      }
    }
  }
  return PolyPath{unchecked_path({order.begin(), order.end()})};
}

PolyPath poly_apply_flip(const PolyPath& p, const FlipStep& f,
                         const PolygonModel& poly) {
  if (!poly.usable(f.added.a, f.added.b)) {
    throw FlipError(ErrorKind::EdgeNotVisible,
                    "edge " + to_string(f.added) + " leaves the polygon");
  }
  PathSeq next = apply_flip(p.path, f);
  return validate_poly_path(next.order(), poly);
}

std::size_t interior_edge_count(const PolyPath& p) {
  return diagonal_count(p.path);
}

std::vector<InteriorHappyInfo> interior_happy_edges(const PolyPath& p_in,
                                                    const PolyPath& p_tar) {
  std::vector<InteriorHappyInfo> out;
  for (const HappyDiagonalInfo& d :
       happy_analysis(p_in.path, p_tar.path).diagonals) {
    out.push_back({d.diag, d.side_in_initial, d.side_in_target, d.good});
  }
  return out;
}

std::optional<Type3Pair> poly_type3_pair(const PolyPath& p_in,
                                         const PolyPath& p_tar,
                                         const PolygonModel& poly) {
  const PathSeq& in = p_in.path;
  const PathSeq& tar = p_tar.path;
  require_same_instance(in, tar);
  const Label n = in.n();
  if (n < 4) return std::nullopt;

  AdjTables tar_adj = adjacency_tables(tar);
  std::vector<std::size_t> tar_pos(n);
  for (std::size_t i = 0; i < tar.order().size(); ++i) tar_pos[tar[i]] = i;
  std::vector<char> in_boundary(n, 0);
  for (std::size_t i = 0; i < in.edge_count(); ++i) {
    Label s = hull_slot(in.edge(i), n);
    if (s >= 0) in_boundary[s] = 1;
  }
  std::vector<char> tar_boundary(n, 0);
  for (std::size_t i = 0; i < tar.edge_count(); ++i) {
    Label s = hull_slot(tar.edge(i), n);
    if (s >= 0) tar_boundary[s] = 1;
  }
  auto contains_boundary = [n](const std::vector<char>& slots,
                               const PathSeq& p) {
    std::vector<char> have(n, 0);
    for (std::size_t i = 0; i < p.edge_count(); ++i) {
      Label s = hull_slot(p.edge(i), n);
      if (s >= 0) have[s] = 1;
    }
    for (Label s = 0; s < n; ++s) {
      if (slots[s] && !have[s]) return false;
    }
    return true;
  };

  for (std::size_t i = 0; i < in.edge_count(); ++i) {
    const Edge d1 = in.edge(i);
    if (!d1.is_diagonal()) continue;
    for (int dir : {-1, +1}) {
      Label x = ((d1.a + dir) % n + n) % n;
      Label y = ((d1.b + dir) % n + n) % n;
      if (!tar_adj.adjacent(x, y)) continue;
      const Edge d2 = Edge::make(x, y, n);
      if (!poly.edges_cross(d1, d2)) continue;
      const std::size_t j = std::min(tar_pos[x], tar_pos[y]);

      PathSeq pre = reduce_to_single_diagonal(in, i);
      PathSeq post = reduce_to_single_diagonal(tar, j);
      if (Edge::make(pre.front(), pre.back(), n) != d2) continue;
      try {
        PathSeq flipped = apply_flip(pre, {d1, d2, FlipType::Type3});
        if (flipped != post) continue;
        (void)validate_poly_path(pre.order(), poly);
        (void)validate_poly_path(post.order(), poly);
      } catch (const FlipError&) {
        continue;
      }
      if (!contains_boundary(in_boundary, pre) ||
          !contains_boundary(tar_boundary, post)) {
        continue;
      }
      return Type3Pair{d1, d2, dir, i, j};
    }
  }
  return std::nullopt;
}

DistanceResult poly_flip_distance(const PolyPath& p_in, const PolyPath& p_tar,
                                  const PolygonModel& poly) {
  const PathSeq& in = p_in.path;
  const PathSeq& tar = p_tar.path;
  require_same_instance(in, tar);
  if (in.n() != poly.n()) {
    throw FlipError(ErrorKind::InstanceMismatch,
                    "paths do not match the polygon size");
  }
  DistanceResult r;
  r.k = diagonal_count(in);
  r.l = diagonal_count(tar);
  const std::size_t kl = r.k + r.l;

  HappyAnalysis happy = happy_analysis(in, tar);
  if (happy.m > 0) {
    r.verdict.case_tag = CaseTag::Case1;
    r.verdict.m = happy.m;
    r.verdict.run = happy.runs[*happy.best_run];
    r.distance = kl - 2 * happy.m;
    return r;
  }
  if (auto t3 = poly_type3_pair(p_in, p_tar, poly)) {
    r.verdict.case_tag = CaseTag::Case2a;
    r.verdict.type3 = *t3;
    r.distance = kl - 1;
    return r;
  }
  GapTable gaps = GapTable::build(in, tar);
  if (auto g = gaps.first_with(0)) {
    r.verdict.case_tag = CaseTag::Case2b;
    r.verdict.gap = *g;
    r.distance = kl;
    return r;
  }
  r.verdict.case_tag = CaseTag::Case2c;
  for (Label s = 0; s < in.n(); ++s) {
    if (!r.verdict.gap && gaps.gap_of_initial(s)) r.verdict.gap = s;
    if (!r.verdict.target_gap && gaps.gap_of_target(s)) {
      r.verdict.target_gap = s;
    }
  }
  r.distance = kl + 1;
  return r;
}

std::vector<FlipStep> poly_flip_sequence(const PolyPath& p_in,
                                         const PolyPath& p_tar,
                                         const PolygonModel& poly) {
  DistanceResult r = poly_flip_distance(p_in, p_tar, poly);
  std::vector<FlipStep> steps = sequence_for(p_in.path, p_tar.path, r.verdict);
  PolyPath cur = p_in;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    try {
      cur = poly_apply_flip(cur, steps[i], poly);
    } catch (const FlipError& err) {
      throw FlipError(ErrorKind::ConstructionFailure,
                      "step " + std::to_string(i) + " is not a polygon flip: " +
                          err.what());
    }
  }
  if (cur != p_tar || steps.size() != r.distance) {
    throw FlipError(ErrorKind::ConstructionFailure,
                    "constructed sequence does not reach the target");
  }
  return steps;
}

PolygonModel comb_polygon(Label n) {
  if (n < 5) {
    throw FlipError(ErrorKind::InvalidInstance,
                    "comb polygon needs at least 5 vertices");
  }
  // Apex at the origin; tips on a large circle, valleys on a small one.
  // Every tooth after the first leans past its right valley so that the
  // tip sees nothing but its two boundary neighbours.
  const Label teeth = n / 2;
  const Label valleys = teeth - 1;
  const bool odd = n % 2 == 1;
  const double start = std::numbers::pi / 6;
  const double span = 2 * std::numbers::pi / 3;
  const double step = span / teeth;
  const double inner = 1000.0;
  const double outer = 12000.0;
  auto polar = [](double r, double angle) {
    return Point{static_cast<std::int64_t>(std::llround(r * std::cos(angle))),
                 static_cast<std::int64_t>(std::llround(r * std::sin(angle)))};
  };
  std::vector<Point> pts;
  pts.push_back({0, 0});
  pts.push_back(polar(outer, start));
  for (Label j = 1; j <= valleys; ++j) {
    pts.push_back(polar(inner, start + j * step));
    pts.push_back(polar(outer * (1.0 + 0.01 * j), start + (j + 1.3) * step));
  }
  if (odd) {
    // Second apex vertex just off the last tooth's return edge.
    Point last = pts.back();
    pts.push_back({last.x / 3 - 150, last.y / 3 + 40});
  }
  return PolygonModel(std::move(pts));
}

PolygonModel random_simple_polygon(Label n, std::mt19937_64& rng,
                                   std::int64_t coord_range) {
  std::uniform_int_distribution<std::int64_t> coord(0, coord_range);
  for (;;) {
    std::vector<Point> pts;
    while (static_cast<Label>(pts.size()) < n) {
      Point p{coord(rng), coord(rng)};
      bool ok = true;
      for (std::size_t i = 0; i < pts.size() && ok; ++i) {
        if (pts[i] == p) ok = false;
        for (std::size_t j = i + 1; j < pts.size() && ok; ++j) {
          if (orientation(pts[i], pts[j], p) == Orientation::Collinear) {
            ok = false;
          }
        }
      }
      if (ok) pts.push_back(p);
    }
    std::shuffle(pts.begin(), pts.end(), rng);
    // 2-opt: reversing the stretch between two crossing edges strictly
    // shortens the tour, so this terminates.
    bool changed = true;
    while (changed) {
      changed = false;
      for (Label i = 0; i < n && !changed; ++i) {
        for (Label j = i + 2; j < n && !changed; ++j) {
          if (i == 0 && j == n - 1) continue;
          if (segments_intersect(pts[i], pts[i + 1], pts[j],
                                 pts[(j + 1) % n])) {
            std::reverse(pts.begin() + i + 1, pts.begin() + j + 1);
            changed = true;
          }
        }
      }
    }
    Wide twice_area = 0;
    for (Label i = 0; i < n; ++i) {
      const Point& p = pts[i];
      const Point& q = pts[(i + 1) % n];
      twice_area += static_cast<Wide>(p.x) * q.y - static_cast<Wide>(q.x) * p.y;
    }
    if (twice_area < 0) std::reverse(pts.begin(), pts.end());
    try {
      return PolygonModel(std::move(pts));
    } catch (const FlipError&) {
      // Degenerate draw; try again with fresh points.
    }
  }
}

}  // namespace flipdist
