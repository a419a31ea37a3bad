#include "flipdist/convex_engine.hpp"

#include <algorithm>

namespace flipdist {

const char* case_name(CaseTag tag) {
  switch (tag) {
    case CaseTag::Case1: return "1";
    case CaseTag::Case2a: return "2a";
    case CaseTag::Case2b: return "2b";
    case CaseTag::Case2c: return "2c";
  }
  return "?";
}

void require_same_instance(const PathSeq& p_in, const PathSeq& p_tar) {
  if (p_in.n() != p_tar.n()) {
    throw FlipError(ErrorKind::InstanceMismatch,
                    "paths live on instances of size " +
                        std::to_string(p_in.n()) + " and " +
                        std::to_string(p_tar.n()));
  }
}

GapTable GapTable::build(const PathSeq& p_in, const PathSeq& p_tar) {
  const Label n = p_in.n();
  GapTable t;
  t.marks.assign(n, 0);
  for (std::size_t i = 0; i < p_in.edge_count(); ++i) {
    Label s = hull_slot(p_in.edge(i), n);
    if (s >= 0) t.marks[s] |= 1;
  }
  for (std::size_t i = 0; i < p_tar.edge_count(); ++i) {
    Label s = hull_slot(p_tar.edge(i), n);
    if (s >= 0) t.marks[s] |= 2;
  }
  return t;
}

std::optional<Label> GapTable::first_with(std::uint8_t mark) const {
  for (std::size_t s = 0; s < marks.size(); ++s) {
    if (marks[s] == mark) return static_cast<Label>(s);
  }
  return std::nullopt;
}

HappyAnalysis happy_analysis(const PathSeq& p_in, const PathSeq& p_tar) {
  require_same_instance(p_in, p_tar);
  const Label n = p_in.n();
  const AdjTables in = adjacency_tables(p_in);
  const AdjTables tar = adjacency_tables(p_tar);

  HappyAnalysis out;
  std::optional<HappyRun> open;
  auto close_run = [&] {
    if (!open) return;
    out.runs.push_back(*open);
    const HappyRun& r = out.runs.back();
    if (r.good_diag_count > out.m) {
      out.m = r.good_diag_count;
      out.best_run = out.runs.size() - 1;
    }
    open.reset();
  };

  for (std::size_t i = 0; i < p_in.edge_count(); ++i) {
    const Edge e = p_in.edge(i);
    if (!tar.adjacent(e.a, e.b)) {
      close_run();
      continue;
    }
    if (!open) open = HappyRun{i, i, 0, 0};
    open->end = i;
    if (!e.is_diagonal()) continue;

    HappyDiagonalInfo info;
    info.diag = e;
    info.side_in_initial = {side_of(e, in.other(e.a, e.b), n),
                            side_of(e, in.other(e.b, e.a), n)};
    info.side_in_target = {side_of(e, tar.other(e.a, e.b), n),
                           side_of(e, tar.other(e.b, e.a), n)};
    bool decided = false;
    for (int end = 0; end < 2 && !decided; ++end) {
      Side s_in = info.side_in_initial[end];
      Side s_tar = info.side_in_target[end];
      if (s_in != Side::EndpointOfPath && s_tar != Side::EndpointOfPath) {
        info.good = s_in == s_tar;
        decided = true;
      }
    }
    if (!decided) info.good = true;
    out.diagonals.push_back(info);
    ++open->diag_count;
    if (info.good) ++open->good_diag_count;
  }
  close_run();
  return out;
}

namespace {

// Position of each label along p.
std::vector<std::size_t> positions(const PathSeq& p) {
  std::vector<std::size_t> pos(p.n());
  for (std::size_t i = 0; i < pos.size(); ++i) pos[p[i]] = i;
  return pos;
}

}  // namespace

std::optional<Type3Pair> type3_pair(const PathSeq& p_in,
                                    const PathSeq& p_tar) {
  require_same_instance(p_in, p_tar);
  const Label n = p_in.n();
  if (n < 4) return std::nullopt;
  const AdjTables in = adjacency_tables(p_in);
  const AdjTables tar = adjacency_tables(p_tar);
  auto wrap = [n](Label v) { return (v % n + n) % n; };

  for (std::size_t i = 0; i < p_in.edge_count(); ++i) {
    const Edge d1 = p_in.edge(i);
    if (!d1.is_diagonal()) continue;
    for (int dir : {-1, +1}) {
      // Pre-flip configuration: every endpoint u of d1 continues towards
      // u - dir; post-flip, every endpoint x of d2 continues towards x + dir.
      Label x = wrap(d1.a + dir);
      Label y = wrap(d1.b + dir);
      if (!tar.adjacent(x, y)) continue;
      Label z = in.other(d1.a, d1.b);
      if (z == AdjTables::kNone ||
          side_of(d1, z, n) != side_of(d1, wrap(d1.a - dir), n)) {
        continue;
      }
      const Edge d2 = Edge::make(x, y, n);
      Label z2 = tar.other(x, y);
      if (z2 == AdjTables::kNone ||
          side_of(d2, z2, n) != side_of(d2, wrap(x + dir), n)) {
        continue;
      }
      Type3Pair pair{d1, d2, dir, i, 0};
      std::size_t px = 0;
      std::size_t py = 0;
      for (std::size_t j = 0; j < p_tar.order().size(); ++j) {
        if (p_tar[j] == x) px = j;
        if (p_tar[j] == y) py = j;
      }
      pair.pos_target = std::min(px, py);
      return pair;
    }
  }
  return std::nullopt;
}

std::optional<Label> common_gap(const PathSeq& p_in, const PathSeq& p_tar) {
  require_same_instance(p_in, p_tar);
  return GapTable::build(p_in, p_tar).first_with(0);
}

DistanceResult flip_distance(const PathSeq& p_in, const PathSeq& p_tar) {
  require_same_instance(p_in, p_tar);
  DistanceResult r;
  r.k = diagonal_count(p_in);
  r.l = diagonal_count(p_tar);
  const std::size_t kl = r.k + r.l;

  HappyAnalysis happy = happy_analysis(p_in, p_tar);
  if (happy.m > 0) {
    r.verdict.case_tag = CaseTag::Case1;
    r.verdict.m = happy.m;
    r.verdict.run = happy.runs[*happy.best_run];
    r.distance = kl - 2 * happy.m;
    return r;
  }
  if (auto t3 = type3_pair(p_in, p_tar)) {
    r.verdict.case_tag = CaseTag::Case2a;
    r.verdict.type3 = *t3;
    r.distance = kl - 1;
    return r;
  }
  GapTable gaps = GapTable::build(p_in, p_tar);
  if (auto g = gaps.first_with(0)) {
    r.verdict.case_tag = CaseTag::Case2b;
    r.verdict.gap = *g;
    r.distance = kl;
    return r;
  }
  r.verdict.case_tag = CaseTag::Case2c;
  for (Label s = 0; s < p_in.n(); ++s) {
    if (!r.verdict.gap && gaps.gap_of_initial(s)) r.verdict.gap = s;
    if (!r.verdict.target_gap && gaps.gap_of_target(s)) {
      r.verdict.target_gap = s;
    }
  }
  r.distance = kl + 1;
  return r;
}

EdgeRange locate_run(const PathSeq& p_in, const HappyRun& run,
                     const PathSeq& p) {
  std::vector<std::size_t> pos = positions(p);
  std::size_t lo = pos[p_in[run.start]];
  std::size_t hi = lo;
  for (std::size_t i = run.start; i <= run.end + 1; ++i) {
    lo = std::min(lo, pos[p_in[i]]);
    hi = std::max(hi, pos[p_in[i]]);
  }
  return {lo, hi - 1};
}

namespace {

// Removes the diagonals at edge indices [0, stop) from the front endpoint.
void reduce_front(const PathSeq& p, std::size_t stop,
                  std::vector<FlipStep>& out) {
  const Label n = p.n();
  Label end = p.front();
  for (std::size_t i = 0; i < stop; ++i) {
    const Edge d = p.edge(i);
    if (!d.is_diagonal()) continue;
    out.push_back({d, Edge::make(end, p[i + 1], n), FlipType::Type1});
    end = p[i];
  }
}

// Removes the diagonals at edge indices [from, edge_count) from the back
// endpoint, innermost last.
void reduce_back(const PathSeq& p, std::size_t from,
                 std::vector<FlipStep>& out) {
  const Label n = p.n();
  Label end = p.back();
  for (std::size_t i = p.edge_count(); i-- > from;) {
    const Edge d = p.edge(i);
    if (!d.is_diagonal()) continue;
    out.push_back({d, Edge::make(end, p[i], n), FlipType::Type1});
    end = p[i + 1];
  }
}

}  // namespace

std::vector<FlipStep> reduce_keeping(const PathSeq& p,
                                     std::optional<EdgeRange> keep) {
  std::vector<FlipStep> out;
  if (!keep) {
    reduce_front(p, p.edge_count(), out);
    return out;
  }
  reduce_front(p, keep->first, out);
  reduce_back(p, keep->last + 1, out);
  return out;
}

std::vector<FlipStep> reduce_toward_gap(const PathSeq& p, Label gap) {
  const Label n = p.n();
  std::vector<Label> gaps = gap_set(p);
  if (!std::binary_search(gaps.begin(), gaps.end(), gap)) {
    throw FlipError(ErrorKind::GapNotPresent,
                    "hull edge " + to_string(slot_edge(gap, n)) +
                        " is part of the path");
  }
  std::vector<FlipStep> out;
  Label end = p.front();
  std::size_t i = 0;
  for (; i < p.edge_count(); ++i) {
    const Edge d = p.edge(i);
    if (!d.is_diagonal()) continue;
    const Edge added = Edge::make(end, p[i + 1], n);
    if (hull_slot(added, n) == gap) break;
    out.push_back({d, added, FlipType::Type1});
    end = p[i];
  }
  // The next front flip would fill the gap: the rest goes from the back.
  if (i < p.edge_count()) reduce_back(p, i, out);
  return out;
}

PathSeq reduce_to_single_diagonal(const PathSeq& p, std::size_t pos) {
  const Label n = p.n();
  const Edge d = p.edge(pos);
  const Label x = p[pos];
  const Label y = p[pos + 1];
  // x's branch covers the side holding its other neighbor; y's the rest.
  const Label x_prev = pos > 0 ? p[pos - 1] : AdjTables::kNone;
  const Label y_next = pos + 2 < p.order().size() ? p[pos + 2]
                                                  : AdjTables::kNone;
  bool x_inside;
  if (x_prev != AdjTables::kNone) {
    x_inside = side_of(d, x_prev, n) == Side::Inside;
  } else {
    x_inside = side_of(d, y_next, n) == Side::Outside;
  }
  auto wrap = [n](Label v) { return (v % n + n) % n; };
  // Inside of (a, b) is a+1 .. b-1 clockwise.
  auto arc_toward = [&](Label from, Label to, int step,
                        std::vector<Label>& seq) {
    for (Label v = from;; v = wrap(v + step)) {
      seq.push_back(v);
      if (v == to) break;
    }
  };
  const Label inside_lo = wrap(d.a + 1);
  const Label inside_hi = wrap(d.b - 1);
  const Label outside_lo = wrap(d.b + 1);
  const Label outside_hi = wrap(d.a - 1);

  std::vector<Label> order;
  order.reserve(n);
  // Branch of x ends at x; walk it from its far end inward.
  auto side_arc_into = [&](Label v, bool inside, std::vector<Label>& seq) {
    // Vertices of the side adjacent to v, ordered so that v's hull
    // neighbour comes last.
    if (inside) {
      if (v == d.a) arc_toward(inside_hi, inside_lo, -1, seq);
      else arc_toward(inside_lo, inside_hi, +1, seq);
    } else {
      if (v == d.a) arc_toward(outside_lo, outside_hi, +1, seq);
      else arc_toward(outside_hi, outside_lo, -1, seq);
    }
  };
  side_arc_into(x, x_inside, order);
  order.push_back(x);
  order.push_back(y);
  std::vector<Label> tail;
  side_arc_into(y, !x_inside, tail);
  order.insert(order.end(), tail.rbegin(), tail.rend());
  return unchecked_path(std::move(order));
}

PathSeq hull_path_with_gap(Label n, Label gap) {
  std::vector<Label> order(n);
  for (Label i = 0; i < n; ++i) order[i] = (gap + 1 + i) % n;
  return unchecked_path(std::move(order));
}

void append_reversed(std::vector<FlipStep>& out,
                     const std::vector<FlipStep>& back_half) {
  out.reserve(out.size() + back_half.size());
  for (auto it = back_half.rbegin(); it != back_half.rend(); ++it) {
    out.push_back(it->swapped());
  }
}

std::vector<FlipStep> sequence_for(const PathSeq& p_in, const PathSeq& p_tar,
                                   const CaseVerdict& v) {
  const Label n = p_in.n();
  std::vector<FlipStep> out;
  switch (v.case_tag) {
    case CaseTag::Case1: {
      EdgeRange in_range{v.run->start, v.run->end};
      out = reduce_keeping(p_in, in_range);
      append_reversed(out,
                      reduce_keeping(p_tar, locate_run(p_in, *v.run, p_tar)));
      break;
    }
    case CaseTag::Case2a: {
      const Type3Pair& t = *v.type3;
      out = reduce_keeping(p_in, EdgeRange{t.pos_initial, t.pos_initial});
      out.push_back({t.d1, t.d2, FlipType::Type3});
      append_reversed(out, reduce_keeping(p_tar, EdgeRange{t.pos_target,
                                                           t.pos_target}));
      break;
    }
    case CaseTag::Case2b: {
      out = reduce_toward_gap(p_in, *v.gap);
      append_reversed(out, reduce_toward_gap(p_tar, *v.gap));
      break;
    }
    case CaseTag::Case2c: {
      out = reduce_toward_gap(p_in, *v.gap);
      out.push_back({slot_edge(*v.target_gap, n), slot_edge(*v.gap, n),
                     FlipType::Type2});
      append_reversed(out, reduce_toward_gap(p_tar, *v.target_gap));
      break;
    }
  }
  return out;
}

std::vector<FlipStep> flip_sequence(const PathSeq& p_in,
                                    const PathSeq& p_tar) {
  DistanceResult r = flip_distance(p_in, p_tar);
  return sequence_for(p_in, p_tar, r.verdict);
}

}  // namespace flipdist
