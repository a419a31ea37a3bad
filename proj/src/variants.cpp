#include "flipdist/variants.hpp"

namespace flipdist {

const char* to_string(FlipModel model) {
  switch (model) {
    case FlipModel::Plain: return "plain";
    case FlipModel::Compatible: return "compatible";
    case FlipModel::Local: return "local";
  }
  return "?";
}

std::optional<FlipModel> parse_model(std::string_view name) {
  if (name == "plain") return FlipModel::Plain;
  if (name == "compatible") return FlipModel::Compatible;
  if (name == "local") return FlipModel::Local;
  return std::nullopt;
}

bool is_model_flip(const PathSeq& p, const FlipStep& f, FlipModel model) {
  switch (model) {
    case FlipModel::Plain:
      return true;
    case FlipModel::Compatible:
      return classify_flip(p, f) != FlipType::Type3;
    case FlipModel::Local:
      return f.removed.shares_vertex(f.added);
  }
  return false;
}

GapRelation local_gap_relation(const PathSeq& p_in, const PathSeq& p_tar) {
  require_same_instance(p_in, p_tar);
  const Label n = p_in.n();
  GapTable table = GapTable::build(p_in, p_tar);
  if (auto g = table.first_with(0)) {
    return {GapRelationKind::CommonGap, *g, *g};
  }
  // Without a common gap every slot is marked; a 1 next to a 2 is a gap of
  // the target beside a gap of the initial path.
  for (Label s = 0; s < n; ++s) {
    Label t = (s + 1) % n;
    std::uint8_t a = table.marks[s];
    std::uint8_t b = table.marks[t];
    if (a == 2 && b == 1) return {GapRelationKind::AdjacentGaps, s, t};
    if (a == 1 && b == 2) return {GapRelationKind::AdjacentGaps, t, s};
  }
  GapRelation r;
  r.relation = GapRelationKind::Disjoint;
  bool have_in = false;
  bool have_tar = false;
  for (Label s = 0; s < n; ++s) {
    if (!have_in && table.gap_of_initial(s)) {
      r.initial_gap = s;
      have_in = true;
    }
    if (!have_tar && table.gap_of_target(s)) {
      r.target_gap = s;
      have_tar = true;
    }
  }
  return r;
}

namespace {

// Case 1 is shared by every model.
std::optional<DistanceResult> good_run_case(const PathSeq& p_in,
                                            const PathSeq& p_tar) {
  DistanceResult r;
  r.k = diagonal_count(p_in);
  r.l = diagonal_count(p_tar);
  HappyAnalysis happy = happy_analysis(p_in, p_tar);
  if (happy.m == 0) return std::nullopt;
  r.verdict.case_tag = CaseTag::Case1;
  r.verdict.m = happy.m;
  r.verdict.run = happy.runs[*happy.best_run];
  r.distance = r.k + r.l - 2 * happy.m;
  return r;
}

}  // namespace

DistanceResult compatible_flip_distance(const PathSeq& p_in,
                                        const PathSeq& p_tar) {
  require_same_instance(p_in, p_tar);
  if (auto r = good_run_case(p_in, p_tar)) return *r;
  DistanceResult r;
  r.k = diagonal_count(p_in);
  r.l = diagonal_count(p_tar);
  GapRelation rel = local_gap_relation(p_in, p_tar);
  r.verdict.gap = rel.initial_gap;
  if (rel.relation == GapRelationKind::CommonGap) {
    r.verdict.case_tag = CaseTag::Case2a;
    r.distance = r.k + r.l;
  } else {
    r.verdict.case_tag = CaseTag::Case2b;
    r.verdict.target_gap = rel.target_gap;
    r.distance = r.k + r.l + 1;
  }
  return r;
}

DistanceResult local_flip_distance(const PathSeq& p_in, const PathSeq& p_tar) {
  require_same_instance(p_in, p_tar);
  if (auto r = good_run_case(p_in, p_tar)) return *r;
  DistanceResult r;
  r.k = diagonal_count(p_in);
  r.l = diagonal_count(p_tar);
  GapRelation rel = local_gap_relation(p_in, p_tar);
  r.verdict.gap = rel.initial_gap;
  switch (rel.relation) {
    case GapRelationKind::CommonGap:
      r.verdict.case_tag = CaseTag::Case2a;
      r.distance = r.k + r.l;
      break;
    case GapRelationKind::AdjacentGaps:
      r.verdict.case_tag = CaseTag::Case2b;
      r.verdict.target_gap = rel.target_gap;
      r.distance = r.k + r.l + 1;
      break;
    case GapRelationKind::Disjoint:
      r.verdict.case_tag = CaseTag::Case2c;
      r.verdict.target_gap = rel.target_gap;
      r.distance = r.k + r.l + 2;
      break;
  }
  return r;
}

DistanceResult model_flip_distance(const PathSeq& p_in, const PathSeq& p_tar,
                                   FlipModel model) {
  switch (model) {
    case FlipModel::Plain: return flip_distance(p_in, p_tar);
    case FlipModel::Compatible: return compatible_flip_distance(p_in, p_tar);
    case FlipModel::Local: return local_flip_distance(p_in, p_tar);
  }
  return flip_distance(p_in, p_tar);
}

std::vector<FlipStep> simulate_type2_local(const PathSeq& p,
                                           Label target_gap) {
  const Label n = p.n();
  std::vector<Label> gaps = gap_set(p);
  if (gaps.size() != 1) {
    throw FlipError(ErrorKind::InvalidFlip,
                    "realignment needs a path without diagonals");
  }
  const Label gap = gaps.front();
  if (gap == target_gap) {
    throw FlipError(ErrorKind::SameGap,
                    "path already misses " + to_string(slot_edge(gap, n)));
  }
  const Edge g1 = slot_edge(gap, n);
  const Edge g2 = slot_edge(target_gap, n);
  if (g1.shares_vertex(g2)) {
    return {{g2, g1, FlipType::Type2}};
  }
  // Walking from one end of the gap to the other, the target gap's first
  // vertex is met before its second.
  const Label start = p.front();
  const Label finish = p.back();
  Label first = AdjTables::kNone;
  Label second = AdjTables::kNone;
  for (std::size_t i = 0; i + 1 < p.order().size(); ++i) {
    if (p.edge(i) == g2) {
      first = p[i];
      second = p[i + 1];
      break;
    }
  }
  const Edge bridge = Edge::make(start, second, n);
  return {{Edge::make(first, second, n), bridge, FlipType::Type1},
          {bridge, Edge::make(start, finish, n), FlipType::Type1}};
}

std::vector<FlipStep> variant_flip_sequence(const PathSeq& p_in,
                                            const PathSeq& p_tar,
                                            FlipModel model) {
  const Label n = p_in.n();
  if (model == FlipModel::Plain) return flip_sequence(p_in, p_tar);
  DistanceResult r = model_flip_distance(p_in, p_tar, model);
  const CaseVerdict& v = r.verdict;
  std::vector<FlipStep> out;
  if (v.case_tag == CaseTag::Case1) {
    out = sequence_for(p_in, p_tar, v);
  } else {
    out = reduce_toward_gap(p_in, *v.gap);
    if (v.target_gap && *v.target_gap != *v.gap) {
      if (model == FlipModel::Compatible ||
          v.case_tag == CaseTag::Case2b) {
        out.push_back(
            {slot_edge(*v.target_gap, n), slot_edge(*v.gap, n), FlipType::Type2});
      } else {
        std::vector<FlipStep> realign =
            simulate_type2_local(hull_path_with_gap(n, *v.gap), *v.target_gap);
        out.insert(out.end(), realign.begin(), realign.end());
      }
    }
    append_reversed(out,
                    reduce_toward_gap(p_tar, v.target_gap.value_or(*v.gap)));
  }
  // Neither restricted model admits a Type 3 step.
  for (const FlipStep& f : out) {
    if (f.flip_type == FlipType::Type3) {
      throw FlipError(ErrorKind::ConstructionFailure,
                      std::string("Type 3 step in the ") + to_string(model) +
                          " model");
    }
  }
  return out;
}

}  // namespace flipdist
