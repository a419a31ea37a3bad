#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "flipdist/convex_engine.hpp"
#include "flipdist/instance_io.hpp"
#include "flipdist/oracle.hpp"
#include "flipdist/polygon_engine.hpp"
#include "flipdist/variants.hpp"
#include "json.hpp"

using namespace flipdist;

namespace {

enum Exit { kOk = 0, kInvalid = 1, kMismatch = 2, kTooLarge = 3 };

int exit_code(const FlipError& e) {
  switch (e.kind()) {
    case ErrorKind::InstanceMismatch: return kMismatch;
    case ErrorKind::InstanceTooLarge: return kTooLarge;
    default: return kInvalid;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw FlipError(ErrorKind::InvalidInstance, "cannot read " + path);
  }
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// A parsed and validated instance of either kind.
struct Loaded {
  InstanceFile file;
  std::optional<PolygonModel> poly;
  PathSeq initial;
  PathSeq target;
};

Loaded load(const std::string& path, FlipModel model) {
  Loaded l;
  l.file = parse_instance(read_file(path));
  if (l.file.kind == InstanceKind::Convex) {
    ConvexInstance inst(l.file.n);
    l.initial = validate_path(l.file.initial, inst);
    l.target = validate_path(l.file.target, inst);
  } else {
    if (model != FlipModel::Plain) {
      throw FlipError(ErrorKind::InvalidInstance,
                      "flip models other than plain apply to convex instances");
    }
    l.poly.emplace(l.file.points);
    l.initial = validate_poly_path(l.file.initial, *l.poly).path;
    l.target = validate_poly_path(l.file.target, *l.poly).path;
  }
  return l;
}

DistanceResult solve_distance(const Loaded& l, FlipModel model) {
  if (l.poly) {
    return poly_flip_distance(PolyPath{l.initial}, PolyPath{l.target}, *l.poly);
  }
  return model_flip_distance(l.initial, l.target, model);
}

std::vector<FlipStep> solve_sequence(const Loaded& l, FlipModel model) {
  if (l.poly) {
    return poly_flip_sequence(PolyPath{l.initial}, PolyPath{l.target}, *l.poly);
  }
  return variant_flip_sequence(l.initial, l.target, model);
}

VerifyResult check(const Loaded& l, const std::vector<FlipStep>& steps,
                   FlipModel model) {
  if (l.poly) {
    return verify_sequence(PolyPath{l.initial}, PolyPath{l.target}, steps,
                           *l.poly);
  }
  return verify_sequence(l.initial, l.target, steps, model);
}

std::string witness(const DistanceResult& r, Label n) {
  const CaseVerdict& v = r.verdict;
  std::ostringstream os;
  if (v.run) {
    os << "run=" << v.run->start << ".." << v.run->end << " m=" << v.m;
  } else if (v.type3) {
    os << "type3=" << to_string(v.type3->d1) << ">" << to_string(v.type3->d2);
  } else if (v.gap) {
    os << "gap=" << to_string(slot_edge(*v.gap, n));
    if (v.target_gap && *v.target_gap != *v.gap) {
      os << " target_gap=" << to_string(slot_edge(*v.target_gap, n));
    }
  }
  return os.str();
}

FlipModel model_from(const std::string& name) {
  auto m = parse_model(name);
  if (!m) throw FlipError(ErrorKind::InvalidInstance, "unknown model " + name);
  return *m;
}

FlipGraph build_graph(Label convex_n, const std::string& polygon_file,
                      FlipModel model, Label cap) {
  if (!polygon_file.empty()) {
    InstanceFile f = parse_instance(read_file(polygon_file));
    if (f.kind != InstanceKind::Polygon) {
      throw FlipError(ErrorKind::InvalidInstance,
                      polygon_file + " is not a polygon instance");
    }
    return FlipGraph::polygon(PolygonModel(f.points), cap);
  }
  if (convex_n < 2) {
    throw FlipError(ErrorKind::InvalidInstance,
                    "give --convex <n> (n >= 2) or --polygon <file>");
  }
  return FlipGraph::convex(convex_n, model, cap);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Flip distance between plane spanning paths"};
  app.require_subcommand(1);

  std::string model_name = "plain";
  std::string instance_path;
  std::string sequence_path;
  bool json = false;
  bool dot = false;
  std::uint64_t seed = 0;
  Label cap = 0;
  Label convex_n = 0;
  std::string polygon_path;
  Label random_n = 0;
  std::string random_kind = "convex";

  auto add_model = [&](CLI::App* sub) {
    sub->add_option("--model", model_name, "plain, compatible or local")
        ->check(CLI::IsMember({"plain", "compatible", "local"}));
  };

  auto* distance = app.add_subcommand("distance", "Flip distance and case");
  distance->add_option("instance", instance_path)->required();
  add_model(distance);
  distance->add_flag("--json", json);

  auto* sequence = app.add_subcommand("sequence", "Minimum flip sequence as JSON");
  sequence->add_option("instance", instance_path)->required();
  add_model(sequence);
  sequence->add_flag("--json", json, "accepted for symmetry; output is JSON");

  auto* verify = app.add_subcommand("verify", "Replay a sequence file");
  verify->add_option("instance", instance_path)->required();
  verify->add_option("sequence", sequence_path)->required();
  add_model(verify);

  auto* random = app.add_subcommand("random", "Seeded random instance file");
  random->add_option("--n", random_n)->required();
  random->add_option("--kind", random_kind)
      ->check(CLI::IsMember({"convex", "polygon"}));
  random->add_option("--seed", seed);

  auto* oracle = app.add_subcommand("oracle", "Brute-force flip graph tools");
  oracle->require_subcommand(1);
  auto add_graph_opts = [&](CLI::App* sub) {
    sub->add_option("--convex", convex_n, "number of convex points");
    sub->add_option("--polygon", polygon_path, "polygon instance file");
    sub->add_option("--cap", cap, "enumeration cap");
    add_model(sub);
  };
  auto* o_distance = oracle->add_subcommand("distance", "BFS distance");
  o_distance->add_option("instance", instance_path)->required();
  o_distance->add_option("--cap", cap, "enumeration cap");
  add_model(o_distance);
  auto* o_diameter = oracle->add_subcommand("diameter", "Flip graph diameter");
  add_graph_opts(o_diameter);
  auto* o_graph = oracle->add_subcommand("flipgraph", "Export the flip graph");
  add_graph_opts(o_graph);
  o_graph->add_flag("--dot", dot);
  o_graph->add_flag("--json", json);
  auto* o_happy = oracle->add_subcommand("happy-search",
                                         "Pairs where every geodesic removes "
                                         "a shared edge");
  add_graph_opts(o_happy);
  o_happy->add_flag("--json", json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    const FlipModel model = model_from(model_name);

    if (*distance) {
      Loaded l = load(instance_path, model);
      DistanceResult r = solve_distance(l, model);
      if (json) {
        nlohmann::ordered_json j;
        j["distance"] = r.distance;
        j["case"] = case_name(r.verdict.case_tag);
        j["k"] = r.k;
        j["l"] = r.l;
        j["witness"] = witness(r, l.initial.n());
        std::cout << j.dump() << '\n';
      } else {
        std::cout << "distance=" << r.distance
                  << " case=" << case_name(r.verdict.case_tag) << " k=" << r.k
                  << " l=" << r.l;
        std::string w = witness(r, l.initial.n());
        if (!w.empty()) std::cout << ' ' << w;
        std::cout << '\n';
      }
      return kOk;
    }

    if (*sequence) {
      Loaded l = load(instance_path, model);
      DistanceResult r = solve_distance(l, model);
      std::vector<FlipStep> steps = solve_sequence(l, model);
      VerifyResult v = check(l, steps, model);
      if (!v.ok || steps.size() != r.distance) {
        std::cerr << "internal error: sequence failed replay: " << v.message
                  << '\n';
        return kInvalid;
      }
      std::cout << report_json({r.distance, case_name(r.verdict.case_tag),
                                steps})
                << '\n';
      return kOk;
    }

    if (*verify) {
      Loaded l = load(instance_path, model);
      SequenceReport report =
          parse_report_json(read_file(sequence_path), l.initial.n());
      VerifyResult v = check(l, report.steps, model);
      if (v.ok) {
        std::cout << "ok\n";
        return kOk;
      }
      if (v.failed_step) {
        std::cout << "fail at step " << *v.failed_step << ": " << v.message
                  << '\n';
      } else {
        std::cout << "fail: " << v.message << '\n';
      }
      return kInvalid;
    }

    if (*random) {
      std::mt19937_64 rng(seed);
      InstanceFile f;
      f.n = random_n;
      if (random_kind == "convex") {
        if (random_n < 2) {
          throw FlipError(ErrorKind::InvalidInstance, "n must be at least 2");
        }
        PathSeq a = random_convex_path(random_n, rng);
        PathSeq b = random_convex_path(random_n, rng);
        f.initial.assign(a.order().begin(), a.order().end());
        f.target.assign(b.order().begin(), b.order().end());
      } else {
        if (random_n < 3) {
          throw FlipError(ErrorKind::InvalidInstance, "n must be at least 3");
        }
        f.kind = InstanceKind::Polygon;
        PolygonModel poly = random_simple_polygon(random_n, rng);
        f.points = poly.vertices();
        std::vector<PolyPath> paths =
            enumerate_paths(poly, cap > 0 ? cap : kPolygonCap);
        std::uniform_int_distribution<std::size_t> pick(0, paths.size() - 1);
        const PathSeq& a = paths[pick(rng)].path;
        const PathSeq& b = paths[pick(rng)].path;
        f.initial.assign(a.order().begin(), a.order().end());
        f.target.assign(b.order().begin(), b.order().end());
      }
      std::cout << serialize_instance(f);
      return kOk;
    }

    if (*o_distance) {
      Loaded l = load(instance_path, model);
      FlipGraph g =
          l.poly ? FlipGraph::polygon(*l.poly, cap > 0 ? cap : kPolygonCap)
                 : FlipGraph::convex(l.initial.n(), model,
                                     cap > 0 ? cap : kConvexCap);
      auto d = bfs_distance(g, l.initial, l.target);
      if (d) {
        std::cout << "distance=" << *d << '\n';
      } else {
        std::cout << "distance=unreachable\n";
      }
      return kOk;
    }

    const Label default_cap = polygon_path.empty() ? kConvexCap : kPolygonCap;
    const Label graph_cap = cap > 0 ? cap : default_cap;

    if (*o_diameter) {
      FlipGraph g = build_graph(convex_n, polygon_path, model, graph_cap);
      std::cout << diameter(g) << '\n';
      return kOk;
    }

    if (*o_graph) {
      FlipGraph g = build_graph(convex_n, polygon_path, model, graph_cap);
      if (json) {
        std::cout << to_json(g);
      } else if (dot) {
        std::cout << to_dot(g);
      } else {
        std::cout << "nodes=" << g.size() << " edges=" << g.edge_count()
                  << '\n';
      }
      return kOk;
    }

    if (*o_happy) {
      FlipGraph g = build_graph(convex_n, polygon_path, model, graph_cap);
      std::vector<HappyViolation> found = happy_edge_search(g);
      if (json) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& v : found) {
          nlohmann::ordered_json item;
          item["p"] = std::vector<Label>(v.p.order().begin(), v.p.order().end());
          item["q"] = std::vector<Label>(v.q.order().begin(), v.q.order().end());
          item["shared"] = to_string(v.shared);
          item["distance"] = v.distance;
          if (v.distance_keeping) {
            item["distance_keeping"] = *v.distance_keeping;
          } else {
            item["distance_keeping"] = nullptr;
          }
          arr.push_back(std::move(item));
        }
        std::cout << arr.dump(2) << '\n';
      } else {
        for (const auto& v : found) {
          std::cout << path_string(v.p) << " | " << path_string(v.q)
                    << " shared=" << to_string(v.shared)
                    << " distance=" << v.distance << " keeping="
                    << (v.distance_keeping
                            ? std::to_string(*v.distance_keeping)
                            : std::string("none"))
                    << '\n';
        }
        std::cout << "violations=" << found.size() << '\n';
      }
      return kOk;
    }
  } catch (const FlipError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e);
  }
  return kOk;
}
