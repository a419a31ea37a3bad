#include "flipdist/instance_io.hpp"

#include <charconv>
#include <sstream>

#include "json.hpp"

namespace flipdist {

namespace {

struct Token {
  std::string_view text;
  std::size_t column = 0;  // 1-based
};

struct Line {
  std::size_t number = 0;
  std::vector<Token> tokens;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    ++number;
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) ++i;
      std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t') ++i;
      if (i > start) line.tokens.push_back({raw.substr(start, i - start), start + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

[[noreturn]] void fail_at(std::size_t line, std::size_t column,
                          const std::string& what,
                          ErrorKind kind = ErrorKind::InvalidInstance) {
  throw FlipError(kind, "line " + std::to_string(line) + ", column " +
                            std::to_string(column) + ": " + what);
}

template <typename Int>
Int parse_int(const Line& line, const Token& tok) {
  Int value{};
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    fail_at(line.number, tok.column,
            "expected an integer, found '" + std::string(tok.text) + "'");
  }
  return value;
}

std::vector<Label> parse_path_line(const Line& line, Label n) {
  if (line.tokens.front().text != "path") {
    fail_at(line.number, line.tokens.front().column,
            "expected 'path', found '" +
                std::string(line.tokens.front().text) + "'");
  }
  std::vector<Label> labels;
  for (std::size_t i = 1; i < line.tokens.size(); ++i) {
    labels.push_back(parse_int<Label>(line, line.tokens[i]));
  }
  if (static_cast<Label>(labels.size()) != n) {
    fail_at(line.number, line.tokens.front().column,
            "path has " + std::to_string(labels.size()) +
                " labels but the header declares n=" + std::to_string(n),
            ErrorKind::InstanceMismatch);
  }
  return labels;
}

}  // namespace

InstanceFile parse_instance(std::string_view text) {
  std::vector<Line> lines = split_lines(text);
  if (lines.empty()) fail_at(1, 1, "empty instance file");
  const Line& header = lines.front();
  InstanceFile file;
  const Token& kind = header.tokens.front();
  if (kind.text == "convex") {
    file.kind = InstanceKind::Convex;
  } else if (kind.text == "polygon") {
    file.kind = InstanceKind::Polygon;
  } else {
    fail_at(header.number, kind.column,
            "expected 'convex' or 'polygon', found '" + std::string(kind.text) +
                "'");
  }
  if (header.tokens.size() != 2) {
    fail_at(header.number, kind.column, "header must be '<kind> <n>'");
  }
  file.n = parse_int<Label>(header, header.tokens[1]);
  const Label min_n = file.kind == InstanceKind::Convex ? 2 : 3;
  if (file.n < min_n) {
    fail_at(header.number, header.tokens[1].column,
            "n must be at least " + std::to_string(min_n));
  }

  std::size_t next = 1;
  auto need = [&](const char* what) -> const Line& {
    if (next >= lines.size()) {
      std::size_t after = lines.back().number + 1;
      fail_at(after, 1, std::string("missing ") + what);
    }
    return lines[next++];
  };
  if (file.kind == InstanceKind::Polygon) {
    for (Label i = 0; i < file.n; ++i) {
      const Line& line = need("vertex line");
      if (line.tokens.size() != 2) {
        fail_at(line.number, line.tokens.front().column,
                "vertex line must hold two integers");
      }
      file.points.push_back({parse_int<std::int64_t>(line, line.tokens[0]),
                             parse_int<std::int64_t>(line, line.tokens[1])});
    }
  }
  file.initial = parse_path_line(need("initial path line"), file.n);
  file.target = parse_path_line(need("target path line"), file.n);
  if (next < lines.size()) {
    fail_at(lines[next].number, lines[next].tokens.front().column,
            "unexpected content after the target path");
  }
  return file;
}

std::string serialize_instance(const InstanceFile& file) {
  std::ostringstream os;
  os << (file.kind == InstanceKind::Convex ? "convex " : "polygon ") << file.n
     << '\n';
  for (const Point& p : file.points) os << p.x << ' ' << p.y << '\n';
  for (const auto* path : {&file.initial, &file.target}) {
    os << "path";
    for (Label v : *path) os << ' ' << v;
    os << '\n';
  }
  return os.str();
}

std::string report_json(const SequenceReport& report) {
  nlohmann::ordered_json j;
  j["distance"] = report.distance;
  j["case"] = report.case_tag;
  auto steps = nlohmann::ordered_json::array();
  for (const FlipStep& s : report.steps) {
    steps.push_back({{"remove", to_string(s.removed)},
                     {"add", to_string(s.added)},
                     {"type", static_cast<int>(s.flip_type)}});
  }
  j["steps"] = std::move(steps);
  return j.dump();
}

namespace {

Edge parse_edge(const std::string& s, Label n) {
  auto dash = s.find('-');
  auto bad = [&]() -> Edge {
    throw FlipError(ErrorKind::InvalidInstance, "bad edge '" + s + "'");
  };
  if (dash == std::string::npos) return bad();
  Label a = 0;
  Label b = 0;
  auto r1 = std::from_chars(s.data(), s.data() + dash, a);
  auto r2 = std::from_chars(s.data() + dash + 1, s.data() + s.size(), b);
  if (r1.ec != std::errc() || r1.ptr != s.data() + dash ||
      r2.ec != std::errc() || r2.ptr != s.data() + s.size()) {
    return bad();
  }
  if (a < 0 || b < 0 || a >= n || b >= n || a == b) return bad();
  return Edge::make(a, b, n);
}

}  // namespace

SequenceReport parse_report_json(std::string_view text, Label n) {
  SequenceReport report;
  try {
    auto j = nlohmann::json::parse(text);
    report.distance = j.at("distance").get<std::size_t>();
    report.case_tag = j.value("case", "");
    for (const auto& s : j.at("steps")) {
      int type = s.at("type").get<int>();
      if (type < 1 || type > 3) {
        throw FlipError(ErrorKind::InvalidInstance,
                        "flip type must be 1, 2 or 3");
      }
      report.steps.push_back({parse_edge(s.at("remove").get<std::string>(), n),
                              parse_edge(s.at("add").get<std::string>(), n),
                              static_cast<FlipType>(type)});
    }
  } catch (const nlohmann::json::exception& e) {
    throw FlipError(ErrorKind::InvalidInstance,
                    std::string("sequence JSON: ") + e.what());
  }
  return report;
}

namespace {

const PathSeq& labels_of(const PathSeq& p) { return p; }
const PathSeq& labels_of(const PolyPath& p) { return p.path; }

template <typename Path, typename Apply, typename Legal>
VerifyResult replay(const Path& start, const Path& goal,
                    const std::vector<FlipStep>& steps, const Apply& apply,
                    const Legal& legal) {
  Path cur = start;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const FlipStep& f = steps[i];
    try {
      Path next = apply(cur, f);
      FlipType actual = classify_flip(labels_of(cur), f);
      if (actual != f.flip_type) {
        return {false, i,
                "declared Type" + std::to_string(static_cast<int>(f.flip_type)) +
                    " but the flip is Type" +
                    std::to_string(static_cast<int>(actual))};
      }
      if (!legal(cur, f)) return {false, i, "flip not allowed in this model"};
      cur = std::move(next);
    } catch (const FlipError& e) {
      return {false, i, e.what()};
    }
  }
  if (!(cur == goal)) return {false, std::nullopt, "replay does not end at the target"};
  return {true, std::nullopt, "ok"};
}

}  // namespace

VerifyResult verify_sequence(const PathSeq& p_in, const PathSeq& p_tar,
                             const std::vector<FlipStep>& steps,
                             FlipModel model) {
  return replay(
      p_in, p_tar, steps,
      [](const PathSeq& p, const FlipStep& f) { return apply_flip(p, f); },
      [model](const PathSeq& p, const FlipStep& f) {
        return is_model_flip(p, f, model);
      });
}

VerifyResult verify_sequence(const PolyPath& p_in, const PolyPath& p_tar,
                             const std::vector<FlipStep>& steps,
                             const PolygonModel& poly) {
  return replay(
      p_in, p_tar, steps,
      [&poly](const PolyPath& p, const FlipStep& f) {
        return poly_apply_flip(p, f, poly);
      },
      [](const PolyPath&, const FlipStep&) { return true; });
}

PathSeq random_convex_path(Label n, std::mt19937_64& rng) {
  std::vector<Label> order;
  order.reserve(n);
  Label start = std::uniform_int_distribution<Label>(0, n - 1)(rng);
  order.push_back(start);
  Label lo = start;
  Label hi = start;
  for (Label i = 1; i < n; ++i) {
    if (rng() & 1u) {
      lo = (lo - 1 + n) % n;
      order.push_back(lo);
    } else {
      hi = (hi + 1) % n;
      order.push_back(hi);
    }
  }
  return unchecked_path(std::move(order));
}

}  // namespace flipdist
