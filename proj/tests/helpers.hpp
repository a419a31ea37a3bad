#pragma once

#include <initializer_list>
#include <vector>

#include "flipdist/path_core.hpp"

namespace flipdist::test {

inline PathSeq P(std::initializer_list<Label> labels) {
  std::vector<Label> v(labels);
  return validate_path(v, ConvexInstance(static_cast<Label>(v.size())));
}

inline Edge E(Label a, Label b, Label n) { return Edge::make(a, b, n); }

inline std::vector<Label> order_of(const PathSeq& p) {
  return {p.order().begin(), p.order().end()};
}

}  // namespace flipdist::test
