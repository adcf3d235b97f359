// Exhaustive walk enumeration for small graphs; exact (bit-level) walk
// weight multisets, used to check that rewrites preserve walks.
#pragma once

#include <algorithm>
#include <vector>

#include "optigraph/graph.hpp"

namespace testgen {

/// Weights of every walk s -> t with 1..max_len edges, sorted so two
/// multisets can be compared directly. Weights are exact products of
/// the stored edge weights in walk order.
inline std::vector<optigraph::Amplitude> walk_weights(const optigraph::OpticalGraph& g,
                                                      optigraph::StateId s, optigraph::StateId t,
                                                      int max_len) {
  std::vector<optigraph::Amplitude> found;
  struct Frame {
    optigraph::StateId at;
    optigraph::Amplitude weight;
    int len;
  };
  std::vector<Frame> stack{{s, {1.0, 0.0}, 0}};
  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    if (f.len == max_len) continue;
    for (optigraph::EdgeId e : g.out_edges(f.at)) {
      const auto& rec = g.edge(e);
      const optigraph::Amplitude w = f.weight * rec.weight;
      if (rec.to == t) found.push_back(w);
      stack.push_back({rec.to, w, f.len + 1});
    }
  }
  std::sort(found.begin(), found.end(), [](optigraph::Amplitude a, optigraph::Amplitude b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return found;
}

}  // namespace testgen
