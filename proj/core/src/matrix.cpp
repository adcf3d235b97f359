#include "optigraph/matrix.hpp"

#include <algorithm>

#include "optigraph/errors.hpp"

namespace optigraph {

Eigen::Index WeightMatrix::index_of(StateId s) const {
  auto it = std::lower_bound(states.begin(), states.end(), s);
  if (it == states.end() || *it != s) throw UnknownStateError("state is not part of this matrix");
  return static_cast<Eigen::Index>(it - states.begin());
}

WeightMatrix weight_matrix(const OpticalGraph& g) {
  WeightMatrix m;
  m.states = g.states();
  const auto n = static_cast<Eigen::Index>(m.states.size());
  m.w = Eigen::MatrixXcd::Zero(n, n);
  for (EdgeId e : g.edges()) {
    const auto& rec = g.edge(e);
    m.w(m.index_of(rec.from), m.index_of(rec.to)) += rec.weight;
  }
  return m;
}

}  // namespace optigraph
