#pragma once

#include <Eigen/Dense>
#include <vector>

#include "optigraph/graph.hpp"

namespace optigraph {

/// Dense adjacency view of a graph. Row/column i corresponds to
/// states[i] (live states in ascending id order); entry (i, j) is the
/// sum of the weights of all edges states[i] -> states[j].
struct WeightMatrix {
  Eigen::MatrixXcd w;
  std::vector<StateId> states;

  Eigen::Index index_of(StateId s) const;
};

WeightMatrix weight_matrix(const OpticalGraph& g);

}  // namespace optigraph
