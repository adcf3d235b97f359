#include "optigraph/oracle.hpp"

#include <Eigen/Dense>
#include <limits>

#include "optigraph/errors.hpp"
#include "optigraph/matrix.hpp"

namespace optigraph {

Amplitude response_factor_dense(const OpticalGraph& g, StateId s, StateId t) {
  WeightMatrix m = weight_matrix(g);
  const Eigen::Index is = m.index_of(s);
  const Eigen::Index it = m.index_of(t);
  const Eigen::Index n = m.w.rows();

  Eigen::MatrixXcd system = Eigen::MatrixXcd::Identity(n, n) - m.w;
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(system);
  // rcond() reports 1 for an exactly singular factorization, so check
  // the pivots as well
  if (lu.matrixLU().diagonal().cwiseAbs().minCoeff() == 0.0 || !(lu.rcond() > 1e-12))
    throw SingularSystemError("I - W is singular or has condition number above 1e12");

  // Column t of the inverse; its s component is [(I - W)^-1]_{s,t}.
  Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(n);
  rhs(it) = 1.0;
  Eigen::VectorXcd column = lu.solve(rhs);
  Amplitude entry = column(is);
  if (s == t) entry -= 1.0;  // drop the empty walk
  return entry;
}

TailBound walk_sum_truncated(const OpticalGraph& g, StateId s, StateId t, int max_len) {
  if (max_len < 1) throw PreconditionError("max_len must be >= 1");
  WeightMatrix m = weight_matrix(g);
  const Eigen::Index is = m.index_of(s);
  const Eigen::Index it = m.index_of(t);
  const Eigen::Index n = m.w.rows();

  // (W^len)_{s,t} = e_s^T W^len e_t, accumulated as y <- W y.
  Eigen::VectorXcd y = Eigen::VectorXcd::Zero(n);
  y(it) = 1.0;
  Amplitude total{0.0, 0.0};
  for (int len = 1; len <= max_len; ++len) {
    y = m.w * y;
    total += y(is);
  }

  const double norm = m.w.cwiseAbs().rowwise().sum().maxCoeff();
  TailBound result;
  result.truncated_sum = total;
  result.max_len = max_len;
  if (norm < 1.0) {
    result.bound = std::pow(norm, max_len + 1) / (1.0 - norm);
  } else {
    result.bound = std::numeric_limits<double>::infinity();
    result.divergent = true;
  }
  return result;
}

}  // namespace optigraph
