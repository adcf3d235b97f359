#include "optigraph/quantum.hpp"

#include <algorithm>
#include <cmath>

#include "optigraph/errors.hpp"
#include "optigraph/response.hpp"

namespace optigraph {

namespace {

constexpr double kUnitaryTol = 1e-10;

bool unitary_within(const Eigen::MatrixXcd& m, double tol) {
  if (m.rows() != m.cols()) return false;
  const Eigen::MatrixXcd gram = m.adjoint() * m;
  const auto n = m.cols();
  return (gram - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace

ModeTransform mode_transform(const OpticalGraph& g, const std::vector<StateId>& inputs,
                             const std::vector<StateId>& outputs) {
  if (inputs.empty() || outputs.empty())
    throw PreconditionError("mode_transform: inputs and outputs must be nonempty");
  for (StateId in : inputs)
    if (std::find(outputs.begin(), outputs.end(), in) != outputs.end())
      throw PreconditionError("mode_transform: inputs and outputs must be disjoint");

  ModeTransform m;
  m.matrix.resize(static_cast<Eigen::Index>(outputs.size()), static_cast<Eigen::Index>(inputs.size()));
  for (std::size_t col = 0; col < inputs.size(); ++col)
    for (std::size_t row = 0; row < outputs.size(); ++row)
      m.matrix(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) =
          response_factor(g, inputs[col], outputs[row]).value;
  for (StateId in : inputs) m.input_labels.push_back(g.label(in));
  for (StateId out : outputs) m.output_labels.push_back(g.label(out));
  m.unitary = unitary_within(m.matrix, kUnitaryTol);
  return m;
}

ModeTransform mode_transform(const OpticalGraph& g) {
  return mode_transform(g, g.inputs(), g.outputs());
}

bool check_unitary(const ModeTransform& m, double tol) {
  if (m.matrix.rows() != m.matrix.cols())
    throw PreconditionError("check_unitary: transform must be square");
  return unitary_within(m.matrix, tol);
}

FockPolynomial FockPolynomial::constant(std::vector<std::string> modes, Amplitude value) {
  FockPolynomial p(std::move(modes));
  p.add_term(Exponents(p.modes_.size(), 0), value);
  return p;
}

FockPolynomial FockPolynomial::creation(std::vector<std::string> modes, std::size_t mode_index) {
  FockPolynomial p(std::move(modes));
  if (mode_index >= p.modes_.size())
    throw PreconditionError("creation: mode index out of range");
  Exponents e(p.modes_.size(), 0);
  e[mode_index] = 1;
  p.add_term(e, {1.0, 0.0});
  return p;
}

Amplitude FockPolynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Amplitude{0.0, 0.0} : it->second;
}

int FockPolynomial::total_degree() const {
  int degree = 0;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (auto n : e) d += n;
    degree = std::max(degree, d);
  }
  return degree;
}

void FockPolynomial::add_term(const Exponents& e, Amplitude c) {
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) it->second += c;
  if (it->second == Amplitude{0.0, 0.0}) terms_.erase(it);
}

FockPolynomial& FockPolynomial::operator+=(const FockPolynomial& other) {
  if (modes_ != other.modes_) throw PreconditionError("polynomial mode lists differ");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

FockPolynomial& FockPolynomial::operator*=(const FockPolynomial& other) {
  if (modes_ != other.modes_) throw PreconditionError("polynomial mode lists differ");
  FockPolynomial product(modes_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      Exponents e(modes_.size());
      int degree = 0;
      for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
        degree += e[i];
      }
      if (degree > kMaxPhotonDegree)
        throw Error("operator polynomial exceeds total degree " +
                    std::to_string(kMaxPhotonDegree));
      product.add_term(e, ca * cb);
    }
  }
  terms_ = std::move(product.terms_);
  return *this;
}

FockPolynomial& FockPolynomial::operator*=(Amplitude scale) {
  if (scale == Amplitude{0.0, 0.0}) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= scale;
    if (it->second == Amplitude{0.0, 0.0})
      it = terms_.erase(it);  // underflow; keep the no-zero-terms invariant
    else
      ++it;
  }
  return *this;
}

FockPolynomial apply_transform(const FockPolynomial& state, const ModeTransform& m) {
  if (state.modes() != m.input_labels)
    throw PreconditionError("state modes do not match the transform's input labels");

  const auto n_out = static_cast<std::size_t>(m.matrix.rows());
  std::vector<FockPolynomial> substitution;  // one linear form per input mode
  for (std::size_t in = 0; in < m.input_labels.size(); ++in) {
    FockPolynomial line(m.output_labels);
    for (std::size_t out = 0; out < n_out; ++out)
      line += m.matrix(static_cast<Eigen::Index>(out), static_cast<Eigen::Index>(in)) *
              FockPolynomial::creation(m.output_labels, out);
    substitution.push_back(std::move(line));
  }

  FockPolynomial result(m.output_labels);
  for (const auto& [e, c] : state.terms()) {
    FockPolynomial term = FockPolynomial::constant(m.output_labels, c);
    for (std::size_t in = 0; in < e.size(); ++in)
      for (int rep = 0; rep < e[in]; ++rep) term *= substitution[in];
    result += term;
  }
  return result;
}

FockAmplitudes FockAmplitudes::normalized() const {
  FockAmplitudes result = *this;
  if (norm > 0.0) {
    for (auto& [e, amp] : result.amplitudes) amp /= norm;
    result.norm = 1.0;
  }
  return result;
}

FockAmplitudes fock_amplitudes(const FockPolynomial& state) {
  FockAmplitudes result;
  result.modes = state.modes();
  double norm2 = 0.0;
  for (const auto& [e, c] : state.terms()) {
    double factorials = 1.0;
    for (auto n : e)
      for (int i = 2; i <= n; ++i) factorials *= i;
    const Amplitude amp = c * std::sqrt(factorials);
    result.amplitudes.emplace(e, amp);
    norm2 += std::norm(amp);
  }
  result.norm = std::sqrt(norm2);
  return result;
}

}  // namespace optigraph
