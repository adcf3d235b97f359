#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "optigraph/graph.hpp"

namespace optigraph {

/// Exponential blowup guard; the interferometer examples this targets
/// stay at degree <= 2.
inline constexpr int kMaxPhotonDegree = 16;

/// Matrix of response factors lifting input-port creation operators to
/// output-port creation operators: entry (m, n) = Gamma from input n
/// to output m.
struct ModeTransform {
  Eigen::MatrixXcd matrix;  // outputs x inputs
  std::vector<std::string> input_labels;
  std::vector<std::string> output_labels;
  /// Set at construction for square transforms: M^dagger M == I
  /// within 1e-10.
  bool unitary = false;
};

ModeTransform mode_transform(const OpticalGraph& g, const std::vector<StateId>& inputs,
                             const std::vector<StateId>& outputs);

/// Uses the graph's designated ports.
ModeTransform mode_transform(const OpticalGraph& g);

/// True iff the transform is square and max |M^dagger M - I| <= tol.
/// Advisory: apply_transform accepts non-unitary transforms, which is
/// how discarded-port leakage shows up as a norm below one.
bool check_unitary(const ModeTransform& m, double tol = 1e-10);

/// Polynomial in commuting creation operators applied to the vacuum.
/// Terms map canonical exponent vectors (one slot per mode) to complex
/// coefficients; exact-zero coefficients are pruned.
class FockPolynomial {
 public:
  using Exponents = std::vector<std::uint16_t>;

  explicit FockPolynomial(std::vector<std::string> modes) : modes_(std::move(modes)) {}

  static FockPolynomial constant(std::vector<std::string> modes, Amplitude value);
  /// The creation operator of one mode.
  static FockPolynomial creation(std::vector<std::string> modes, std::size_t mode_index);

  const std::vector<std::string>& modes() const { return modes_; }
  const std::map<Exponents, Amplitude>& terms() const { return terms_; }

  Amplitude coefficient(const Exponents& e) const;
  int total_degree() const;
  bool is_zero() const { return terms_.empty(); }

  FockPolynomial& operator+=(const FockPolynomial& other);
  FockPolynomial& operator*=(const FockPolynomial& other);
  FockPolynomial& operator*=(Amplitude scale);

  friend FockPolynomial operator+(FockPolynomial a, const FockPolynomial& b) { return a += b; }
  friend FockPolynomial operator*(FockPolynomial a, const FockPolynomial& b) { return a *= b; }
  friend FockPolynomial operator*(Amplitude s, FockPolynomial p) { return p *= s; }

 private:
  void add_term(const Exponents& e, Amplitude c);

  std::vector<std::string> modes_;
  std::map<Exponents, Amplitude> terms_;
};

/// Substitutes every input creation operator by its output-operator
/// combination and expands. The polynomial's modes must equal the
/// transform's input labels.
FockPolynomial apply_transform(const FockPolynomial& state, const ModeTransform& m);

/// Fock-basis view of an operator polynomial applied to vacuum:
/// <n|psi> = coefficient(n) * sqrt(prod n_i!), since
/// (a^dagger)^n |0> = sqrt(n!) |n>. Amplitudes are reported as
/// computed; `norm` carries their Euclidean norm so callers can
/// renormalize or detect leakage.
struct FockAmplitudes {
  std::vector<std::string> modes;
  std::map<FockPolynomial::Exponents, Amplitude> amplitudes;
  double norm = 0.0;

  /// Copy rescaled to unit norm; the zero state stays zero.
  FockAmplitudes normalized() const;
};

FockAmplitudes fock_amplitudes(const FockPolynomial& state);

/// Parses a creation-operator polynomial such as "a*b", "a^2" or
/// "0.5*a + i*b" over the given mode labels. A bare `i` is the
/// imaginary unit unless a mode carries that exact label; mode names
/// match exactly first, then case-insensitively when unambiguous.
FockPolynomial parse_fock_expression(const std::string& text,
                                     const std::vector<std::string>& modes);

}  // namespace optigraph
