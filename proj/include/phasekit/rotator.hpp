#pragma once

#include "phasekit/quadrature.hpp"

namespace phasekit::rotator {

// Extension parameter of the twisted boundary condition
// u(pi) = e^{2 pi i alpha} u(-pi); each alpha in [0, 1) gives a self-adjoint
// angular momentum -i d/dtheta with eigenvalues m + alpha.
struct AlphaExtension {
  double alpha = 0.0;

  explicit AlphaExtension(double a = 0.0) : alpha(a) {
    if (!(a >= 0.0 && a < 1.0)) throw RangeError("AlphaExtension: alpha must lie in [0,1), got " + std::to_string(a));
  }
};

// Symmetric truncation m = -m_max .. m_max, stored at row/col m + m_max.
struct RotatorTruncation {
  int m_max = 0;

  explicit RotatorTruncation(int mm) : m_max(mm) {
    if (mm < 0) throw RangeError("RotatorTruncation: m_max must be >= 0");
  }
  int dim() const { return 2 * m_max + 1; }
  int index(int m) const { return m + m_max; }
};

// C^1 taper agreeing with theta up to pi - epsilon and bending to
// f(pi) = f(-pi) = -pi over the last epsilon:
//   f(theta) = theta cos^2(s pi/2) - pi sin^2(s pi/2),  s = (theta-pi+eps)/eps.
// The blend keeps slope 1 at the junction, so f is once differentiable on
// [-pi, pi]; the second derivative jumps there and quadrature panels are
// split at the junction.
struct TaperSpec {
  double epsilon;

  explicit TaperSpec(double eps) : epsilon(eps) {
    if (!(eps > 0.0 && eps < 3.14159265358979323846))
      throw RangeError("TaperSpec: epsilon must lie in (0, pi), got " + std::to_string(eps));
  }
  double value(double theta) const;
  std::string describe() const;
};

// m + alpha
double jz_eigenvalue(int m, const AlphaExtension& ext);

// (1/2pi) int_-pi^pi theta e^{ik theta} dtheta = -i(-1)^k / k (0 at k = 0)
complexd theta_entry(int k);

// Angle operator in the momentum basis; alpha-independent because the
// e^{i alpha theta} phases cancel in every element.
OperatorMatrix theta_matrix(const RotatorTruncation& trunc, const AlphaExtension& ext);

// Reference build by direct quadrature of the pointwise eigenfunction
// products conj(u_m) theta u_m'; used to exhibit the alpha cancellation
// numerically. Serial.
OperatorMatrix theta_matrix_quadrature(const RotatorTruncation& trunc, const AlphaExtension& ext,
                                       const quad::QuadratureConfig& cfg);

// Regularized angle operator (1/2pi) int f_eps(theta) e^{ik theta} dtheta by
// adaptive quadrature per offset k; converges entry-wise to theta_matrix at
// first order in epsilon.
OperatorMatrix theta_eps_matrix(const RotatorTruncation& trunc, const TaperSpec& taper,
                                const quad::QuadratureConfig& cfg = quad::QuadratureConfig::adaptive());

// max over |m|,|m'| <= m_max of |(m - m') <m|Theta|m'> + i(delta_mm' - e^{i(m'-m)pi})|
double commutator_identity_check(const RotatorTruncation& trunc);

// (1/2pi) int |theta| e^{ik theta} dtheta: pi/2 at k = 0, ((-1)^k - 1)/(pi k^2) else
double abs_theta_entry(int k);

OperatorMatrix abs_theta_matrix(const RotatorTruncation& trunc);

struct ParityDecomposition {
  OperatorMatrix even_block;  // {|0>, (|m>+|-m>)/sqrt2}, size m_max+1
  OperatorMatrix odd_block;   // {(|m>-|-m>)/sqrt2}, size m_max
  double cross_norm = 0.0;
};

// Transforms A to the parity basis and returns the diagonal blocks; throws
// ToleranceError if the even/odd cross block exceeds tol and RangeError if
// A is not on a symmetric index range (odd dimension).
ParityDecomposition parity_decompose(const OperatorMatrix& A, double tol = 1e-12);

}  // namespace phasekit::rotator
