#include "phasekit/core.hpp"

#include <Eigen/Dense>
#include <sstream>

namespace phasekit {

void ToleranceConfig::apply_overrides(const std::string& spec) {
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw RangeError("tolerance override '" + item + "' is not of the form key=value");
    const std::string key = item.substr(0, eq);
    double value = 0.0;
    try {
      value = std::stod(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw RangeError("tolerance override '" + item + "' has a non-numeric value");
    }
    if (key == "closed_form_vs_quadrature")
      closed_form_vs_quadrature = value;
    else if (key == "hermiticity")
      hermiticity = value;
    else if (key == "spectrum_slack")
      spectrum_slack = value;
    else if (key == "boundary_residual")
      boundary_residual = value;
    else
      throw RangeError("unknown tolerance key '" + key + "'");
  }
  validate();
}

complexd inner_product(const StateVector& u, const StateVector& v) {
  if (u.dim != v.dim)
    throw DimensionError("inner_product: dims " + std::to_string(u.dim) + " vs " + std::to_string(v.dim));
  complexd s(0.0, 0.0);
  for (int n = 0; n < u.dim; ++n)
    s += std::conj(u.amps[static_cast<size_t>(n)]) * v.amps[static_cast<size_t>(n)];
  return s;
}

OperatorMatrix commutator(const OperatorMatrix& A, const OperatorMatrix& B) {
  const OperatorMatrix AB = kernels::multiply(A, B);
  const OperatorMatrix BA = kernels::multiply(B, A);
  OperatorMatrix C(A.dim(), A.basis_tag(), /*hermitian=*/false);
  for (size_t k = 0; k < C.data().size(); ++k) C.data()[k] = AB.data()[k] - BA.data()[k];
  return C;
}

Spectrum eigen_decompose(const OperatorMatrix& A) {
  A.assert_hermitian();
  const int d = A.dim();
  Eigen::MatrixXcd M(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) M(i, j) = A(i, j);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(M);
  if (solver.info() != Eigen::Success)
    throw HermiticityError("eigendecomposition did not converge at dim " + std::to_string(d));

  Spectrum s{std::vector<double>(static_cast<size_t>(d)),
             OperatorMatrix(d, A.basis_tag(), /*hermitian=*/false)};
  for (int k = 0; k < d; ++k) s.eigenvalues[static_cast<size_t>(k)] = solver.eigenvalues()(k);
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) s.eigenvectors(i, k) = solver.eigenvectors()(i, k);
  return s;
}

double eigen_residual(const OperatorMatrix& A, const Spectrum& s) {
  const int d = A.dim();
  double worst = 0.0;
  for (int k = 0; k < d; ++k) {
    for (int i = 0; i < d; ++i) {
      complexd av(0.0, 0.0);
      for (int j = 0; j < d; ++j) av += A(i, j) * s.eigenvectors(j, k);
      worst = std::max(worst, std::abs(av - s.eigenvalues[static_cast<size_t>(k)] * s.eigenvectors(i, k)));
    }
  }
  return worst;
}

double reconstruction_residual(const OperatorMatrix& A, const Spectrum& s) {
  const int d = A.dim();
  double worst = 0.0;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      complexd r(0.0, 0.0);
      for (int k = 0; k < d; ++k)
        r += s.eigenvectors(i, k) * s.eigenvalues[static_cast<size_t>(k)] * std::conj(s.eigenvectors(j, k));
      worst = std::max(worst, std::abs(A(i, j) - r));
    }
  }
  return worst;
}

}  // namespace phasekit
