#pragma once

#include <complex>
#include <string>
#include <vector>

#include "phasekit/errors.hpp"

namespace phasekit {

using complexd = std::complex<double>;

enum class BasisKind { NumberBasis, RotatorBasis };

// Discrete basis a matrix lives in. RotatorBasis carries the extension
// parameter alpha of the twisted boundary condition u(pi) = e^{2 pi i alpha} u(-pi).
struct BasisTag {
  BasisKind kind = BasisKind::NumberBasis;
  double alpha = 0.0;

  static BasisTag number() { return {BasisKind::NumberBasis, 0.0}; }
  static BasisTag rotator(double alpha) { return {BasisKind::RotatorBasis, alpha}; }

  bool operator==(const BasisTag& o) const { return kind == o.kind && alpha == o.alpha; }
  bool operator!=(const BasisTag& o) const { return !(*this == o); }

  std::string describe() const {
    if (kind == BasisKind::NumberBasis) return "number";
    return "rotator(alpha=" + std::to_string(alpha) + ")";
  }
};

// Dense square complex matrix, row-major. Matrices declared Hermitian must
// satisfy max |A[i][j] - conj(A[j][i])| <= hermitian_tol; non-Hermitian
// operators (the one-sided shift E) are stored with hermitian = false.
class OperatorMatrix {
 public:
  OperatorMatrix(int dim, BasisTag tag, bool hermitian = true, double hermitian_tol = 1e-12)
      : dim_(dim), tag_(tag), hermitian_(hermitian), hermitian_tol_(hermitian_tol) {
    if (dim <= 0) throw DimensionError("OperatorMatrix: dim must be positive, got " + std::to_string(dim));
    data_.assign(static_cast<size_t>(dim) * dim, complexd(0.0, 0.0));
  }

  int dim() const { return dim_; }
  const BasisTag& basis_tag() const { return tag_; }
  bool declared_hermitian() const { return hermitian_; }
  double hermitian_tol() const { return hermitian_tol_; }

  complexd& operator()(int i, int j) { return data_[static_cast<size_t>(i) * dim_ + j]; }
  const complexd& operator()(int i, int j) const { return data_[static_cast<size_t>(i) * dim_ + j]; }

  complexd& at(int i, int j) {
    check_index(i, j);
    return (*this)(i, j);
  }
  const complexd& at(int i, int j) const {
    check_index(i, j);
    return (*this)(i, j);
  }

  std::vector<complexd>& data() { return data_; }
  const std::vector<complexd>& data() const { return data_; }

  double hermiticity_residual() const {
    double r = 0.0;
    for (int i = 0; i < dim_; ++i)
      for (int j = i; j < dim_; ++j)
        r = std::max(r, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return r;
  }

  void assert_hermitian() const {
    if (!hermitian_)
      throw HermiticityError("matrix is not declared Hermitian (basis " + tag_.describe() + ")");
    const double r = hermiticity_residual();
    if (r > hermitian_tol_)
      throw HermiticityError("Hermiticity residual " + std::to_string(r) + " exceeds tolerance " +
                             std::to_string(hermitian_tol_));
  }

  double max_abs() const {
    double r = 0.0;
    for (const auto& z : data_) r = std::max(r, std::abs(z));
    return r;
  }

  double max_abs_imag() const {
    double r = 0.0;
    for (const auto& z : data_) r = std::max(r, std::abs(z.imag()));
    return r;
  }

  OperatorMatrix adjoint() const {
    OperatorMatrix out(dim_, tag_, hermitian_, hermitian_tol_);
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) out(i, j) = std::conj((*this)(j, i));
    return out;
  }

  // Element-wise max |A - B|; dimension-checked.
  double max_abs_diff(const OperatorMatrix& other) const {
    if (other.dim_ != dim_)
      throw DimensionError("max_abs_diff: dims " + std::to_string(dim_) + " vs " + std::to_string(other.dim_));
    double r = 0.0;
    for (size_t k = 0; k < data_.size(); ++k) r = std::max(r, std::abs(data_[k] - other.data_[k]));
    return r;
  }

 private:
  void check_index(int i, int j) const {
    if (i < 0 || j < 0 || i >= dim_ || j >= dim_)
      throw RangeError("matrix index (" + std::to_string(i) + "," + std::to_string(j) + ") out of range for dim " +
                       std::to_string(dim_));
  }

  int dim_;
  BasisTag tag_;
  bool hermitian_;
  double hermitian_tol_;
  std::vector<complexd> data_;
};

// Complex amplitude vector in a discrete basis. Not necessarily normalized:
// truncated phase states are continuum-normalized.
struct StateVector {
  int dim = 0;
  std::vector<complexd> amps;

  StateVector() = default;
  explicit StateVector(int d) : dim(d), amps(static_cast<size_t>(d), complexd(0.0, 0.0)) {
    if (d <= 0) throw DimensionError("StateVector: dim must be positive, got " + std::to_string(d));
  }

  double norm_sq() const {
    double s = 0.0;
    for (const auto& a : amps) s += std::norm(a);
    return s;
  }
  double norm() const { return std::sqrt(norm_sq()); }
  bool is_normalized(double tol = 1e-12) const { return std::abs(1.0 - norm_sq()) <= tol; }
};

// Numeric policy shared across the library. All tolerances strictly positive.
struct ToleranceConfig {
  double closed_form_vs_quadrature = 1e-10;
  double hermiticity = 1e-12;
  double spectrum_slack = 1e-9;
  double boundary_residual = 1e-6;

  void validate() const {
    if (closed_form_vs_quadrature <= 0 || hermiticity <= 0 || spectrum_slack <= 0 || boundary_residual <= 0)
      throw RangeError("ToleranceConfig: all tolerances must be strictly positive");
  }

  // Applies "key=value" pairs separated by commas, e.g.
  // "hermiticity=1e-11,spectrum_slack=1e-8". Unknown keys are an error.
  void apply_overrides(const std::string& spec);
};

// Result of a Hermitian eigendecomposition: ascending eigenvalues and the
// matching orthonormal eigenvector columns.
struct Spectrum {
  std::vector<double> eigenvalues;
  OperatorMatrix eigenvectors;

  // max |V^dag V - I|
  double gram_residual() const {
    const int d = eigenvectors.dim();
    double r = 0.0;
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        complexd s(0.0, 0.0);
        for (int k = 0; k < d; ++k) s += std::conj(eigenvectors(k, i)) * eigenvectors(k, j);
        r = std::max(r, std::abs(s - (i == j ? complexd(1.0) : complexd(0.0))));
      }
    }
    return r;
  }
};

}  // namespace phasekit
