#include "phasekit/phase.hpp"

#include <cmath>

namespace phasekit::phase {

namespace {

constexpr double kPi = 3.14159265358979323846;
const double kSqrt2OverPi = std::sqrt(2.0 / kPi);
const double kInvSqrtPi = 1.0 / std::sqrt(kPi);

// int_0^pi phi cos(k phi) dphi
double phi_cosine_moment(int k) {
  if (k == 0) return kPi * kPi / 2.0;
  const double num = (k % 2 == 0) ? 0.0 : -2.0;  // (-1)^k - 1
  return num / (static_cast<double>(k) * k);
}

void require_positive_dim(int dim, const char* where) {
  if (dim <= 0) throw DimensionError(std::string(where) + ": dim must be positive, got " + std::to_string(dim));
}

void require_nonnegative(int n, int m) {
  if (n < 0 || m < 0)
    throw RangeError("matrix element index (" + std::to_string(n) + "," + std::to_string(m) + ") is negative");
}

}  // namespace

const char* sector_name(PhaseSector s) { return s == PhaseSector::Plus ? "plus" : "minus"; }

double basis_amplitude(PhaseSector sector, int n, double phi) {
  if (n < 0) throw RangeError("basis_amplitude: n must be >= 0, got " + std::to_string(n));
  if (sector == PhaseSector::Plus) return n == 0 ? kInvSqrtPi : kSqrt2OverPi * std::cos(n * phi);
  return n == 0 ? 0.0 : kSqrt2OverPi * std::sin(n * phi);
}

StateVector phase_state(PhaseSector sector, double phi, int dim) {
  if (!(phi >= 0.0 && phi <= kPi))
    throw RangeError("phase_state: phi must lie in [0, pi], got " + std::to_string(phi));
  require_positive_dim(dim, "phase_state");
  StateVector v(dim);
  for (int n = 0; n < dim; ++n) v.amps[static_cast<size_t>(n)] = basis_amplitude(sector, n, phi);
  return v;
}

double abs_phase_entry(PhaseSector sector, int n, int m) {
  require_nonnegative(n, m);
  if (sector == PhaseSector::Minus) {
    if (n == 0 || m == 0) return 0.0;
    if (n == m) return kPi / 2.0;
    return (phi_cosine_moment(std::abs(n - m)) - phi_cosine_moment(n + m)) / kPi;
  }
  if (n == 0 && m == 0) return kPi / 2.0;
  if (n == 0 || m == 0) {
    const int k = std::max(n, m);
    return std::sqrt(2.0) / kPi * phi_cosine_moment(k);
  }
  if (n == m) return kPi / 2.0;
  return (phi_cosine_moment(n + m) + phi_cosine_moment(std::abs(n - m))) / kPi;
}

OperatorMatrix build_abs_phase(PhaseSector sector, int dim) {
  require_positive_dim(dim, "build_abs_phase");
  OperatorMatrix A(dim, BasisTag::number());
  kernels::fill(A, [sector](int i, int j) { return complexd(abs_phase_entry(sector, i, j), 0.0); });
  return A;
}

double PhaseKernel::eval(double phi) const {
  double s = 0.0;
  for (int k = cutoff(); k >= 1; --k) s += cosine_coeffs[static_cast<size_t>(k)] * std::cos(k * phi);
  return s + coeff(0);
}

PhaseKernel PhaseKernel::abs_phi_series(int K) {
  if (K < 0) throw RangeError("abs_phi_series: cutoff must be >= 0");
  PhaseKernel kern;
  kern.cosine_coeffs.assign(static_cast<size_t>(K) + 1, 0.0);
  kern.cosine_coeffs[0] = kPi / 2.0;
  for (int k = 1; k <= K; k += 2) kern.cosine_coeffs[static_cast<size_t>(k)] = -4.0 / (kPi * k * k);
  return kern;
}

double triple_product_integral(PhaseSector sector, int k, int n, int m) {
  require_nonnegative(n, m);
  if (k < 0) throw RangeError("triple_product_integral: k must be >= 0");
  if (sector == PhaseSector::Minus) {
    if (n == 0 || m == 0) return 0.0;
    if (k == 0) return n == m ? 1.0 : 0.0;
    double v = 0.0;
    if (k == std::abs(n - m)) v += 0.5;
    if (k == n + m) v -= 0.5;
    return v;
  }
  if (k == 0) return n == m ? 1.0 : 0.0;
  if (n == 0 && m == 0) return 0.0;
  if (n == 0 || m == 0) return k == std::max(n, m) ? 1.0 / std::sqrt(2.0) : 0.0;
  double v = 0.0;
  if (k == std::abs(n - m)) v += 0.5;
  if (k == n + m) v += 0.5;
  return v;
}

double function_of_phase_entry(const PhaseKernel& kernel, PhaseSector sector, int n, int m) {
  require_nonnegative(n, m);
  const double a0 = kernel.coeff(0);
  if (sector == PhaseSector::Minus) {
    if (n == 0 || m == 0) return 0.0;
    if (n == m) return a0 - 0.5 * kernel.coeff(2 * n);
    return 0.5 * (kernel.coeff(std::abs(n - m)) - kernel.coeff(n + m));
  }
  if (n == 0 && m == 0) return a0;
  if (n == 0 || m == 0) return kernel.coeff(std::max(n, m)) / std::sqrt(2.0);
  if (n == m) return a0 + 0.5 * kernel.coeff(2 * n);
  return 0.5 * (kernel.coeff(std::abs(n - m)) + kernel.coeff(n + m));
}

OperatorMatrix build_function_of_phase(const PhaseKernel& kernel, PhaseSector sector, int dim) {
  require_positive_dim(dim, "build_function_of_phase");
  OperatorMatrix A(dim, BasisTag::number());
  kernels::fill(A, [&kernel, sector](int i, int j) {
    return complexd(function_of_phase_entry(kernel, sector, i, j), 0.0);
  });
  return A;
}

OperatorMatrix build_function_of_phase_term_sum(const PhaseKernel& kernel, PhaseSector sector, int dim) {
  require_positive_dim(dim, "build_function_of_phase_term_sum");
  OperatorMatrix A(dim, BasisTag::number());
  const int K = kernel.cutoff();
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      double s = 0.0;
      for (int k = 0; k <= K; ++k) s += kernel.coeff(k) * triple_product_integral(sector, k, i, j);
      A(i, j) = complexd(s, 0.0);
    }
  }
  return A;
}

OperatorMatrix build_sg_ladder(int dim) {
  require_positive_dim(dim, "build_sg_ladder");
  OperatorMatrix E(dim, BasisTag::number(), /*hermitian=*/false);
  for (int n = 0; n + 1 < dim; ++n) E(n, n + 1) = complexd(1.0, 0.0);
  return E;
}

OperatorMatrix build_phase_cosine_c(int dim) {
  require_positive_dim(dim, "build_phase_cosine_c");
  OperatorMatrix C(dim, BasisTag::number());
  for (int n = 0; n + 1 < dim; ++n) {
    C(n, n + 1) = complexd(0.5, 0.0);
    C(n + 1, n) = complexd(0.5, 0.0);
  }
  return C;
}

OperatorMatrix build_phase_sine_s(int dim) {
  require_positive_dim(dim, "build_phase_sine_s");
  OperatorMatrix S(dim, BasisTag::number());
  for (int n = 0; n + 1 < dim; ++n) {
    S(n, n + 1) = complexd(0.0, -0.5);  // E/(2i)
    S(n + 1, n) = complexd(0.0, 0.5);
  }
  return S;
}

OperatorMatrix build_cos_phase(PhaseSector sector, int dim) {
  require_positive_dim(dim, "build_cos_phase");
  OperatorMatrix A = build_phase_cosine_c(dim);
  if (dim >= 2) {
    const double shift = sector == PhaseSector::Plus ? 0.5 * (std::sqrt(2.0) - 1.0) : -0.5;
    A(0, 1) += shift;
    A(1, 0) += shift;
  }
  return A;
}

OperatorMatrix build_number_operator(int dim) {
  require_positive_dim(dim, "build_number_operator");
  OperatorMatrix N(dim, BasisTag::number());
  for (int n = 0; n < dim; ++n) N(n, n) = complexd(n, 0.0);
  return N;
}

OperatorMatrix cs_commutator_check(int dim, double tol) {
  if (dim < 3) throw DimensionError("cs_commutator_check: dim must be >= 3, got " + std::to_string(dim));
  const OperatorMatrix comm = commutator(build_phase_cosine_c(dim), build_phase_sine_s(dim));
  double worst = 0.0;
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      complexd expected(0.0, 0.0);
      if (i == 0 && j == 0) expected = complexd(0.0, 0.5);
      if (i == dim - 1 && j == dim - 1) expected = complexd(0.0, -0.5);
      worst = std::max(worst, std::abs(comm(i, j) - expected));
    }
  }
  if (worst > tol)
    throw ToleranceError("[C,S] deviates from (i/2)(|0><0| - |D-1><D-1|) by " + std::to_string(worst));
  return comm;
}

complexd sector_overlap(double phi, double psi, int dim) {
  return inner_product(phase_state(PhaseSector::Plus, phi, dim), phase_state(PhaseSector::Minus, psi, dim));
}

double number_phase_diagonal_check(const OperatorMatrix& A) {
  const OperatorMatrix comm = commutator(build_number_operator(A.dim()), A);
  double worst = 0.0;
  for (int n = 0; n < A.dim(); ++n) worst = std::max(worst, std::abs(comm(n, n)));
  return worst;
}

}  // namespace phasekit::phase
