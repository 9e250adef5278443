#include "phasekit/kernels.hpp"

namespace phasekit::kernels {

namespace {

void check_same_shape(const OperatorMatrix& A, const OperatorMatrix& B, const char* op) {
  if (A.dim() != B.dim())
    throw DimensionError(std::string(op) + ": dims " + std::to_string(A.dim()) + " vs " + std::to_string(B.dim()));
  if (A.basis_tag() != B.basis_tag())
    throw DimensionError(std::string(op) + ": basis tags differ (" + A.basis_tag().describe() + " vs " +
                         B.basis_tag().describe() + ")");
}

inline complexd row_col_dot(const OperatorMatrix& A, const OperatorMatrix& B, int i, int j) {
  const int d = A.dim();
  complexd s(0.0, 0.0);
  for (int k = 0; k < d; ++k) s += A(i, k) * B(k, j);
  return s;
}

}  // namespace

OperatorMatrix multiply_serial(const OperatorMatrix& A, const OperatorMatrix& B) {
  check_same_shape(A, B, "multiply");
  OperatorMatrix C(A.dim(), A.basis_tag(), /*hermitian=*/false);
  const int d = A.dim();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) C(i, j) = row_col_dot(A, B, i, j);
  return C;
}

OperatorMatrix multiply(const OperatorMatrix& A, const OperatorMatrix& B) {
  check_same_shape(A, B, "multiply");
  OperatorMatrix C(A.dim(), A.basis_tag(), /*hermitian=*/false);
  const int d = A.dim();
#pragma omp parallel for schedule(static)
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) C(i, j) = row_col_dot(A, B, i, j);
  return C;
}

namespace {

inline complexd row_form(const OperatorMatrix& A, const StateVector& x, int i) {
  const int d = A.dim();
  complexd s(0.0, 0.0);
  for (int j = 0; j < d; ++j) s += A(i, j) * x.amps[static_cast<size_t>(j)];
  return std::conj(x.amps[static_cast<size_t>(i)]) * s;
}

}  // namespace

complexd quadratic_form_serial(const OperatorMatrix& A, const StateVector& x) {
  if (A.dim() != x.dim) throw DimensionError("quadratic_form: matrix dim " + std::to_string(A.dim()) +
                                             " vs vector dim " + std::to_string(x.dim));
  complexd total(0.0, 0.0);
  for (int i = 0; i < A.dim(); ++i) total += row_form(A, x, i);
  return total;
}

complexd quadratic_form(const OperatorMatrix& A, const StateVector& x) {
  if (A.dim() != x.dim) throw DimensionError("quadratic_form: matrix dim " + std::to_string(A.dim()) +
                                             " vs vector dim " + std::to_string(x.dim));
  const int d = A.dim();
  std::vector<complexd> partial(static_cast<size_t>(d));
#pragma omp parallel for schedule(static)
  for (int i = 0; i < d; ++i) partial[static_cast<size_t>(i)] = row_form(A, x, i);
  complexd total(0.0, 0.0);
  for (int i = 0; i < d; ++i) total += partial[static_cast<size_t>(i)];
  return total;
}

}  // namespace phasekit::kernels
