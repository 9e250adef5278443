#pragma once

#include "phasekit/kernels.hpp"
#include "phasekit/types.hpp"

namespace phasekit {

// sum_n conj(u[n]) v[n]
complexd inner_product(const StateVector& u, const StateVector& v);

// AB - BA; inputs must share dimension and basis tag.
OperatorMatrix commutator(const OperatorMatrix& A, const OperatorMatrix& B);

// Dense Hermitian eigendecomposition, eigenvalues ascending. Input must be
// declared Hermitian and pass its Hermiticity tolerance.
Spectrum eigen_decompose(const OperatorMatrix& A);

// max_k ||A v_k - lambda_k v_k||_inf, for checking decomposition quality.
double eigen_residual(const OperatorMatrix& A, const Spectrum& s);

// max-norm of A - V Lambda V^dag
double reconstruction_residual(const OperatorMatrix& A, const Spectrum& s);

}  // namespace phasekit
