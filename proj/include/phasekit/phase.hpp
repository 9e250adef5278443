#pragma once

#include "phasekit/core.hpp"

namespace phasekit::phase {

// Plus selects the cosine-type subspace H_N^+ spanned by
//   e_phi^+(0) = 1/sqrt(pi), e_phi^+(n>0) = sqrt(2/pi) cos(n phi);
// Minus selects the sine-type subspace H_N^- spanned by
//   e_phi^-(n>=1) = sqrt(2/pi) sin(n phi), with the n = 0 row/column
// identically zero. Minus-sector matrices keep the full D x D shape so they
// index uniformly against number states; their spectrum then carries one
// spurious 0 eigenvalue, flagged in output metadata.
enum class PhaseSector { Plus, Minus };

const char* sector_name(PhaseSector s);

// e_phi^{+/-}(n)
double basis_amplitude(PhaseSector sector, int n, double phi);

// Truncation of the continuum-normalized eigenstate of real, even functions
// of the phase. Not a normalized vector.
StateVector phase_state(PhaseSector sector, double phi, int dim);

// <n| |Phi| |m> = int_0^pi phi e_phi(n) e_phi(m) dphi, in closed form via
// int_0^pi phi cos(k phi) dphi = ((-1)^k - 1)/k^2.
double abs_phase_entry(PhaseSector sector, int n, int m);

OperatorMatrix build_abs_phase(PhaseSector sector, int dim);

// Real, even function of the phase as a finite cosine series
// f(phi) = a_0 + sum_k a_k cos(k phi).
struct PhaseKernel {
  std::vector<double> cosine_coeffs;  // a_0 .. a_K

  int cutoff() const { return static_cast<int>(cosine_coeffs.size()) - 1; }
  double coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(cosine_coeffs.size())) ? cosine_coeffs[static_cast<size_t>(k)] : 0.0;
  }
  double eval(double phi) const;

  static PhaseKernel constant(double a0) { return {{a0}}; }
  static PhaseKernel cos_phi() { return {{0.0, 1.0}}; }
  // Cosine series of phi on [0, pi] (even extension):
  // pi/2 - (4/pi) sum_{k odd <= K} cos(k phi)/k^2.
  static PhaseKernel abs_phi_series(int K);
};

// int_0^pi cos(k phi) e_phi(n) e_phi(m) dphi; every term is a Kronecker
// delta in k, so entries close in O(1).
double triple_product_integral(PhaseSector sector, int k, int n, int m);

double function_of_phase_entry(const PhaseKernel& kernel, PhaseSector sector, int n, int m);

// int_0^pi f(phi) |phi><phi| dphi
OperatorMatrix build_function_of_phase(const PhaseKernel& kernel, PhaseSector sector, int dim);

// Literal term-by-term sum over all K+1 cosine coefficients, serial.
// Same values as build_function_of_phase; kept as the reference path.
OperatorMatrix build_function_of_phase_term_sum(const PhaseKernel& kernel, PhaseSector sector, int dim);

// One-sided shift E[n][n+1] = 1 (phase exponent). Not Hermitian; the last
// column truncation shows up as E E^dag = diag(1,..,1,0).
OperatorMatrix build_sg_ladder(int dim);

// C = (E + E^dag)/2 and S = (E - E^dag)/(2i)
OperatorMatrix build_phase_cosine_c(int dim);
OperatorMatrix build_phase_sine_s(int dim);

// Plus:  C + (sqrt(2)-1)/2 (|0><1| + |1><0|)
// Minus: C - (|0><1| + |1><0|)/2  (zero row/column at n = 0)
OperatorMatrix build_cos_phase(PhaseSector sector, int dim);

// diag(0, 1, ..., dim-1)
OperatorMatrix build_number_operator(int dim);

// Returns [C, S] after asserting it equals (i/2)(|0><0| - |D-1><D-1|)
// within tol; the corner at D-1 is the truncation artifact.
OperatorMatrix cs_commutator_check(int dim, double tol = 1e-14);

// <phi_+, psi_-> on the truncated basis; generically nonzero, witnessing
// that the two sectors are not orthogonal.
complexd sector_overlap(double phi, double psi, int dim);

// Computes [N, A] and returns max |diagonal|; identically zero because the
// diagonal of the commutator with a diagonal N is (n - n) A[n][n].
double number_phase_diagonal_check(const OperatorMatrix& A);

}  // namespace phasekit::phase
