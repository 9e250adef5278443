#pragma once

#include "phasekit/phase.hpp"
#include "phasekit/table.hpp"

namespace phasekit::coherent {

// Coherent state |gamma>, gamma = sqrt(nbar) e^{i theta}, truncated at dim.
// The Poisson tail mass sum_{n >= dim} e^{-nbar} nbar^n / n! must stay below
// tail_tol for the truncation to be admissible.
struct CoherentParams {
  double nbar = 0.0;
  double theta = 0.0;  // in (-pi, pi]
  int dim = 1;
  double tail_tol = 1e-12;

  void validate() const;
};

// sum_{n >= dim} e^{-nbar} nbar^n / n!, by direct stable summation
double poisson_tail(double nbar, int dim);

// smallest dim whose tail mass is <= tail_tol
int minimal_dim(double nbar, double tail_tol);

// amps[n] = e^{-nbar/2} gamma^n / sqrt(n!), evaluated in log space so that
// nbar ~ 400 stays finite (n! overflows doubles near n = 171).
StateVector coherent_vector(const CoherentParams& p);

// <gamma| |Phi| |gamma> in the chosen sector
double expect_abs_phase(const CoherentParams& p, phase::PhaseSector sector);
double expect_abs_phase(const StateVector& state, const OperatorMatrix& abs_phase);

// pi/2 - (4/pi) sum_{s=1,3,..<=K} cos(theta s)/s^2; tends to |theta| on
// [-pi, pi] with tail error below 0.64/K.
double fourier_abs(double theta, int K);

// Rows (theta, nbar, dim, expect, abs_theta, fourier_ref, dev_abs,
// dev_fourier) in grid order: theta outer, nbar inner.
io::Table classical_limit_scan(const std::vector<double>& theta_grid, const std::vector<double>& nbar_list,
                               phase::PhaseSector sector, double tail_tol = 1e-12, int fourier_terms = 9999);

}  // namespace phasekit::coherent
