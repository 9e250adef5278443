#include "phasekit/coherent.hpp"

#include <cmath>
#include <map>

namespace phasekit::coherent {

namespace {
constexpr double kPi = 3.14159265358979323846;

double log_pmf(double nbar, int n) { return -nbar + n * std::log(nbar) - std::lgamma(n + 1.0); }
}  // namespace

void CoherentParams::validate() const {
  if (!(nbar >= 0.0)) throw RangeError("CoherentParams: nbar must be >= 0, got " + std::to_string(nbar));
  if (!(theta > -kPi && theta <= kPi))
    throw RangeError("CoherentParams: theta must lie in (-pi, pi], got " + std::to_string(theta));
  if (dim < 1) throw DimensionError("CoherentParams: dim must be >= 1, got " + std::to_string(dim));
  if (!(tail_tol > 0.0)) throw RangeError("CoherentParams: tail_tol must be > 0");
}

double poisson_tail(double nbar, int dim) {
  if (dim <= 0) return 1.0;
  if (nbar == 0.0) return 0.0;
  double term = std::exp(log_pmf(nbar, dim));
  double sum = term;
  // past the mode the term ratio nbar/(n+1) < 1, so this terminates fast
  for (int n = dim; term > 0.0; ++n) {
    term *= nbar / (n + 1.0);
    sum += term;
    if (n > nbar && term < sum * 1e-18) break;
  }
  return sum;
}

int minimal_dim(double nbar, double tail_tol) {
  if (!(tail_tol > 0.0)) throw RangeError("minimal_dim: tail_tol must be > 0");
  if (nbar == 0.0) return 1;
  int lo = 1, hi = static_cast<int>(nbar + 40.0 * std::sqrt(nbar) + 60.0);
  while (poisson_tail(nbar, hi) > tail_tol) hi *= 2;
  while (lo < hi) {
    const int mid = lo + (hi - lo) / 2;
    if (poisson_tail(nbar, mid) <= tail_tol)
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

StateVector coherent_vector(const CoherentParams& p) {
  p.validate();
  const double tail = poisson_tail(p.nbar, p.dim);
  if (tail > p.tail_tol) {
    const int need = minimal_dim(p.nbar, p.tail_tol);
    throw TruncationError("coherent_vector: Poisson tail " + std::to_string(tail) + " exceeds tail_tol at dim " +
                              std::to_string(p.dim) + "; minimal admissible dim is " + std::to_string(need),
                          need);
  }
  StateVector v(p.dim);
  v.amps[0] = complexd(std::exp(-0.5 * p.nbar), 0.0);
  for (int n = 1; n < p.dim; ++n) {
    const double log_mag = -0.5 * p.nbar + 0.5 * n * std::log(p.nbar) - 0.5 * std::lgamma(n + 1.0);
    v.amps[static_cast<size_t>(n)] = std::polar(std::exp(log_mag), n * p.theta);
  }
  return v;
}

double expect_abs_phase(const StateVector& state, const OperatorMatrix& abs_phase) {
  return kernels::quadratic_form(abs_phase, state).real();
}

double expect_abs_phase(const CoherentParams& p, phase::PhaseSector sector) {
  const StateVector gamma = coherent_vector(p);
  const OperatorMatrix A = phase::build_abs_phase(sector, p.dim);
  return expect_abs_phase(gamma, A);
}

double fourier_abs(double theta, int K) {
  if (K < 1) throw RangeError("fourier_abs: K must be >= 1, got " + std::to_string(K));
  int s = K;
  if (s % 2 == 0) --s;
  double sum = 0.0;  // smallest terms first
  for (; s >= 1; s -= 2) sum += std::cos(theta * s) / (static_cast<double>(s) * s);
  return kPi / 2.0 - 4.0 / kPi * sum;
}

io::Table classical_limit_scan(const std::vector<double>& theta_grid, const std::vector<double>& nbar_list,
                               phase::PhaseSector sector, double tail_tol, int fourier_terms) {
  if (theta_grid.empty() || nbar_list.empty()) throw RangeError("classical_limit_scan: grids must be nonempty");
  io::Table t;
  t.name = "classical_limit_scan";
  t.columns = {"theta", "nbar", "dim", "expect_abs_phase", "abs_theta", "fourier_ref", "dev_abs", "dev_fourier"};

  std::map<int, OperatorMatrix> matrices;  // per truncation dim
  for (const double theta : theta_grid) {
    for (const double nbar : nbar_list) {
      const int dim = minimal_dim(nbar, tail_tol);
      auto it = matrices.find(dim);
      if (it == matrices.end()) it = matrices.emplace(dim, phase::build_abs_phase(sector, dim)).first;
      CoherentParams p{nbar, theta, dim, tail_tol};
      const double expect = expect_abs_phase(coherent_vector(p), it->second);
      const double ref = fourier_abs(theta, fourier_terms);
      t.add_row({theta, nbar, static_cast<double>(dim), expect, std::abs(theta), ref, std::abs(expect - std::abs(theta)),
                 std::abs(expect - ref)});
    }
  }
  return t;
}

}  // namespace phasekit::coherent
