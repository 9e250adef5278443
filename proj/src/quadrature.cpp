#include "phasekit/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace phasekit::quad {

namespace {

constexpr double kPi = 3.14159265358979323846;

GaussRule compute_gauss_legendre(int order) {
  if (order < 2) throw RangeError("gauss_legendre: order must be >= 2");
  GaussRule rule;
  rule.order = order;
  rule.nodes.assign(static_cast<size_t>(order), 0.0);
  rule.weights.assign(static_cast<size_t>(order), 0.0);
  const int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double z = std::cos(kPi * (i + 0.75) / (order + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < order; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = order * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    rule.nodes[static_cast<size_t>(i)] = -z;
    rule.nodes[static_cast<size_t>(order - 1 - i)] = z;
    const double w = 2.0 / ((1.0 - z * z) * pp * pp);
    rule.weights[static_cast<size_t>(i)] = w;
    rule.weights[static_cast<size_t>(order - 1 - i)] = w;
  }
  return rule;
}

}  // namespace

const GaussRule& gauss_legendre(int order) {
  static std::mutex mu;
  static std::map<int, GaussRule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, compute_gauss_legendre(order)).first;
  return it->second;
}

const char* oracle_kernel_name(OracleKernel k) {
  switch (k) {
    case OracleKernel::AbsPhi:
      return "absphi";
    case OracleKernel::CosPhi:
      return "cosphi";
    default:
      return "one";
  }
}

namespace {

double kernel_eval(OracleKernel k, double phi) {
  switch (k) {
    case OracleKernel::AbsPhi:
      return phi;
    case OracleKernel::CosPhi:
      return std::cos(phi);
    default:
      return 1.0;
  }
}

}  // namespace

double closed_form_entry(phase::PhaseSector sector, OracleKernel kernel, int n, int m) {
  switch (kernel) {
    case OracleKernel::AbsPhi:
      return phase::abs_phase_entry(sector, n, m);
    case OracleKernel::CosPhi:
      return phase::function_of_phase_entry(phase::PhaseKernel::cos_phi(), sector, n, m);
    default:
      return phase::function_of_phase_entry(phase::PhaseKernel::constant(1.0), sector, n, m);
  }
}

EntryValidation oracle_entry(phase::PhaseSector sector, OracleKernel kernel, int n, int m,
                             const QuadratureConfig& cfg) {
  QuadratureConfig local = cfg;
  local.min_panels = std::max(local.min_panels, n + m + 2);
  const auto integrand = [sector, kernel, n, m](double phi) {
    return kernel_eval(kernel, phi) * phase::basis_amplitude(sector, n, phi) *
           phase::basis_amplitude(sector, m, phi);
  };
  const auto q = integrate(integrand, 0.0, kPi, local);
  EntryValidation v;
  v.closed_form = closed_form_entry(sector, kernel, n, m);
  v.quadrature = q.value;
  v.diff = std::abs(v.closed_form - v.quadrature);
  v.error_estimate = q.error_estimate;
  return v;
}

EntryValidation oracle_validate_entry(phase::PhaseSector sector, OracleKernel kernel, int n, int m,
                                      const QuadratureConfig& cfg, double tol) {
  const EntryValidation v = oracle_entry(sector, kernel, n, m, cfg);
  if (v.diff > tol)
    throw ToleranceError(std::string("entry (") + std::to_string(n) + "," + std::to_string(m) + ") sector " +
                         phase::sector_name(sector) + " kernel " + oracle_kernel_name(kernel) + ": closed form " +
                         std::to_string(v.closed_form) + " vs quadrature " + std::to_string(v.quadrature) +
                         " differ by " + std::to_string(v.diff));
  return v;
}

std::vector<SweepRow> oracle_sweep(const std::vector<phase::PhaseSector>& sectors,
                                   const std::vector<OracleKernel>& kernels, int nmax) {
  if (nmax < 1) throw RangeError("oracle_sweep: nmax must be >= 1");
  std::vector<SweepRow> rows;
  for (const auto sector : sectors)
    for (const auto kernel : kernels)
      for (int n = 0; n < nmax; ++n)
        for (int m = n; m < nmax; ++m) rows.push_back({sector, kernel, n, m, 0, 0, 0, 0, 0});

  // touch the node caches before the parallel region
  gauss_legendre(15);
  gauss_legendre(24);

  std::vector<SweepRow> out(rows.size());
  phasekit::kernels::map_indices(out, [&rows](size_t idx) {
    SweepRow row = rows[idx];
    const auto adaptive = oracle_entry(row.sector, row.kernel, row.n, row.m, QuadratureConfig::adaptive());
    const auto fixed = oracle_entry(row.sector, row.kernel, row.n, row.m, QuadratureConfig::fixed_order(24));
    row.closed_form = adaptive.closed_form;
    row.adaptive = adaptive.quadrature;
    row.fixed = fixed.quadrature;
    row.diff_closed_adaptive = adaptive.diff;
    row.diff_rules = std::abs(adaptive.quadrature - fixed.quadrature);
    return row;
  });
  return out;
}

}  // namespace phasekit::quad
