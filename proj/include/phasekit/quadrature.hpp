#pragma once

#include <functional>
#include <type_traits>
#include <vector>

#include "phasekit/phase.hpp"

namespace phasekit::quad {

struct GaussRule {
  int order = 0;
  std::vector<double> nodes;    // on (-1, 1)
  std::vector<double> weights;  // sum to 2
};

// Gauss-Legendre nodes/weights by Newton iteration on P_n; cached per order.
const GaussRule& gauss_legendre(int order);

struct QuadratureConfig {
  enum class Rule { FixedOrderGauss, AdaptiveBisection };

  Rule rule = Rule::AdaptiveBisection;
  double abs_tol = 1e-12;  // adaptive acceptance target for the whole interval
  int max_depth = 40;
  int order = 16;      // fixed-rule panel order (>= 8)
  int min_panels = 1;  // initial uniform panels; oscillatory integrands need ~frequency+2

  static QuadratureConfig adaptive(double abs_tol = 1e-12, int max_depth = 40, int min_panels = 1) {
    QuadratureConfig c;
    c.rule = Rule::AdaptiveBisection;
    c.abs_tol = abs_tol;
    c.max_depth = max_depth;
    c.min_panels = min_panels;
    return c;
  }
  static QuadratureConfig fixed_order(int order, int min_panels = 1) {
    QuadratureConfig c;
    c.rule = Rule::FixedOrderGauss;
    c.order = order;
    c.min_panels = min_panels;
    return c;
  }

  void validate() const {
    if (abs_tol <= 0) throw RangeError("QuadratureConfig: abs_tol must be > 0");
    if (rule == Rule::FixedOrderGauss && order < 8) throw RangeError("QuadratureConfig: order must be >= 8");
    if (max_depth < 1) throw RangeError("QuadratureConfig: max_depth must be >= 1");
    if (min_panels < 1) throw RangeError("QuadratureConfig: min_panels must be >= 1");
  }
};

template <class T>
struct QuadResult {
  T value{};
  double error_estimate = 0.0;
  long evaluations = 0;
};

namespace detail {

template <class T, class F>
T panel_gauss(F& f, const GaussRule& rule, double a, double b, long& evals) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  T acc{};
  for (int i = 0; i < rule.order; ++i) {
    acc += static_cast<T>(rule.weights[static_cast<size_t>(i)] * half * f(mid + half * rule.nodes[static_cast<size_t>(i)]));
  }
  evals += rule.order;
  return acc;
}

template <class T, class F>
void adaptive_panel(F& f, const GaussRule& rule, double a, double b, T coarse, double tol, int depth, int max_depth,
                    QuadResult<T>& out, double& abs_mass) {
  const double mid = 0.5 * (a + b);
  const T left = panel_gauss<T>(f, rule, a, mid, out.evaluations);
  const T right = panel_gauss<T>(f, rule, mid, b, out.evaluations);
  const T fine = left + right;
  const double err = std::abs(coarse - fine);
  if (err <= tol || err <= 1e-300) {
    out.value += fine;
    out.error_estimate += err;
    abs_mass += std::abs(left) + std::abs(right);
    return;
  }
  if (depth >= max_depth)
    throw QuadratureError("adaptive quadrature did not converge: panel error " + std::to_string(err) +
                          " above local tolerance " + std::to_string(tol) + " at max depth");
  adaptive_panel(f, rule, a, mid, left, 0.5 * tol, depth + 1, max_depth, out, abs_mass);
  adaptive_panel(f, rule, mid, b, right, 0.5 * tol, depth + 1, max_depth, out, abs_mass);
}

}  // namespace detail

// Integrates a real- or complex-valued integrand over [a, b]. The error
// estimate is conservative: it accumulates observed panel differences and is
// floored at the rounding scale of the total absolute mass.
template <class F>
auto integrate(F&& f, double a, double b, const QuadratureConfig& cfg)
    -> QuadResult<std::decay_t<std::invoke_result_t<F, double>>> {
  using T = std::decay_t<std::invoke_result_t<F, double>>;
  cfg.validate();
  if (!(a < b)) throw RangeError("integrate: requires a < b");

  QuadResult<T> out;
  double abs_mass = 0.0;
  const int panels = cfg.min_panels;
  const double w = (b - a) / panels;

  if (cfg.rule == QuadratureConfig::Rule::AdaptiveBisection) {
    const GaussRule& rule = gauss_legendre(15);
    for (int p = 0; p < panels; ++p) {
      const double pa = a + p * w;
      const double pb = (p == panels - 1) ? b : pa + w;
      const T coarse = detail::panel_gauss<T>(f, rule, pa, pb, out.evaluations);
      detail::adaptive_panel(f, rule, pa, pb, coarse, cfg.abs_tol * (pb - pa) / (b - a), 0, cfg.max_depth, out,
                             abs_mass);
    }
  } else {
    const GaussRule& rule = gauss_legendre(cfg.order);
    T coarse{};
    for (int p = 0; p < panels; ++p) {
      const double pa = a + p * w;
      const double pb = (p == panels - 1) ? b : pa + w;
      coarse += detail::panel_gauss<T>(f, rule, pa, pb, out.evaluations);
    }
    T fine{};
    const double w2 = (b - a) / (2 * panels);
    for (int p = 0; p < 2 * panels; ++p) {
      const double pa = a + p * w2;
      const double pb = (p == 2 * panels - 1) ? b : pa + w2;
      const T part = detail::panel_gauss<T>(f, rule, pa, pb, out.evaluations);
      fine += part;
      abs_mass += std::abs(part);
    }
    out.value = fine;
    out.error_estimate = std::abs(coarse - fine);
  }
  out.error_estimate = std::max(out.error_estimate, 64.0 * 1.1e-16 * abs_mass);
  return out;
}

enum class OracleKernel { AbsPhi, CosPhi, One };

const char* oracle_kernel_name(OracleKernel k);

// Closed-form phase-sector entry for the kernel, the value the oracle checks.
double closed_form_entry(phase::PhaseSector sector, OracleKernel kernel, int n, int m);

struct EntryValidation {
  double closed_form = 0.0;
  double quadrature = 0.0;
  double diff = 0.0;
  double error_estimate = 0.0;
};

// Recomputes one matrix element by direct quadrature of
// int_0^pi f(phi) e_phi(n) e_phi(m) dphi and throws ToleranceError when the
// closed form drifts beyond tol.
EntryValidation oracle_validate_entry(phase::PhaseSector sector, OracleKernel kernel, int n, int m,
                                      const QuadratureConfig& cfg, double tol);

// Non-throwing variant used by sweeps and reports.
EntryValidation oracle_entry(phase::PhaseSector sector, OracleKernel kernel, int n, int m,
                             const QuadratureConfig& cfg);

struct SweepRow {
  phase::PhaseSector sector;
  OracleKernel kernel;
  int n = 0;
  int m = 0;
  double closed_form = 0.0;
  double adaptive = 0.0;
  double fixed = 0.0;
  double diff_closed_adaptive = 0.0;
  double diff_rules = 0.0;
};

// Validates every entry with n <= m < nmax under both rules; parallel over
// entries, rows in deterministic (sector, kernel, n, m) order.
std::vector<SweepRow> oracle_sweep(const std::vector<phase::PhaseSector>& sectors,
                                   const std::vector<OracleKernel>& kernels, int nmax);

}  // namespace phasekit::quad
