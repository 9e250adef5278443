#pragma once

#include <functional>

#include "phasekit/core.hpp"

namespace phasekit::boundary {

// Fornberg finite-difference weights: coefficients over the given nodes that
// approximate the deriv_order-th derivative at point z. Order of accuracy is
// nodes.size() - deriv_order.
std::vector<double> finite_difference_weights(double z, const std::vector<double>& nodes, int deriv_order);

enum class Domain { Circle, HalfLine };

// Complex function sampled on a uniform grid: [-pi, pi] on the circle,
// [0, R] on the half line. Half-line samples must have decayed at the
// cutoff (|u(R)| <= 1e-12), which stands in for u(r = infinity) = 0.
class GridFunction {
 public:
  static GridFunction circle(int size, const std::function<complexd(double)>& f);
  static GridFunction half_line(int size, double cutoff, const std::function<complexd(double)>& f,
                                bool enforce_decay = true);
  // raw-sample construction (no decay enforcement); a = -pi/0, b = pi/R
  static GridFunction from_samples(Domain d, double b, std::vector<complexd> samples);

  Domain domain() const { return domain_; }
  int size() const { return static_cast<int>(samples_.size()); }
  double a() const { return a_; }
  double b() const { return b_; }
  double cutoff() const { return b_; }
  double h() const { return (b_ - a_) / (size() - 1); }
  double grid_point(int i) const { return a_ + i * h(); }

  const std::vector<complexd>& samples() const { return samples_; }
  const complexd& operator[](int i) const { return samples_[static_cast<size_t>(i)]; }
  complexd front() const { return samples_.front(); }
  complexd back() const { return samples_.back(); }

  // 4th-order differentiation: central stencils inside, one-sided at the
  // edges. Supported orders: 1 and 2.
  GridFunction derivative(int order = 1) const;

  // One-sided estimate of the deriv_order-th derivative at the left
  // boundary (r = 0 on the half line), 4th-order stencil.
  complexd left_boundary_derivative(int deriv_order) const;

  static void require_same_grid(const GridFunction& u, const GridFunction& v, const char* where);

 private:
  GridFunction(Domain d, double a, double b, std::vector<complexd> samples);

  Domain domain_;
  double a_, b_;
  std::vector<complexd> samples_;
};

// composite Simpson (3/8 block when the interval count is odd)
complexd l2_inner(const GridFunction& u, const GridFunction& v);

struct FormResult {
  complexd lhs;
  complexd rhs;
  double residual = 0.0;
};

// <u, -iv'> - <-iu', v> vs -i[conj(u)v(pi) - conj(u)v(-pi)]  (circle)
FormResult boundary_form_jz(const GridFunction& u, const GridFunction& v);

// <u, -iv'> - <-iu', v> vs i conj(u(0)) v(0)  (half line)
FormResult boundary_form_pr(const GridFunction& u, const GridFunction& v);

// <u, -v''> - <-u'', v> vs conj(u(0)) v'(0) - conj(u'(0)) v(0)  (half line)
FormResult boundary_form_pr2(const GridFunction& u, const GridFunction& v);

// HrPlus: odd derivatives vanish at r = 0 (orders 1, 3 checked);
// HrMinus: even derivatives vanish (orders 0, 2);
// A: orders 0..3 all vanish;
// HAlpha: u(pi) = e^{2 pi i alpha} u(-pi) on the circle.
// One-sided stencils above order ~4 are ill-conditioned, so the "all
// derivatives" conditions are checked to order 3 only.
enum class MembershipClass { HrPlus, HrMinus, A, HAlpha };

const char* membership_class_name(MembershipClass c);

struct MembershipReport {
  MembershipClass cls;
  double alpha = 0.0;  // HAlpha only
  std::vector<int> orders_checked;
  std::vector<double> derivative_residuals;
  bool verdict = false;
};

MembershipReport membership_check(const GridFunction& u, MembershipClass cls, double alpha = 0.0,
                                  double tol = 1e-6);

// Discrete cosine/sine components on chi_j = j pi / R, j = 0..size-1
// (trapezoid quadrature of (2/R) int u(r) {cos,sin}(chi r) dr; the pair of
// grids makes the cosine transform exactly involutive).
struct TransformResult {
  std::vector<double> chi;
  std::vector<complexd> cos_components;
  std::vector<complexd> sin_components;  // zero at j = 0 and j = size-1
};

TransformResult cos_sin_transform(const GridFunction& u);

// Rebuilds samples from the cosine components alone; recovers the
// even-type content of u on the same grid.
GridFunction reconstruct_from_cos(const TransformResult& tr, const GridFunction& like);

struct CorpusEntry {
  std::string name;
  Domain domain;
  std::function<complexd(double)> f;
};

// Fixed test-function corpus. The slow-decaying member exp(-1/r)/r^2 ships
// tail-windowed (logistic window, flat to ~1e-10 near the origin) so the
// half-line decay condition at the cutoff holds.
const std::vector<CorpusEntry>& corpus();

const CorpusEntry& corpus_entry(const std::string& name);

}  // namespace phasekit::boundary
