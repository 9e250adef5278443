#include "phasekit/boundary.hpp"

#include <cmath>

namespace phasekit::boundary {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kDecayBound = 1e-12;
}  // namespace

std::vector<double> finite_difference_weights(double z, const std::vector<double>& nodes, int deriv_order) {
  const int n = static_cast<int>(nodes.size());
  const int m = deriv_order;
  if (m < 0) throw RangeError("finite_difference_weights: derivative order must be >= 0");
  if (n < m + 1) throw GridError("finite_difference_weights: need at least order+1 nodes");

  // Fornberg recurrence; c[j][k] is the weight of node j for the k-th derivative.
  std::vector<std::vector<double>> c(static_cast<size_t>(n), std::vector<double>(static_cast<size_t>(m) + 1, 0.0));
  double c1 = 1.0;
  double c4 = nodes[0] - z;
  c[0][0] = 1.0;
  for (int i = 1; i < n; ++i) {
    const int mn = std::min(i, m);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = nodes[static_cast<size_t>(i)] - z;
    for (int j = 0; j < i; ++j) {
      const double c3 = nodes[static_cast<size_t>(i)] - nodes[static_cast<size_t>(j)];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k)
          c[static_cast<size_t>(i)][static_cast<size_t>(k)] =
              c1 * (k * c[static_cast<size_t>(i - 1)][static_cast<size_t>(k - 1)] -
                    c5 * c[static_cast<size_t>(i - 1)][static_cast<size_t>(k)]) /
              c2;
        c[static_cast<size_t>(i)][0] = -c1 * c5 * c[static_cast<size_t>(i - 1)][0] / c2;
      }
      for (int k = mn; k >= 1; --k)
        c[static_cast<size_t>(j)][static_cast<size_t>(k)] =
            (c4 * c[static_cast<size_t>(j)][static_cast<size_t>(k)] -
             k * c[static_cast<size_t>(j)][static_cast<size_t>(k - 1)]) /
            c3;
      c[static_cast<size_t>(j)][0] = c4 * c[static_cast<size_t>(j)][0] / c3;
    }
    c1 = c2;
  }

  std::vector<double> w(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) w[static_cast<size_t>(j)] = c[static_cast<size_t>(j)][static_cast<size_t>(m)];
  return w;
}

GridFunction::GridFunction(Domain d, double a, double b, std::vector<complexd> samples)
    : domain_(d), a_(a), b_(b), samples_(std::move(samples)) {
  if (samples_.size() < 64) throw GridError("GridFunction: grid must have at least 64 points");
}

GridFunction GridFunction::circle(int size, const std::function<complexd(double)>& f) {
  if (size < 64) throw GridError("GridFunction: grid must have at least 64 points");
  std::vector<complexd> s(static_cast<size_t>(size));
  const double h = 2.0 * kPi / (size - 1);
  for (int i = 0; i < size; ++i) s[static_cast<size_t>(i)] = f(-kPi + i * h);
  return GridFunction(Domain::Circle, -kPi, kPi, std::move(s));
}

GridFunction GridFunction::half_line(int size, double cutoff, const std::function<complexd(double)>& f,
                                     bool enforce_decay) {
  if (size < 64) throw GridError("GridFunction: grid must have at least 64 points");
  if (!(cutoff > 0.0)) throw RangeError("GridFunction: half-line cutoff must be > 0");
  std::vector<complexd> s(static_cast<size_t>(size));
  const double h = cutoff / (size - 1);
  for (int i = 0; i < size; ++i) s[static_cast<size_t>(i)] = f(i * h);
  if (enforce_decay && std::abs(s.back()) > kDecayBound)
    throw GridError("GridFunction: |u(R)| = " + std::to_string(std::abs(s.back())) +
                    " has not decayed at the cutoff R = " + std::to_string(cutoff));
  return GridFunction(Domain::HalfLine, 0.0, cutoff, std::move(s));
}

GridFunction GridFunction::from_samples(Domain d, double b, std::vector<complexd> samples) {
  const double a = d == Domain::Circle ? -kPi : 0.0;
  if (d == Domain::Circle && b != kPi) throw RangeError("from_samples: circle domain is fixed to [-pi, pi]");
  return GridFunction(d, a, b, std::move(samples));
}

GridFunction GridFunction::derivative(int order) const {
  if (order != 1 && order != 2) throw RangeError("GridFunction::derivative: order must be 1 or 2");
  const int n = size();
  const int width = order + 4;  // one-sided points for 4th-order accuracy
  if (n < width) throw GridError("GridFunction::derivative: grid too small for the stencil");
  const double hh = h();

  std::vector<complexd> out(static_cast<size_t>(n));

  // one-sided edges via Fornberg weights on offsets 0..width-1
  std::vector<double> offsets(static_cast<size_t>(width));
  for (int i = 0; i < width; ++i) offsets[static_cast<size_t>(i)] = i;
  for (int i = 0; i < 2; ++i) {
    const std::vector<double> wl = finite_difference_weights(i, offsets, order);
    complexd acc_l(0.0, 0.0), acc_r(0.0, 0.0);
    for (int k = 0; k < width; ++k) {
      acc_l += wl[static_cast<size_t>(k)] * samples_[static_cast<size_t>(k)];
      acc_r += wl[static_cast<size_t>(k)] * samples_[static_cast<size_t>(n - 1 - k)];
    }
    const double scale = std::pow(hh, -order);
    const double mirror = (order % 2 == 0) ? 1.0 : -1.0;
    out[static_cast<size_t>(i)] = acc_l * scale;
    out[static_cast<size_t>(n - 1 - i)] = acc_r * scale * mirror;
  }

  if (order == 1) {
    const double s = 1.0 / (12.0 * hh);
    for (int i = 2; i < n - 2; ++i)
      out[static_cast<size_t>(i)] = s * (samples_[static_cast<size_t>(i - 2)] - 8.0 * samples_[static_cast<size_t>(i - 1)] +
                                         8.0 * samples_[static_cast<size_t>(i + 1)] - samples_[static_cast<size_t>(i + 2)]);
  } else {
    const double s = 1.0 / (12.0 * hh * hh);
    for (int i = 2; i < n - 2; ++i)
      out[static_cast<size_t>(i)] =
          s * (-samples_[static_cast<size_t>(i - 2)] + 16.0 * samples_[static_cast<size_t>(i - 1)] -
               30.0 * samples_[static_cast<size_t>(i)] + 16.0 * samples_[static_cast<size_t>(i + 1)] -
               samples_[static_cast<size_t>(i + 2)]);
  }
  return GridFunction(domain_, a_, b_, std::move(out));
}

complexd GridFunction::left_boundary_derivative(int deriv_order) const {
  if (deriv_order == 0) return samples_.front();
  const int width = deriv_order + 4;
  if (size() < width) throw GridError("left_boundary_derivative: grid too small for the stencil");
  std::vector<double> offsets(static_cast<size_t>(width));
  for (int i = 0; i < width; ++i) offsets[static_cast<size_t>(i)] = i;
  const std::vector<double> w = finite_difference_weights(0.0, offsets, deriv_order);
  complexd acc(0.0, 0.0);
  for (int k = 0; k < width; ++k) acc += w[static_cast<size_t>(k)] * samples_[static_cast<size_t>(k)];
  return acc * std::pow(h(), -deriv_order);
}

void GridFunction::require_same_grid(const GridFunction& u, const GridFunction& v, const char* where) {
  if (u.domain_ != v.domain_ || u.size() != v.size() || u.a_ != v.a_ || u.b_ != v.b_)
    throw GridError(std::string(where) + ": grids differ (domain/size/extent)");
}

complexd l2_inner(const GridFunction& u, const GridFunction& v) {
  GridFunction::require_same_grid(u, v, "l2_inner");
  const int n = u.size();
  const int intervals = n - 1;
  std::vector<double> w(static_cast<size_t>(n), 0.0);
  int simpson_end = intervals;  // exclusive index of the last plain-Simpson interval
  const bool odd = (intervals % 2 != 0);
  if (odd) simpson_end = intervals - 3;
  for (int k = 0; k + 2 <= simpson_end; k += 2) {
    w[static_cast<size_t>(k)] += 1.0 / 3.0;
    w[static_cast<size_t>(k + 1)] += 4.0 / 3.0;
    w[static_cast<size_t>(k + 2)] += 1.0 / 3.0;
  }
  if (odd) {  // Simpson 3/8 block on the last three intervals
    const int s = simpson_end;
    w[static_cast<size_t>(s)] += 3.0 / 8.0;
    w[static_cast<size_t>(s + 1)] += 9.0 / 8.0;
    w[static_cast<size_t>(s + 2)] += 9.0 / 8.0;
    w[static_cast<size_t>(s + 3)] += 3.0 / 8.0;
  }
  complexd acc(0.0, 0.0);
  for (int i = 0; i < n; ++i) acc += w[static_cast<size_t>(i)] * std::conj(u[i]) * v[i];
  return acc * u.h();
}

namespace {

// <u, -i v'> - <-i u', v>; the second term conjugates the -i
FormResult first_order_form(const GridFunction& u, const GridFunction& v) {
  const GridFunction du = u.derivative(1);
  const GridFunction dv = v.derivative(1);
  FormResult r;
  r.lhs = complexd(0.0, -1.0) * l2_inner(u, dv) - complexd(0.0, 1.0) * l2_inner(du, v);
  return r;
}

}  // namespace

FormResult boundary_form_jz(const GridFunction& u, const GridFunction& v) {
  GridFunction::require_same_grid(u, v, "boundary_form_jz");
  if (u.domain() != Domain::Circle) throw GridError("boundary_form_jz: needs circle-domain functions");
  FormResult r = first_order_form(u, v);
  r.rhs = complexd(0.0, -1.0) * (std::conj(u.back()) * v.back() - std::conj(u.front()) * v.front());
  r.residual = std::abs(r.lhs - r.rhs);
  return r;
}

FormResult boundary_form_pr(const GridFunction& u, const GridFunction& v) {
  GridFunction::require_same_grid(u, v, "boundary_form_pr");
  if (u.domain() != Domain::HalfLine) throw GridError("boundary_form_pr: needs half-line functions");
  FormResult r = first_order_form(u, v);
  r.rhs = complexd(0.0, 1.0) * std::conj(u.front()) * v.front();
  r.residual = std::abs(r.lhs - r.rhs);
  return r;
}

FormResult boundary_form_pr2(const GridFunction& u, const GridFunction& v) {
  GridFunction::require_same_grid(u, v, "boundary_form_pr2");
  if (u.domain() != Domain::HalfLine) throw GridError("boundary_form_pr2: needs half-line functions");
  const GridFunction ddu = u.derivative(2);
  const GridFunction ddv = v.derivative(2);
  FormResult r;
  r.lhs = -l2_inner(u, ddv) + l2_inner(ddu, v);
  r.rhs = std::conj(u.front()) * v.left_boundary_derivative(1) -
          std::conj(u.left_boundary_derivative(1)) * v.front();
  r.residual = std::abs(r.lhs - r.rhs);
  return r;
}

const char* membership_class_name(MembershipClass c) {
  switch (c) {
    case MembershipClass::HrPlus:
      return "HrPlus";
    case MembershipClass::HrMinus:
      return "HrMinus";
    case MembershipClass::A:
      return "A";
    default:
      return "HAlpha";
  }
}

MembershipReport membership_check(const GridFunction& u, MembershipClass cls, double alpha, double tol) {
  MembershipReport rep;
  rep.cls = cls;
  rep.alpha = alpha;

  if (cls == MembershipClass::HAlpha) {
    if (u.domain() != Domain::Circle) throw GridError("membership_check: HAlpha needs a circle-domain function");
    const complexd phase = std::exp(complexd(0.0, 2.0 * kPi * alpha));
    rep.orders_checked = {0};
    rep.derivative_residuals = {std::abs(u.back() - phase * u.front())};
  } else {
    if (u.domain() != Domain::HalfLine)
      throw GridError("membership_check: half-line class needs a half-line function");
    switch (cls) {
      case MembershipClass::HrPlus:
        rep.orders_checked = {1, 3};
        break;
      case MembershipClass::HrMinus:
        rep.orders_checked = {0, 2};
        break;
      default:
        rep.orders_checked = {0, 1, 2, 3};
        break;
    }
    for (const int d : rep.orders_checked)
      rep.derivative_residuals.push_back(std::abs(u.left_boundary_derivative(d)));
  }

  rep.verdict = true;
  for (const double r : rep.derivative_residuals)
    if (!(r <= tol)) rep.verdict = false;
  return rep;
}

TransformResult cos_sin_transform(const GridFunction& u) {
  if (u.domain() != Domain::HalfLine) throw GridError("cos_sin_transform: needs a half-line function");
  const int n = u.size() - 1;
  const double R = u.cutoff();
  TransformResult tr;
  tr.chi.resize(static_cast<size_t>(n) + 1);
  tr.cos_components.assign(static_cast<size_t>(n) + 1, complexd(0.0, 0.0));
  tr.sin_components.assign(static_cast<size_t>(n) + 1, complexd(0.0, 0.0));
  for (int j = 0; j <= n; ++j) tr.chi[static_cast<size_t>(j)] = j * kPi / R;

  kernels::map_indices(tr.cos_components, [&u, n](size_t j) {
    complexd acc = 0.5 * (u[0] + (j % 2 == 0 ? u[n] : -u[n]));
    for (int i = 1; i < n; ++i) acc += u[i] * std::cos(kPi * static_cast<double>(i) * static_cast<double>(j) / n);
    return acc * (2.0 / n);
  });
  kernels::map_indices(tr.sin_components, [&u, n](size_t j) {
    if (j == 0 || static_cast<int>(j) == n) return complexd(0.0, 0.0);
    complexd acc(0.0, 0.0);
    for (int i = 1; i < n; ++i) acc += u[i] * std::sin(kPi * static_cast<double>(i) * static_cast<double>(j) / n);
    return acc * (2.0 / n);
  });
  return tr;
}

GridFunction reconstruct_from_cos(const TransformResult& tr, const GridFunction& like) {
  if (like.domain() != Domain::HalfLine) throw GridError("reconstruct_from_cos: needs a half-line template");
  const int n = like.size() - 1;
  if (static_cast<int>(tr.cos_components.size()) != n + 1)
    throw GridError("reconstruct_from_cos: component count does not match the grid");
  std::vector<complexd> samples(static_cast<size_t>(n) + 1);
  kernels::map_indices(samples, [&tr, n](size_t i) {
    complexd acc = 0.5 * (tr.cos_components[0] +
                          (i % 2 == 0 ? tr.cos_components[static_cast<size_t>(n)]
                                      : -tr.cos_components[static_cast<size_t>(n)]));
    for (int j = 1; j < n; ++j)
      acc += tr.cos_components[static_cast<size_t>(j)] *
             std::cos(kPi * static_cast<double>(i) * static_cast<double>(j) / n);
    return acc;
  });
  return GridFunction::from_samples(Domain::HalfLine, like.cutoff(), std::move(samples));
}

namespace {

double logistic_tail_window(double r) { return 1.0 / (1.0 + std::exp((r - 16.0) / 0.7)); }

std::vector<CorpusEntry> make_corpus() {
  std::vector<CorpusEntry> c;
  c.push_back({"exp(-r)", Domain::HalfLine, [](double r) { return complexd(std::exp(-r), 0.0); }});
  c.push_back({"r*exp(-r)", Domain::HalfLine, [](double r) { return complexd(r * std::exp(-r), 0.0); }});
  c.push_back({"exp(-r^2)", Domain::HalfLine, [](double r) { return complexd(std::exp(-r * r), 0.0); }});
  c.push_back({"r*exp(-r^2)", Domain::HalfLine, [](double r) { return complexd(r * std::exp(-r * r), 0.0); }});
  c.push_back({"a_member", Domain::HalfLine, [](double r) {
                 if (r <= 0.0) return complexd(0.0, 0.0);
                 const double e = std::exp(-1.0 / r);
                 return complexd(e / (r * r) * logistic_tail_window(r), 0.0);
               }});
  c.push_back({"cos(theta)", Domain::Circle, [](double t) { return complexd(std::cos(t), 0.0); }});
  c.push_back({"sin(theta)", Domain::Circle, [](double t) { return complexd(std::sin(t), 0.0); }});
  c.push_back({"theta_taper", Domain::Circle, [](double t) {
                 const double c2 = std::cos(0.5 * t);
                 return complexd(t * c2 * c2, 0.0);
               }});
  c.push_back({"one", Domain::Circle, [](double) { return complexd(1.0, 0.0); }});
  return c;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> c = make_corpus();
  return c;
}

const CorpusEntry& corpus_entry(const std::string& name) {
  for (const auto& e : corpus())
    if (e.name == name) return e;
  throw RangeError("corpus_entry: no corpus function named '" + name + "'");
}

}  // namespace phasekit::boundary
