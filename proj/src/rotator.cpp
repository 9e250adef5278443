#include "phasekit/rotator.hpp"

#include <cmath>

namespace phasekit::rotator {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;
}  // namespace

double TaperSpec::value(double theta) const {
  if (theta <= kPi - epsilon) return theta;
  const double s = (theta - (kPi - epsilon)) / epsilon;
  const double c = std::cos(0.5 * kPi * s);
  const double sn = std::sin(0.5 * kPi * s);
  return theta * c * c - kPi * sn * sn;
}

std::string TaperSpec::describe() const {
  return "cosine-squared taper (epsilon=" + std::to_string(epsilon) +
         "): f=theta below pi-epsilon, then theta*cos^2(s*pi/2)-pi*sin^2(s*pi/2)";
}

double jz_eigenvalue(int m, const AlphaExtension& ext) { return m + ext.alpha; }

complexd theta_entry(int k) {
  if (k == 0) return complexd(0.0, 0.0);
  const double sign = (k % 2 == 0) ? 1.0 : -1.0;  // (-1)^k
  return complexd(0.0, -sign / static_cast<double>(k));
}

OperatorMatrix theta_matrix(const RotatorTruncation& trunc, const AlphaExtension& ext) {
  OperatorMatrix A(trunc.dim(), BasisTag::rotator(ext.alpha));
  kernels::fill(A, [](int i, int j) { return theta_entry(j - i); });
  return A;
}

OperatorMatrix theta_matrix_quadrature(const RotatorTruncation& trunc, const AlphaExtension& ext,
                                       const quad::QuadratureConfig& cfg) {
  OperatorMatrix A(trunc.dim(), BasisTag::rotator(ext.alpha));
  const double alpha = ext.alpha;
  for (int i = 0; i < trunc.dim(); ++i) {
    const int m = i - trunc.m_max;
    for (int j = 0; j < trunc.dim(); ++j) {
      const int mp = j - trunc.m_max;
      quad::QuadratureConfig local = cfg;
      local.min_panels = std::max(local.min_panels, std::abs(mp - m) + 2);
      const auto q = quad::integrate(
          [m, mp, alpha](double theta) {
            const complexd um = std::exp(complexd(0.0, (m + alpha) * theta));
            const complexd ump = std::exp(complexd(0.0, (mp + alpha) * theta));
            return std::conj(um) * theta * ump / kTwoPi;
          },
          -kPi, kPi, local);
      A(i, j) = q.value;
    }
  }
  return A;
}

OperatorMatrix theta_eps_matrix(const RotatorTruncation& trunc, const TaperSpec& taper,
                                const quad::QuadratureConfig& cfg) {
  const int m_max = trunc.m_max;
  const double junction = kPi - taper.epsilon;

  // entries depend only on k = m' - m; computed for k >= 0 and mirrored,
  // since f_eps is real and the k -> -k element is the conjugate
  std::vector<complexd> by_offset(static_cast<size_t>(2 * m_max + 1));
  quad::gauss_legendre(15);
  kernels::map_indices(by_offset, [&taper, &cfg, junction](size_t idx) {
    const int k = static_cast<int>(idx);
    const auto integrand = [&taper, k](double theta) {
      return taper.value(theta) * std::exp(complexd(0.0, k * theta)) / kTwoPi;
    };
    quad::QuadratureConfig main_cfg = cfg;
    main_cfg.min_panels = std::max(cfg.min_panels, k + 2);
    auto total = quad::integrate(integrand, -kPi, junction, main_cfg).value;
    quad::QuadratureConfig tail_cfg = cfg;
    tail_cfg.min_panels = std::max(cfg.min_panels, 2);
    total += quad::integrate(integrand, junction, kPi, tail_cfg).value;
    return total;
  });

  OperatorMatrix A(trunc.dim(), BasisTag::rotator(0.0));
  kernels::fill(A, [&by_offset](int i, int j) {
    const int k = j - i;
    return k >= 0 ? by_offset[static_cast<size_t>(k)] : std::conj(by_offset[static_cast<size_t>(-k)]);
  });
  return A;
}

double commutator_identity_check(const RotatorTruncation& trunc) {
  const OperatorMatrix theta = theta_matrix(trunc, AlphaExtension(0.0));
  double worst = 0.0;
  for (int m = -trunc.m_max; m <= trunc.m_max; ++m) {
    for (int mp = -trunc.m_max; mp <= trunc.m_max; ++mp) {
      const complexd lhs = static_cast<double>(m - mp) * theta(trunc.index(m), trunc.index(mp));
      const complexd delta = (m == mp) ? complexd(1.0, 0.0) : complexd(0.0, 0.0);
      const complexd rhs = complexd(0.0, -1.0) * (delta - std::exp(complexd(0.0, (mp - m) * kPi)));
      worst = std::max(worst, std::abs(lhs - rhs));
    }
  }
  return worst;
}

double abs_theta_entry(int k) {
  if (k == 0) return kPi / 2.0;
  const double num = (k % 2 == 0) ? 0.0 : -2.0;  // (-1)^k - 1
  return num / (kPi * static_cast<double>(k) * k);
}

OperatorMatrix abs_theta_matrix(const RotatorTruncation& trunc) {
  OperatorMatrix A(trunc.dim(), BasisTag::rotator(0.0));
  kernels::fill(A, [](int i, int j) { return complexd(abs_theta_entry(j - i), 0.0); });
  return A;
}

ParityDecomposition parity_decompose(const OperatorMatrix& A, double tol) {
  if (A.dim() % 2 == 0 || A.dim() < 3)
    throw RangeError("parity_decompose: needs a symmetric index range -m_max..m_max with m_max >= 1, got dim " +
                     std::to_string(A.dim()));
  const int m_max = (A.dim() - 1) / 2;
  const int c = m_max;
  const double r2 = std::sqrt(2.0);

  ParityDecomposition out{OperatorMatrix(m_max + 1, A.basis_tag()), OperatorMatrix(m_max, A.basis_tag()), 0.0};

  auto& even = out.even_block;
  even(0, 0) = A(c, c);
  for (int j = 1; j <= m_max; ++j) {
    even(0, j) = (A(c, c + j) + A(c, c - j)) / r2;
    even(j, 0) = (A(c + j, c) + A(c - j, c)) / r2;
  }
  for (int i = 1; i <= m_max; ++i)
    for (int j = 1; j <= m_max; ++j)
      even(i, j) = (A(c + i, c + j) + A(c + i, c - j) + A(c - i, c + j) + A(c - i, c - j)) / 2.0;

  auto& odd = out.odd_block;
  for (int i = 1; i <= m_max; ++i)
    for (int j = 1; j <= m_max; ++j)
      odd(i - 1, j - 1) = (A(c + i, c + j) - A(c + i, c - j) - A(c - i, c + j) + A(c - i, c - j)) / 2.0;

  double cross = 0.0;
  for (int j = 1; j <= m_max; ++j) {
    cross = std::max(cross, std::abs((A(c, c + j) - A(c, c - j)) / r2));
    cross = std::max(cross, std::abs((A(c + j, c) - A(c - j, c)) / r2));
  }
  for (int i = 1; i <= m_max; ++i)
    for (int j = 1; j <= m_max; ++j) {
      cross = std::max(cross,
                       std::abs((A(c + i, c + j) - A(c + i, c - j) + A(c - i, c + j) - A(c - i, c - j)) / 2.0));
      cross = std::max(cross,
                       std::abs((A(c + i, c + j) + A(c + i, c - j) - A(c - i, c + j) - A(c - i, c - j)) / 2.0));
    }
  out.cross_norm = cross;
  if (cross > tol)
    throw ToleranceError("parity cross block norm " + std::to_string(cross) + " exceeds " + std::to_string(tol));
  return out;
}

}  // namespace phasekit::rotator
