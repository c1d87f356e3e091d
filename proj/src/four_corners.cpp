#include "lkde/four_corners.hpp"

#include "lkde/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace lkde {

FourCornersMatrix build_four_corners(std::size_t m, BoundaryRatio r)
{
  if (m < 2)
    throw Error(ErrorKind::invalid_parameter,
                "four-corners matrix needs m >= 2, got " + std::to_string(m));
  const double rv = r.value();
  FourCornersMatrix A;
  A.m = m;
  A.r = rv;
  A.sub.assign(m - 1, -1.0);
  A.super.assign(m - 1, -1.0);
  A.diag.assign(m, 2.0);
  A.w.assign(m, 0.0);
  A.w.front() = -rv / (rv + 1.0);
  A.w.back() += -1.0 / (rv + 1.0);
  return A;
}

double FourCornersMatrix::operator()(std::size_t i, std::size_t j) const
{
  double v = 0.0;
  if (i == j)
    v = diag[i];
  else if (j + 1 == i)
    v = sub[j];
  else if (i + 1 == j)
    v = super[i];
  if (j == 0 || j == m - 1)
    v += w[i];
  return v;
}

Eigen::MatrixXd FourCornersMatrix::dense() const
{
  Eigen::MatrixXd out(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      out(i, j) = (*this)(i, j);
  return out;
}

double FourCornersMatrix::trace() const
{
  double t = 0.0;
  for (std::size_t i = 0; i < m; ++i)
    t += (*this)(i, i);
  return t;
}

void FourCornersMatrix::apply(std::span<const double> u,
                              std::span<double> out) const
{
  const double corner = u[0] + u[m - 1];
  for (std::size_t i = 0; i < m; ++i) {
    double v = diag[i] * u[i] + w[i] * corner;
    if (i > 0)
      v += sub[i - 1] * u[i - 1];
    if (i + 1 < m)
      v += super[i] * u[i + 1];
    out[i] = v;
  }
}

GhostValues ghost_values(double u1, double um, BoundaryRatio r)
{
  const double rv = r.value();
  const double s = u1 + um;
  const double right = s / (rv + 1.0);
  return GhostValues{rv * right, right};
}

ShiftedFourCornersSolver::ShiftedFourCornersSolver(const FourCornersMatrix& A,
                                                   double scale)
{
  if (!(scale > 0.0 && std::isfinite(scale)))
    throw Error(ErrorKind::invalid_parameter, "solver scale must be positive");
  const std::size_t m = A.m;
  // Interior of T is Toeplitz; the factorization only needs one off value.
  off_ = -scale;
  c_prime_.resize(m);
  pivot_inv_.resize(m);
  double prev_c = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double pivot = 1.0 + scale * A.diag[i] - (i > 0 ? off_ * prev_c : 0.0);
    pivot_inv_[i] = 1.0 / pivot;
    prev_c = off_ * pivot_inv_[i];
    c_prime_[i] = prev_c;
  }

  std::vector<double> sw(m);
  for (std::size_t i = 0; i < m; ++i)
    sw[i] = scale * A.w[i];
  correction_.resize(m);
  tridiagonal_solve(sw, correction_);
  sm_denominator_ = 1.0 + correction_.front() + correction_.back();
  if (!(std::abs(sm_denominator_) > 1e-14))
    throw Error(ErrorKind::internal_error,
                "singular Sherman-Morrison denominator");
}

void ShiftedFourCornersSolver::tridiagonal_solve(std::span<const double> rhs,
                                                 std::span<double> x) const
{
  const std::size_t m = pivot_inv_.size();
  x[0] = rhs[0] * pivot_inv_[0];
  for (std::size_t i = 1; i < m; ++i)
    x[i] = (rhs[i] - off_ * x[i - 1]) * pivot_inv_[i];
  for (std::size_t i = m - 1; i > 0; --i)
    x[i - 1] -= c_prime_[i - 1] * x[i];
}

void ShiftedFourCornersSolver::solve(std::span<const double> rhs,
                                     std::span<double> x) const
{
  tridiagonal_solve(rhs, x);
  const double gamma = (x.front() + x.back()) / sm_denominator_;
  for (std::size_t i = 0; i < x.size(); ++i)
    x[i] -= gamma * correction_[i];
}

SpectralData spectral_data(std::size_t m, BoundaryRatio r)
{
  if (m < 2)
    throw Error(ErrorKind::invalid_parameter, "spectral data needs m >= 2");
  const double rv = r.value();
  if (rv == 1.0)
    throw Error(ErrorKind::unsupported,
                "closed-form spectral data requires r != 1; use the "
                "symmetric eigensolver");

  constexpr double two_pi = 2.0 * std::numbers::pi;
  const std::size_t first = (m - 1) / 2;
  const double md = static_cast<double>(m);

  SpectralData sd;
  sd.m = m;
  sd.r = rv;
  sd.angles.resize(m);
  sd.eigenvalues.resize(m);
  sd.classes.resize(m);
  sd.eigenvectors.resize(m, m);
  sd.stationary.resize(m);
  sd.zero_index = first;

  const double slope = (1.0 - rv) / (1.0 + rv * md);
  for (std::size_t j = 0; j < m; ++j)
    sd.stationary[j] = 1.0 + slope * static_cast<double>(j);

  for (std::size_t k = 1; k <= m; ++k) {
    const std::size_t col = k - 1;
    double theta;
    if (k <= first) {
      theta = static_cast<double>(k) * two_pi / md;
      sd.classes[col] = SpectralClass::skew;
      for (std::size_t j = 1; j <= m; ++j) {
        const double jd = static_cast<double>(j);
        sd.eigenvectors(j - 1, col) =
          rv * std::sin((jd - 1.0) * theta) - std::sin(jd * theta);
      }
    } else if (k == first + 1) {
      theta = 0.0;
      sd.classes[col] = SpectralClass::stationary;
      for (std::size_t j = 0; j < m; ++j)
        sd.eigenvectors(j, col) = sd.stationary[j];
    } else {
      theta = static_cast<double>(k - first - 1) * two_pi / (md + 1.0);
      sd.classes[col] = SpectralClass::sine;
      for (std::size_t j = 1; j <= m; ++j)
        sd.eigenvectors(j - 1, col) = std::sin(static_cast<double>(j) * theta);
    }
    sd.angles[col] = theta;
    sd.eigenvalues[col] = 2.0 - 2.0 * std::cos(theta);
  }
  return sd;
}

double SpectralData::max_residual(const FourCornersMatrix& A) const
{
  std::vector<double> v(m), Av(m);
  double worst = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    double vmax = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      v[j] = eigenvectors(j, k);
      vmax = std::max(vmax, std::abs(v[j]));
    }
    A.apply(v, Av);
    double res = 0.0;
    for (std::size_t j = 0; j < m; ++j)
      res = std::max(res, std::abs(Av[j] - eigenvalues[k] * v[j]));
    worst = std::max(worst, res / vmax);
  }
  return worst;
}

} // namespace lkde
