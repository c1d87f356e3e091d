#include "lkde/series_solver.hpp"

#include "lkde/error.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace lkde {
namespace {

constexpr double coefficient_envelope = 8.0;

double series_at(const EmpiricalTransforms& tr, double r, double t,
                 std::size_t N, double x)
{
  const double one_minus_r = 1.0 - r;
  const double linear = r + one_minus_r * x;
  const double pref = 4.0 / (1.0 + r);
  double f = 2.0 / (1.0 + r) * tr.c0[0] * linear;
  for (std::size_t n = 1; n <= N; ++n) {
    const double k = mode_wavenumber(n);
    const double decay = std::exp(-0.5 * k * k * t);
    const double c = std::cos(k * x);
    const double s = std::sin(k * x);
    const double cn = tr.c0[n];
    f += pref * decay *
         (cn * linear * c - k * t * one_minus_r * cn * s +
          (tr.s0[n] - one_minus_r * tr.s1[n]) * s);
  }
  return f;
}

std::size_t required_modes(const EmpiricalTransforms& tr,
                           const SeriesConfig& cfg, TimeParam t)
{
  cfg.truncation.validate();
  if (tr.mode_count() == 0)
    throw Error(ErrorKind::invalid_input, "empty transform set");
  const std::size_t N = truncation_bound(t, cfg.truncation.tol);
  if (N > cfg.truncation.max_terms)
    throw Error(ErrorKind::truncation_failure,
                "series needs " + std::to_string(N) +
                  " modes, above max_terms");
  if (N > tr.max_mode())
    throw Error(ErrorKind::truncation_failure,
                "series needs " + std::to_string(N) + " modes but only " +
                  std::to_string(tr.max_mode()) + " are available");
  return N;
}

// Moments C_j = int_0^1 x^j cos(kx) dx and S_j = int_0^1 x^j sin(kx) dx at
// k = 2 pi n, n >= 1, where cos k = 1 and sin k = 0 exactly.
void integer_mode_moments(double k, std::size_t degree, std::vector<double>& C,
                          std::vector<double>& S)
{
  C.assign(degree + 1, 0.0);
  S.assign(degree + 1, 0.0);
  for (std::size_t j = 1; j <= degree; ++j) {
    const double jk = static_cast<double>(j) / k;
    C[j] = -jk * S[j - 1];
    S[j] = -1.0 / k + jk * C[j - 1];
  }
}

} // namespace

double mode_wavenumber(std::size_t n)
{
  return 2.0 * std::numbers::pi * static_cast<double>(n);
}

EmpiricalTransforms empirical_transforms(const SampleSet& samples,
                                         std::size_t N)
{
  const auto xs = samples.values();
  const double inv_n = 1.0 / static_cast<double>(xs.size());
  EmpiricalTransforms tr;
  tr.c0.assign(N + 1, 0.0);
  tr.s0.assign(N + 1, 0.0);
  tr.s1.assign(N + 1, 0.0);
  tr.n_samples = xs.size();

  const auto modes = static_cast<std::ptrdiff_t>(N + 1);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t n = 0; n < modes; ++n) {
    const double k = mode_wavenumber(static_cast<std::size_t>(n));
    double c = 0.0, s = 0.0, xsn = 0.0;
    for (double x : xs) {
      const double sn = std::sin(k * x);
      c += std::cos(k * x);
      s += sn;
      xsn += x * sn;
    }
    tr.c0[n] = c * inv_n;
    tr.s0[n] = s * inv_n;
    tr.s1[n] = xsn * inv_n;
  }
  return tr;
}

EmpiricalTransforms transforms_from_supplier(const CoefficientSupplier& supply,
                                             std::size_t N)
{
  EmpiricalTransforms tr;
  tr.c0.resize(N + 1);
  tr.s0.resize(N + 1);
  tr.s1.resize(N + 1);
  for (std::size_t n = 0; n <= N; ++n) {
    const ModeCoefficients m = supply(n);
    tr.c0[n] = m.c0;
    tr.s0[n] = m.s0;
    tr.s1[n] = m.s1;
  }
  return tr;
}

EmpiricalTransforms polynomial_transforms(std::span<const double> coeffs,
                                          std::size_t N)
{
  if (coeffs.empty())
    throw Error(ErrorKind::invalid_input, "polynomial has no coefficients");
  const std::size_t degree = coeffs.size() - 1;
  std::vector<double> C, S;
  return transforms_from_supplier(
    [&](std::size_t n) {
      ModeCoefficients m;
      if (n == 0) {
        for (std::size_t j = 0; j <= degree; ++j)
          m.c0 += coeffs[j] / static_cast<double>(j + 1);
        return m;
      }
      integer_mode_moments(mode_wavenumber(n), degree + 1, C, S);
      for (std::size_t j = 0; j <= degree; ++j) {
        m.c0 += coeffs[j] * C[j];
        m.s0 += coeffs[j] * S[j];
        m.s1 += coeffs[j] * S[j + 1];
      }
      return m;
    },
    N);
}

std::size_t truncation_bound(TimeParam t, double tol)
{
  if (!(tol > 0.0 && tol < 1.0))
    throw Error(ErrorKind::invalid_parameter, "tolerance must lie in (0, 1)");
  const double tv = t.value();
  for (std::size_t N = 0;; ++N) {
    const double k = mode_wavenumber(N);
    if ((1.0 + k * tv) * std::exp(-0.5 * k * k * tv) * coefficient_envelope <
        tol)
      return N;
  }
}

double eval_series_solution(const EmpiricalTransforms& tr,
                            const SeriesConfig& cfg, TimeParam t, double x)
{
  const std::size_t N = required_modes(tr, cfg, t);
  return series_at(tr, cfg.r.value(), t.value(), N, x);
}

GridDensity eval_series_on_grid(const EmpiricalTransforms& tr,
                                const SeriesConfig& cfg, TimeParam t,
                                const EvaluationGrid& grid)
{
  const std::size_t N = required_modes(tr, cfg, t);
  GridDensity out{grid, std::vector<double>(grid.size()), cfg.r.value(),
                  t.value()};
  const auto xs = grid.points();
  const auto count = static_cast<std::ptrdiff_t>(xs.size());
  const double r = cfg.r.value();
  const double tv = t.value();
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < count; ++i)
    out.values[i] = series_at(tr, r, tv, N, xs[i]);
  return out;
}

GridDensity eval_series_on_grid_serial(const EmpiricalTransforms& tr,
                                       const SeriesConfig& cfg, TimeParam t,
                                       const EvaluationGrid& grid)
{
  const std::size_t N = required_modes(tr, cfg, t);
  GridDensity out{grid, std::vector<double>(grid.size()), cfg.r.value(),
                  t.value()};
  const auto xs = grid.points();
  for (std::size_t i = 0; i < xs.size(); ++i)
    out.values[i] = series_at(tr, cfg.r.value(), t.value(), N, xs[i]);
  return out;
}

GridDensity series_density(const SampleSet& samples, const SeriesConfig& cfg,
                           TimeParam t, const EvaluationGrid& grid)
{
  const std::size_t N = truncation_bound(t, cfg.truncation.tol);
  return eval_series_on_grid(empirical_transforms(samples, N), cfg, t, grid);
}

} // namespace lkde
