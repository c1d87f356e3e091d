#include "lkde/baselines.hpp"

#include "lkde/error.hpp"

#include <cmath>
#include <numbers>

namespace lkde {

GridDensity gaussian_kde_baseline(const SampleSet& samples, TimeParam t,
                                  const EvaluationGrid& grid)
{
  const auto ys = samples.values();
  const auto xs = grid.points();
  const double sd = t.bandwidth();
  const double norm =
    1.0 / (static_cast<double>(ys.size()) * sd * std::sqrt(2.0 * std::numbers::pi));
  GridDensity out{grid, std::vector<double>(xs.size()), 1.0, t.value()};
  const auto count = static_cast<std::ptrdiff_t>(xs.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    double s = 0.0;
    for (double y : ys) {
      const double z = (xs[i] - y) / sd;
      s += std::exp(-0.5 * z * z);
    }
    out.values[i] = norm * s;
  }
  return out;
}

GridDensity cosine_kde(const SampleSet& samples, TimeParam t,
                       const EvaluationGrid& grid, const SummationControl& ctl)
{
  ctl.validate();
  const double tv = t.value();
  const double pi = std::numbers::pi;

  // Modes 1..K with e^{-k^2 pi^2 t / 2} >= tol.
  std::size_t K = 0;
  while (std::exp(-0.5 * std::pow((K + 1) * pi, 2) * tv) >= ctl.tol) {
    if (++K > ctl.max_terms)
      throw Error(ErrorKind::truncation_failure,
                  "cosine estimator needs more than max_terms modes");
  }

  const auto ys = samples.values();
  const double inv_n = 1.0 / static_cast<double>(ys.size());
  std::vector<double> weight(K + 1, 0.0);
  const auto modes = static_cast<std::ptrdiff_t>(K);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 1; k <= modes; ++k) {
    const double kp = static_cast<double>(k) * pi;
    double a = 0.0;
    for (double y : ys)
      a += std::cos(kp * y);
    weight[k] = 2.0 * a * inv_n * std::exp(-0.5 * kp * kp * tv);
  }

  const auto xs = grid.points();
  GridDensity out{grid, std::vector<double>(xs.size()), 1.0, tv};
  const auto count = static_cast<std::ptrdiff_t>(xs.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    double f = 1.0;
    for (std::size_t k = 1; k <= K; ++k)
      f += weight[k] * std::cos(static_cast<double>(k) * pi * xs[i]);
    out.values[i] = f;
  }
  return out;
}

} // namespace lkde
