#include "lkde/bandwidth.hpp"

#include "lkde/error.hpp"
#include "lkde/linked_kernel.hpp"
#include "lkde/series_solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace lkde {
namespace {

const double sqrt_pi = std::sqrt(std::numbers::pi);
constexpr double lscv_series_tol = 1e-12;
constexpr std::size_t lscv_grid_points = 2001;

// Inverse of the empirical CDF: smallest order statistic with F_n >= p.
double empirical_quantile(std::span<const double> sorted, double p)
{
  const double n = static_cast<double>(sorted.size());
  auto idx = static_cast<std::size_t>(std::ceil(p * n));
  idx = std::clamp<std::size_t>(idx, 1, sorted.size());
  return sorted[idx - 1];
}

bool all_identical(std::span<const double> xs)
{
  return std::all_of(xs.begin(), xs.end(),
                     [&](double x) { return x == xs.front(); });
}

double lscv_with_transforms(const SampleSet& samples,
                            const EmpiricalTransforms& tr, BoundaryRatio r,
                            TimeParam t, const EvaluationGrid& grid)
{
  const SeriesConfig cfg{r, SummationControl{lscv_series_tol, 10000}};
  const GridDensity fhat = eval_series_on_grid_serial(tr, cfg, t, grid);
  std::vector<double> sq(fhat.values.size());
  for (std::size_t i = 0; i < sq.size(); ++i)
    sq[i] = fhat.values[i] * fhat.values[i];
  const double int_sq = trapezoid(grid.points(), sq);

  const auto xs = samples.values();
  const double n = static_cast<double>(xs.size());
  double loo_sum = 0.0;
  for (double x : xs) {
    const double full = eval_series_solution(tr, cfg, t, x);
    const double self = eval_linked_kernel(r, x, x, t);
    loo_sum += (n * full - self) / (n - 1.0);
  }
  return int_sq - 2.0 / n * loo_sum;
}

void check_lscv_samples(const SampleSet& samples)
{
  if (samples.size() < 3)
    throw Error(ErrorKind::invalid_input, "LSCV needs at least 3 samples");
  if (all_identical(samples.values()))
    throw Error(ErrorKind::degenerate_sample, "all samples are identical");
}

} // namespace

const char* to_string(BandwidthRule rule) noexcept
{
  switch (rule) {
    case BandwidthRule::silverman: return "silverman";
    case BandwidthRule::lscv: return "lscv";
    case BandwidthRule::oracle_matching: return "oracle_matching";
    case BandwidthRule::oracle_nonmatching: return "oracle_nonmatching";
    case BandwidthRule::fixed: return "fixed";
  }
  return "unknown";
}

BandwidthSelection silverman_bandwidth(const SampleSet& samples)
{
  const auto xs = samples.values();
  if (xs.size() < 2)
    throw Error(ErrorKind::invalid_input,
                "Silverman's rule needs at least 2 samples");
  const double n = static_cast<double>(xs.size());
  double mean = 0.0;
  for (double x : xs)
    mean += x;
  mean /= n;
  double ss = 0.0;
  for (double x : xs)
    ss += (x - mean) * (x - mean);
  const double sd = std::sqrt(ss / (n - 1.0));

  std::vector<double> sorted(xs.begin(), xs.end());
  std::sort(sorted.begin(), sorted.end());
  const double iqr =
    empirical_quantile(sorted, 0.75) - empirical_quantile(sorted, 0.25);

  // A zero IQR with nonzero sd (heavy ties) falls back to sd alone.
  const double sigma = iqr > 0.0 ? std::min(sd, iqr / 1.34) : sd;
  if (!(sigma > 0.0))
    throw Error(ErrorKind::degenerate_sample,
                "samples have zero spread; Silverman's rule is undefined");
  const double h = std::pow(4.0 / (3.0 * n), 0.2) * sigma;
  return BandwidthSelection{TimeParam(h * h), BandwidthRule::silverman, {}};
}

double lscv_objective(const SampleSet& samples, BoundaryRatio r, TimeParam t)
{
  check_lscv_samples(samples);
  const EmpiricalTransforms tr =
    empirical_transforms(samples, truncation_bound(t, lscv_series_tol));
  return lscv_with_transforms(samples, tr, r, t,
                              EvaluationGrid::uniform(lscv_grid_points));
}

BandwidthSelection lscv_bandwidth(const SampleSet& samples, BoundaryRatio r,
                                  std::span<const double> t_grid)
{
  if (t_grid.empty())
    throw Error(ErrorKind::invalid_input, "LSCV time grid is empty");
  check_lscv_samples(samples);
  std::vector<TimeParam> times;
  times.reserve(t_grid.size());
  for (double t : t_grid)
    times.emplace_back(t);

  double t_min = times.front().value();
  for (const TimeParam& t : times)
    t_min = std::min(t_min, t.value());
  const EmpiricalTransforms tr = empirical_transforms(
    samples, truncation_bound(TimeParam(t_min), lscv_series_tol));
  const EvaluationGrid grid = EvaluationGrid::uniform(lscv_grid_points);

  std::vector<double> objective(times.size());
  const auto count = static_cast<std::ptrdiff_t>(times.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i)
    objective[i] = lscv_with_transforms(samples, tr, r, times[i], grid);

  std::size_t best = 0;
  for (std::size_t i = 1; i < times.size(); ++i) {
    const bool lower = objective[i] < objective[best];
    const bool tie_larger =
      objective[i] == objective[best] && times[i].value() > times[best].value();
    if (lower || tie_larger)
      best = i;
  }

  BandwidthSelection sel{times[best], BandwidthRule::lscv, {}};
  sel.diagnostics.reserve(times.size());
  for (std::size_t i = 0; i < times.size(); ++i)
    sel.diagnostics.emplace_back(times[i].value(), objective[i]);
  return sel;
}

std::vector<double> log_time_grid(double lo, double hi, std::size_t count)
{
  if (!(lo > 0.0 && hi >= lo) || count == 0)
    throw Error(ErrorKind::invalid_parameter, "bad logarithmic grid bounds");
  std::vector<double> out(count);
  if (count == 1) {
    out[0] = lo;
    return out;
  }
  const double a = std::log(lo);
  const double b = std::log(hi);
  for (std::size_t i = 0; i < count; ++i)
    out[i] = std::exp(a + (b - a) * static_cast<double>(i) /
                            static_cast<double>(count - 1));
  out.back() = hi;
  return out;
}

double boundary_bias_constant(double r)
{
  return (4.0 - 2.0 * std::numbers::sqrt2) / sqrt_pi * (r * r + 1.0) /
         ((1.0 + r) * (1.0 + r));
}

BandwidthSelection oracle_amise_bandwidth(std::size_t n,
                                          const TargetDensityInfo& info)
{
  if (n < 1)
    throw Error(ErrorKind::invalid_parameter, "n must be positive");
  const double nd = static_cast<double>(n);
  const double gap = info.fprime_gap();
  if (gap == 0.0) {
    if (!(info.f_second_norm_sq > 0.0))
      throw Error(ErrorKind::no_finite_optimum,
                  "flat target: AMISE has no finite minimizer");
    const double t =
      std::pow(2.0 * nd * sqrt_pi * info.f_second_norm_sq, -0.4);
    return BandwidthSelection{TimeParam(t), BandwidthRule::oracle_matching, {}};
  }
  const double A = boundary_bias_constant(info.r_true);
  const double t = std::pow(2.0 * nd * sqrt_pi * A, -0.5) / std::abs(gap);
  return BandwidthSelection{TimeParam(t), BandwidthRule::oracle_nonmatching,
                            {}};
}

double amise_value(TimeParam t, std::size_t n, const TargetDensityInfo& info)
{
  const double tv = t.value();
  const double variance =
    1.0 / (2.0 * static_cast<double>(n) * std::sqrt(std::numbers::pi * tv));
  const double gap = info.fprime_gap();
  if (gap == 0.0)
    return variance + tv * tv * 0.25 * info.f_second_norm_sq;
  return variance + std::pow(tv, 1.5) * boundary_bias_constant(info.r_true) /
                      3.0 * gap * gap;
}

double amise_minimum(std::size_t n, const TargetDensityInfo& info)
{
  const double nd = static_cast<double>(n);
  const double pi = std::numbers::pi;
  const double gap = info.fprime_gap();
  if (gap == 0.0)
    return 5.0 * std::pow(info.f_second_norm_sq, 0.2) /
           (std::pow(2.0, 2.8) * std::pow(pi, 0.4)) * std::pow(nd, -0.8);
  return std::pow(2.0, 1.25) * std::sqrt(std::abs(gap)) /
         (3.0 * std::pow(pi, 0.375)) *
         std::pow(boundary_bias_constant(info.r_true), 0.25) *
         std::pow(nd, -0.75);
}

TimeParam oracle_cosine_bandwidth(std::size_t n, const TargetDensityInfo& info)
{
  const double nd = static_cast<double>(n);
  const double slopes =
    info.fprime0 * info.fprime0 + info.fprime1 * info.fprime1;
  if (slopes == 0.0) {
    if (!(info.f_second_norm_sq > 0.0))
      throw Error(ErrorKind::no_finite_optimum,
                  "flat target: AMISE has no finite minimizer");
    return TimeParam(std::pow(2.0 * nd * sqrt_pi * info.f_second_norm_sq, -0.4));
  }
  const double B = (4.0 - 2.0 * std::numbers::sqrt2) / sqrt_pi * slopes;
  return TimeParam(std::pow(2.0 * nd * sqrt_pi * B, -0.5));
}

BoundaryRatio estimate_r(const SampleSet& samples)
{
  const auto xs = samples.values();
  const double edge = 1.0 / std::sqrt(static_cast<double>(xs.size()));
  std::size_t left = 0, right = 0;
  for (double x : xs) {
    if (x < edge)
      ++left;
    if (x > 1.0 - edge)
      ++right;
  }
  if (right == 0)
    throw EstimationFailure(left, "no samples above 1 - n^{-1/2}; numerator " +
                                    std::to_string(left));
  return BoundaryRatio(static_cast<double>(left) / static_cast<double>(right));
}

} // namespace lkde
