#include "lkde/experiment.hpp"

#include "lkde/baselines.hpp"
#include "lkde/binned_solver.hpp"
#include "lkde/error.hpp"
#include "lkde/metrics.hpp"
#include "lkde/series_solver.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>

namespace lkde {
namespace {

struct ReplicateResult
{
  double ise = 0.0;
  double linf = 0.0;
  double t = 0.0;
};

bool is_linked(Method m)
{
  return m == Method::linked || m == Method::linked_estimated ||
         m == Method::binned;
}

BoundaryRatio method_ratio(Method method, const SyntheticTarget& target,
                           const SampleSet& samples)
{
  if (method == Method::linked_estimated) {
    try {
      return estimate_r(samples);
    } catch (const EstimationFailure&) {
      return BoundaryRatio(1.0);
    }
  }
  return BoundaryRatio(target.info.r_true);
}

TimeParam oracle_time(const SyntheticTarget& target, Method method,
                      std::size_t n)
{
  if (method == Method::cosine)
    return oracle_cosine_bandwidth(n, target.info);
  if (method == Method::gaussian) {
    TargetDensityInfo whole_line = target.info;
    whole_line.fprime0 = whole_line.fprime1 = 0.0;
    return oracle_amise_bandwidth(n, whole_line).t;
  }
  return oracle_amise_bandwidth(n, target.info).t;
}

} // namespace

const char* to_string(Method m) noexcept
{
  switch (m) {
    case Method::linked: return "linked";
    case Method::linked_estimated: return "linked_est";
    case Method::binned: return "binned";
    case Method::cosine: return "cosine";
    case Method::gaussian: return "gaussian";
  }
  return "unknown";
}

Method parse_method(const std::string& name)
{
  for (Method m : {Method::linked, Method::linked_estimated, Method::binned,
                   Method::cosine, Method::gaussian})
    if (name == to_string(m))
      return m;
  throw Error(ErrorKind::invalid_input, "unknown method '" + name + "'");
}

const char* to_string(BandwidthChoice b) noexcept
{
  switch (b) {
    case BandwidthChoice::oracle: return "oracle";
    case BandwidthChoice::silverman: return "silverman";
    case BandwidthChoice::lscv: return "lscv";
  }
  return "unknown";
}

BandwidthChoice parse_bandwidth_choice(const std::string& name)
{
  for (BandwidthChoice b : {BandwidthChoice::oracle, BandwidthChoice::silverman,
                            BandwidthChoice::lscv})
    if (name == to_string(b))
      return b;
  throw Error(ErrorKind::invalid_input, "unknown bandwidth rule '" + name + "'");
}

TimeParam select_time(const SyntheticTarget& target, Method method,
                      BandwidthChoice bandwidth, const SampleSet& samples)
{
  switch (bandwidth) {
    case BandwidthChoice::oracle:
      try {
        return oracle_time(target, method, samples.size());
      } catch (const Error& e) {
        // Targets that are stationary for the estimator (flat, or affine
        // and compatible) have no finite AMISE optimum.
        if (e.kind() != ErrorKind::no_finite_optimum)
          throw;
        return silverman_bandwidth(samples).t;
      }
    case BandwidthChoice::silverman:
      return silverman_bandwidth(samples).t;
    case BandwidthChoice::lscv:
      if (!is_linked(method))
        throw Error(ErrorKind::unsupported,
                    "LSCV is implemented for the linked estimators only");
      return lscv_bandwidth(samples, method_ratio(method, target, samples),
                            log_time_grid(1e-4, 1.0, 30))
        .t;
  }
  throw Error(ErrorKind::internal_error, "unhandled bandwidth choice");
}

GridDensity run_method(Method method, const SyntheticTarget& target,
                       const SampleSet& samples, TimeParam t,
                       const EvaluationGrid& grid, const MiseOptions& options)
{
  switch (method) {
    case Method::linked:
    case Method::linked_estimated: {
      const SeriesConfig cfg{method_ratio(method, target, samples), {}};
      return series_density(samples, cfg, t, grid);
    }
    case Method::binned: {
      const BinnedDensity u0 = bin_samples(
        samples, options.bins, method_ratio(method, target, samples));
      return backward_euler_evolve(u0, t).interpolate(grid);
    }
    case Method::cosine:
      return cosine_kde(samples, t, grid);
    case Method::gaussian:
      return gaussian_kde_baseline(samples, t, grid);
  }
  throw Error(ErrorKind::internal_error, "unhandled method");
}

std::vector<MiseRow> run_mise_experiment(const SyntheticTarget& target,
                                         Method method,
                                         const std::vector<std::size_t>& ns,
                                         std::size_t reps,
                                         BandwidthChoice bandwidth,
                                         std::uint64_t seed,
                                         const MiseOptions& options)
{
  if (reps < 1)
    throw Error(ErrorKind::invalid_parameter, "reps must be at least 1");
  const EvaluationGrid grid = EvaluationGrid::uniform(options.grid_points);
  std::vector<double> truth(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i)
    truth[i] = target.density(grid[i]);

  std::vector<MiseRow> rows;
  for (std::size_t n : ns) {
    std::vector<ReplicateResult> results(reps);
    const auto count = static_cast<std::ptrdiff_t>(reps);
    bool failed = false;
    Error first_error(ErrorKind::internal_error, "");
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t rep = 0; rep < count; ++rep) {
      try {
        const SampleSet samples =
          sample_synthetic(target, n, seed + static_cast<std::uint64_t>(rep));
        const TimeParam t = select_time(target, method, bandwidth, samples);
        const GridDensity est =
          run_method(method, target, samples, t, grid, options);
        const ErrorReport err = error_metrics(est, truth);
        results[rep] = ReplicateResult{err.ise(), err.linf, t.value()};
      } catch (const Error& e) {
#pragma omp critical
        {
          if (!failed) {
            failed = true;
            first_error = e;
          }
        }
      }
    }
    if (failed)
      throw first_error;

    MiseRow row;
    row.method = method;
    row.n = n;
    row.reps = reps;
    for (const auto& r : results) {
      row.mean_ise += r.ise;
      row.mean_l2 += std::sqrt(r.ise);
      row.mean_linf += r.linf;
      row.mean_t += r.t;
    }
    const double inv = 1.0 / static_cast<double>(reps);
    row.mean_ise *= inv;
    row.mean_l2 *= inv;
    row.mean_linf *= inv;
    row.mean_t *= inv;
    rows.push_back(row);
  }
  return rows;
}

void write_mise_csv(std::ostream& os, const std::vector<MiseRow>& rows)
{
  os << "method,n,reps,mean_ise,mean_l2,mean_linf,mean_t\n";
  os << std::setprecision(17);
  for (const auto& r : rows)
    os << to_string(r.method) << ',' << r.n << ',' << r.reps << ','
       << r.mean_ise << ',' << r.mean_l2 << ',' << r.mean_linf << ','
       << r.mean_t << '\n';
}

} // namespace lkde
