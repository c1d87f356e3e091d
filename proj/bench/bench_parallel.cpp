// Serial reference vs OpenMP kernels.
//
//   lkde_bench [n_samples] [grid_points]

#include "lkde/linked_kernel.hpp"
#include "lkde/series_solver.hpp"
#include "lkde/synthetic.hpp"

#include <omp.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace {

double max_diff(const lkde::GridDensity& a, const lkde::GridDensity& b)
{
  double d = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i)
    d = std::fmax(d, std::fabs(a.values[i] - b.values[i]));
  return d;
}

template <class F>
double time_it(F&& f, int reps)
{
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    const double t0 = omp_get_wtime();
    f();
    best = std::fmin(best, omp_get_wtime() - t0);
  }
  return best;
}

} // namespace

int main(int argc, char** argv)
{
  const std::size_t n = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 2000;
  const std::size_t points = argc > 2 ? std::strtoul(argv[2], nullptr, 10) : 1001;

  const auto target = lkde::beta_mixture_target(2.0);
  const lkde::SampleSet samples = lkde::sample_synthetic(target, n, 42);
  const lkde::BoundaryRatio r(0.5);
  const lkde::TimeParam t(2e-3);
  const auto grid = lkde::EvaluationGrid::uniform(points);
  const lkde::SeriesConfig cfg{r, {}};
  const auto tr = lkde::empirical_transforms(
    samples, lkde::truncation_bound(t, cfg.truncation.tol));

  std::printf("n = %zu, grid = %zu, threads = %d\n", n, points,
              omp_get_max_threads());
  std::printf("%-22s %12s %12s %8s %12s\n", "kernel", "serial [s]",
              "openmp [s]", "speedup", "max |diff|");

  lkde::GridDensity ks = lkde::estimate_density_serial(samples, r, t, grid);
  lkde::GridDensity kp = lkde::estimate_density(samples, r, t, grid);
  const double k_serial =
    time_it([&] { ks = lkde::estimate_density_serial(samples, r, t, grid); }, 3);
  const double k_parallel =
    time_it([&] { kp = lkde::estimate_density(samples, r, t, grid); }, 3);
  std::printf("%-22s %12.4f %12.4f %8.2f %12.3g\n", "kernel sum", k_serial,
              k_parallel, k_serial / k_parallel, max_diff(ks, kp));

  lkde::GridDensity ss = lkde::eval_series_on_grid_serial(tr, cfg, t, grid);
  lkde::GridDensity sp = lkde::eval_series_on_grid(tr, cfg, t, grid);
  const double s_serial =
    time_it([&] { ss = lkde::eval_series_on_grid_serial(tr, cfg, t, grid); }, 5);
  const double s_parallel =
    time_it([&] { sp = lkde::eval_series_on_grid(tr, cfg, t, grid); }, 5);
  std::printf("%-22s %12.4f %12.4f %8.2f %12.3g\n", "series on grid", s_serial,
              s_parallel, s_serial / s_parallel, max_diff(ss, sp));

  std::printf("%-22s %12s %12s %8s %12.3g\n", "kernel vs series", "", "", "",
              max_diff(ks, ss));
  return 0;
}
