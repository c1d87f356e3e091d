#include "lkde/linked_kernel.hpp"

#include "lkde/error.hpp"

#include <cmath>

namespace lkde {
namespace {

void check_unit(double v, const char* name)
{
  if (!(v >= 0.0 && v <= 1.0))
    throw Error(ErrorKind::invalid_parameter,
                std::string(name) + " must lie in [0,1]");
}

double kernel_mean_at(double x, std::span<const double> ys, BoundaryRatio r,
                      TimeParam t, const SummationControl& ctl)
{
  double sum = 0.0;
  for (double y : ys)
    sum += eval_linked_kernel(r, x, y, t, ctl);
  return sum / static_cast<double>(ys.size());
}

GridDensity make_result(const EvaluationGrid& grid, BoundaryRatio r,
                        TimeParam t)
{
  return GridDensity{grid, std::vector<double>(grid.size(), 0.0), r.value(),
                     t.value()};
}

} // namespace

double eval_linked_kernel(BoundaryRatio r, double x, double y, TimeParam t,
                          const SummationControl& ctl)
{
  check_unit(x, "x");
  check_unit(y, "y");
  const KernelValue diff = eval_K1_pair(x - y, t, ctl);
  const double c = r.skew();
  if (c == 0.0)
    return diff.value;
  const KernelValue sum = eval_K1_pair(x + y, t, ctl);
  return diff.value * (1.0 + (x - y) * c) + sum.value * (x + y - 1.0) * c +
         t.value() * c * (sum.dx + diff.dx);
}

GridDensity estimate_density(const SampleSet& samples, BoundaryRatio r,
                             TimeParam t, const EvaluationGrid& grid,
                             const SummationControl& ctl)
{
  ctl.validate();
  GridDensity out = make_result(grid, r, t);
  const auto ys = samples.values();
  const auto xs = grid.points();
  const auto count = static_cast<std::ptrdiff_t>(xs.size());

#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < count; ++i)
    out.values[i] = kernel_mean_at(xs[i], ys, r, t, ctl);

  return out;
}

GridDensity estimate_density_serial(const SampleSet& samples, BoundaryRatio r,
                                    TimeParam t, const EvaluationGrid& grid,
                                    const SummationControl& ctl)
{
  ctl.validate();
  GridDensity out = make_result(grid, r, t);
  const auto ys = samples.values();
  const auto xs = grid.points();
  for (std::size_t i = 0; i < xs.size(); ++i)
    out.values[i] = kernel_mean_at(xs[i], ys, r, t, ctl);
  return out;
}

AffineDensity stationary_density(BoundaryRatio r, double mass)
{
  const double rv = r.value();
  const double scale = mass * 2.0 / (1.0 + rv);
  return AffineDensity{scale * rv, scale * (1.0 - rv)};
}

} // namespace lkde
