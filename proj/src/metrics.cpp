#include "lkde/metrics.hpp"

#include "lkde/error.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace lkde {

ErrorReport error_metrics(const GridDensity& estimate,
                          std::span<const double> truth)
{
  if (truth.size() != estimate.values.size())
    throw Error(ErrorKind::invalid_input,
                "truth and estimate live on different grids");
  std::vector<double> sq(truth.size());
  ErrorReport rep;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    const double d = estimate.values[i] - truth[i];
    sq[i] = d * d;
    rep.linf = std::max(rep.linf, std::abs(d));
  }
  rep.l2 = std::sqrt(trapezoid(estimate.grid.points(), sq));
  return rep;
}

double rate_fit(std::span<const double> ns, std::span<const double> errors)
{
  if (ns.size() != errors.size() || ns.size() < 2)
    throw Error(ErrorKind::invalid_input,
                "rate fit needs two equal-length lists of at least 2 points");
  const double m = static_cast<double>(ns.size());
  double sx = 0.0, sy = 0.0;
  std::vector<double> lx(ns.size()), ly(ns.size());
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (!(ns[i] > 0.0) || !(errors[i] > 0.0))
      throw Error(ErrorKind::invalid_input, "rate fit needs positive entries");
    lx[i] = std::log(ns[i]);
    ly[i] = std::log(errors[i]);
    sx += lx[i];
    sy += ly[i];
  }
  const double mx = sx / m, my = sy / m;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  if (!(sxx > 0.0))
    throw Error(ErrorKind::invalid_input, "rate fit needs distinct n values");
  return sxy / sxx;
}

} // namespace lkde
