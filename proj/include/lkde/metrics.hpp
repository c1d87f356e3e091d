#pragma once

#include "lkde/types.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>

namespace lkde {

struct ErrorReport
{
  double l2 = 0.0;   // sqrt of the trapezoid integral of the squared error
  double linf = 0.0; // max abs error over the grid points
  std::size_t n = 0;
  std::string method;
  std::uint64_t seed = 0;

  double ise() const { return l2 * l2; }
};

ErrorReport error_metrics(const GridDensity& estimate,
                          std::span<const double> truth);

//! Least-squares slope of log(error) against log(n).
double rate_fit(std::span<const double> ns, std::span<const double> errors);

} // namespace lkde
