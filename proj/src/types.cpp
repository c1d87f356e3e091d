#include "lkde/types.hpp"

#include "lkde/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace lkde {

const char* to_string(ErrorKind kind) noexcept
{
  switch (kind) {
    case ErrorKind::invalid_parameter: return "invalid-parameter";
    case ErrorKind::invalid_input: return "invalid-input";
    case ErrorKind::truncation_failure: return "truncation-failure";
    case ErrorKind::degenerate_sample: return "degenerate-sample";
    case ErrorKind::no_finite_optimum: return "no-finite-optimum";
    case ErrorKind::estimation_failure: return "estimation-failure";
    case ErrorKind::unsupported: return "unsupported";
    case ErrorKind::invalid_target: return "invalid-target";
    case ErrorKind::internal_error: return "internal-error";
  }
  return "unknown";
}

bool Error::is_input_error() const noexcept
{
  switch (kind_) {
    case ErrorKind::invalid_parameter:
    case ErrorKind::invalid_input:
    case ErrorKind::degenerate_sample:
    case ErrorKind::invalid_target:
    case ErrorKind::unsupported:
      return true;
    default:
      return false;
  }
}

TimeParam::TimeParam(double t)
  : t_(t)
{
  if (!(std::isfinite(t) && t > 0.0))
    throw Error(ErrorKind::invalid_parameter,
                "diffusion time must be finite and positive, got " +
                  std::to_string(t));
}

double TimeParam::bandwidth() const noexcept
{
  return std::sqrt(t_);
}

BoundaryRatio::BoundaryRatio(double r)
  : r_(r)
{
  if (!(std::isfinite(r) && r >= 0.0))
    throw Error(ErrorKind::invalid_parameter,
                "boundary ratio must be finite and non-negative, got " +
                  std::to_string(r));
}

void SummationControl::validate() const
{
  if (!(tol > 0.0 && tol < 1.0))
    throw Error(ErrorKind::invalid_parameter, "tolerance must lie in (0, 1)");
  if (max_terms < 1)
    throw Error(ErrorKind::invalid_parameter, "max_terms must be at least 1");
}

SampleSet::SampleSet(std::vector<double> values)
  : values_(std::move(values))
{
  if (values_.empty())
    throw Error(ErrorKind::invalid_input, "sample set is empty");
  for (double v : values_) {
    if (!(v >= 0.0 && v <= 1.0))
      throw Error(ErrorKind::invalid_input,
                  "sample outside [0,1]: " + std::to_string(v));
  }
}

EvaluationGrid::EvaluationGrid(std::vector<double> points)
  : points_(std::move(points))
{
  if (points_.empty())
    throw Error(ErrorKind::invalid_input, "evaluation grid is empty");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    double p = points_[i];
    if (!(p >= 0.0 && p <= 1.0))
      throw Error(ErrorKind::invalid_input, "grid point outside [0,1]");
    if (i > 0 && !(p > points_[i - 1]))
      throw Error(ErrorKind::invalid_input,
                  "grid points must be strictly increasing");
  }
}

EvaluationGrid EvaluationGrid::uniform(std::size_t count)
{
  if (count < 2)
    throw Error(ErrorKind::invalid_parameter,
                "uniform grid needs at least 2 points");
  std::vector<double> pts(count);
  const double denom = static_cast<double>(count - 1);
  for (std::size_t l = 0; l < count; ++l)
    pts[l] = static_cast<double>(l) / denom;
  EvaluationGrid grid(std::move(pts));
  grid.spacing_ = 1.0 / denom;
  return grid;
}

bool EvaluationGrid::spans_unit_interval() const noexcept
{
  return points_.front() == 0.0 && points_.back() == 1.0;
}

double trapezoid(std::span<const double> x, std::span<const double> y)
{
  if (x.size() != y.size())
    throw Error(ErrorKind::invalid_input, "trapezoid: length mismatch");
  double sum = 0.0;
  for (std::size_t i = 1; i < x.size(); ++i)
    sum += 0.5 * (x[i] - x[i - 1]) * (y[i] + y[i - 1]);
  return sum;
}

double GridDensity::mass() const
{
  return trapezoid(grid.points(), values);
}

double GridDensity::min_value() const
{
  return *std::min_element(values.begin(), values.end());
}

double GridDensity::max_abs() const
{
  double m = 0.0;
  for (double v : values)
    m = std::max(m, std::abs(v));
  return m;
}

} // namespace lkde
