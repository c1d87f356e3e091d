#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace lkde {

//! Diffusion time t, the squared bandwidth. Always finite and positive.
class TimeParam
{
public:
  explicit TimeParam(double t);
  double value() const noexcept { return t_; }
  double bandwidth() const noexcept;

private:
  double t_;
};

//! Ratio r in the linked boundary condition f(0) = r f(1); finite, r >= 0.
class BoundaryRatio
{
public:
  explicit BoundaryRatio(double r);
  double value() const noexcept { return r_; }
  //! (1 - r) / (1 + r), the weight of the non-periodic kernel terms.
  double skew() const noexcept { return (1.0 - r_) / (1.0 + r_); }

private:
  double r_;
};

struct SummationControl
{
  double tol = 1e-14;
  std::size_t max_terms = 10000;

  void validate() const;
};

//! Validated observations on [0,1].
class SampleSet
{
public:
  explicit SampleSet(std::vector<double> values);

  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }

private:
  std::vector<double> values_;
};

//! Strictly increasing evaluation points inside [0,1].
class EvaluationGrid
{
public:
  explicit EvaluationGrid(std::vector<double> points);

  //! `count` equispaced points l/(count-1), l = 0..count-1.
  static EvaluationGrid uniform(std::size_t count = 1001);

  std::span<const double> points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  double operator[](std::size_t i) const { return points_[i]; }
  bool is_uniform() const noexcept { return spacing_ > 0.0; }
  //! Spacing of a uniform grid, zero otherwise.
  double spacing() const noexcept { return spacing_; }
  //! True when the grid starts at 0 and ends at 1.
  bool spans_unit_interval() const noexcept;

  bool operator==(const EvaluationGrid& other) const
  {
    return points_ == other.points_;
  }

private:
  std::vector<double> points_;
  double spacing_ = 0.0;
};

struct GridDensity
{
  EvaluationGrid grid;
  std::vector<double> values;
  double r = 1.0;
  double t = 0.0;

  //! Composite trapezoid integral of the values over the grid.
  double mass() const;
  double min_value() const;
  double max_abs() const;
};

//! Composite trapezoid rule for samples `y` taken at abscissae `x`.
double trapezoid(std::span<const double> x, std::span<const double> y);

} // namespace lkde
