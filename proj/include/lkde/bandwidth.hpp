#pragma once

#include "lkde/types.hpp"

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace lkde {

enum class BandwidthRule
{
  silverman,
  lscv,
  oracle_matching,
  oracle_nonmatching,
  fixed
};

const char* to_string(BandwidthRule rule) noexcept;

struct BandwidthSelection
{
  TimeParam t{1.0};
  BandwidthRule rule = BandwidthRule::fixed;
  //! (t, objective) pairs when the rule scans a grid.
  std::vector<std::pair<double, double>> diagnostics;
};

/// Smoothness summary of a known target density, for oracle bandwidths.
struct TargetDensityInfo
{
  double f_second_norm_sq = 0.0; // int_0^1 f''(x)^2 dx
  double fprime0 = 0.0;
  double fprime1 = 0.0;
  double r_true = 1.0;

  double fprime_gap() const { return fprime1 - fprime0; }
};

//! t = ((4/(3n))^{1/5} sigma)^2, sigma = min(sd, IQR/1.34).
BandwidthSelection silverman_bandwidth(const SampleSet& samples);

/// Least-squares cross-validation over `t_grid`:
///   LSCV(t) = int f^2 - (2/n) sum_i f_{-i}(X_i).
/// Ties go to the larger t.
BandwidthSelection lscv_bandwidth(const SampleSet& samples, BoundaryRatio r,
                                  std::span<const double> t_grid);

//! LSCV objective at a single t.
double lscv_objective(const SampleSet& samples, BoundaryRatio r, TimeParam t);

//! `count` points spaced logarithmically over [lo, hi].
std::vector<double> log_time_grid(double lo, double hi, std::size_t count);

//! A(r) = (4 - 2 sqrt 2)/sqrt(pi) * (r^2 + 1)/(1 + r)^2.
double boundary_bias_constant(double r);

/// Minimizer of the asymptotic MISE. When f'(0) = f'(1):
///   t* = (2 n sqrt(pi) |f''|^2)^{-2/5};
/// otherwise
///   t* = (2 n sqrt(pi) A(r))^{-1/2} |f'(1) - f'(0)|^{-1}.
BandwidthSelection oracle_amise_bandwidth(std::size_t n,
                                          const TargetDensityInfo& info);

double amise_value(TimeParam t, std::size_t n, const TargetDensityInfo& info);

//! Closed-form minimum of amise_value.
double amise_minimum(std::size_t n, const TargetDensityInfo& info);

/// Oracle time for the Neumann (cosine) estimator, whose boundary bias is
/// t^{3/2} (4-2 sqrt 2)/(3 sqrt pi) (f'(0)^2 + f'(1)^2) unless both slopes
/// vanish.
TimeParam oracle_cosine_bandwidth(std::size_t n, const TargetDensityInfo& info);

/// Boundary ratio estimate: #{X < n^{-1/2}} / #{X > 1 - n^{-1/2}}.
/// Throws EstimationFailure when the denominator is zero.
BoundaryRatio estimate_r(const SampleSet& samples);

} // namespace lkde
