#pragma once

#include "lkde/types.hpp"

#include <cstddef>
#include <functional>
#include <vector>

// Generalized-eigenfunction expansion of the linked-boundary diffusion:
//
//   f(x,t) = 2/(1+r) c0(0) phi_0(x)
//          + sum_{n>=1} 4 e^{-k_n^2 t/2}/(1+r) { c0(k_n) phi_n(x)
//                 - k_n t (1-r) c0(k_n) sin(k_n x)
//                 + [s0(k_n) - (1-r) s1(k_n)] sin(k_n x) },
//
// with k_n = 2 pi n, phi_n(x) = (r + (1-r) x) cos(k_n x) and
//   c0(k) = int cos(kx) f0,  s0(k) = int sin(kx) f0,  s1(k) = int x sin(kx) f0.
// The k_n t sin term is the non-separable part; it vanishes only for r = 1.

namespace lkde {

//! Wavenumber k_n = 2 pi n.
double mode_wavenumber(std::size_t n);

//! The three initial-data transforms for modes n = 0..N.
struct EmpiricalTransforms
{
  std::vector<double> c0;
  std::vector<double> s0;
  std::vector<double> s1;
  //! Sample count; zero for transforms built from closed forms.
  std::size_t n_samples = 0;

  std::size_t mode_count() const noexcept { return c0.size(); }
  //! Highest available mode index N.
  std::size_t max_mode() const noexcept { return c0.size() - 1; }
};

struct ModeCoefficients
{
  double c0 = 0.0;
  double s0 = 0.0;
  double s1 = 0.0;
};

//! Closed-form transforms of analytic initial data, indexed by mode n.
using CoefficientSupplier = std::function<ModeCoefficients(std::size_t n)>;

struct SeriesConfig
{
  BoundaryRatio r{1.0};
  SummationControl truncation{1e-12, 10000};
};

//! Transforms of the empirical measure, modes 0..N. Parallel over modes.
EmpiricalTransforms empirical_transforms(const SampleSet& samples,
                                         std::size_t N);

EmpiricalTransforms transforms_from_supplier(const CoefficientSupplier& supply,
                                             std::size_t N);

//! Exact transforms of the polynomial sum_j coeffs[j] x^j on [0,1].
EmpiricalTransforms polynomial_transforms(std::span<const double> coeffs,
                                          std::size_t N);

//! Smallest N with (1 + k_N t) e^{-k_N^2 t/2} * 8 < tol.
std::size_t truncation_bound(TimeParam t, double tol);

//! Partial sum of the series at one point. Throws truncation_failure when
//! `tr` carries fewer modes than truncation_bound requires.
double eval_series_solution(const EmpiricalTransforms& tr,
                            const SeriesConfig& cfg, TimeParam t, double x);

//! Series on a whole grid, points split over OpenMP threads.
GridDensity eval_series_on_grid(const EmpiricalTransforms& tr,
                                const SeriesConfig& cfg, TimeParam t,
                                const EvaluationGrid& grid);

GridDensity eval_series_on_grid_serial(const EmpiricalTransforms& tr,
                                       const SeriesConfig& cfg, TimeParam t,
                                       const EvaluationGrid& grid);

//! Sample-based estimate via the series: transforms up to the truncation
//! bound, then evaluation on the grid. Same function as estimate_density.
GridDensity series_density(const SampleSet& samples, const SeriesConfig& cfg,
                           TimeParam t, const EvaluationGrid& grid);

} // namespace lkde
