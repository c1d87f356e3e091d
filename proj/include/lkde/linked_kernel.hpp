#pragma once

#include "lkde/heat_kernel.hpp"
#include "lkde/types.hpp"

namespace lkde {

/// Kernel of the diffusion estimator with linked boundary f(0) = r f(1).
///
/// Assembled from the periodic kernel:
///   K(r;x,y,t) = K1(x-y)[1 + (x-y)c] + K1(x+y)(x+y-1)c
///                + t c [K1'(x+y) + K1'(x-y)],       c = (1-r)/(1+r).
/// For r = 1 it reduces to K1(x-y). Integrates to one in x for every y.
double eval_linked_kernel(BoundaryRatio r, double x, double y, TimeParam t,
                          const SummationControl& ctl = {});

/// f(x,t) = (1/n) sum_k K(r; x, X_k, t) on every grid point.
/// Grid points are distributed over OpenMP threads.
GridDensity estimate_density(const SampleSet& samples, BoundaryRatio r,
                             TimeParam t, const EvaluationGrid& grid,
                             const SummationControl& ctl = {});

/// Single-threaded reference for estimate_density; bitwise identical output.
GridDensity estimate_density_serial(const SampleSet& samples, BoundaryRatio r,
                                    TimeParam t, const EvaluationGrid& grid,
                                    const SummationControl& ctl = {});

/// Affine function a + b x.
struct AffineDensity
{
  double intercept = 0.0;
  double slope = 0.0;

  double operator()(double x) const { return intercept + slope * x; }
};

/// Large-time limit of the estimator: mass * 2/(1+r) * (r + (1-r) x).
AffineDensity stationary_density(BoundaryRatio r, double mass = 1.0);

} // namespace lkde
