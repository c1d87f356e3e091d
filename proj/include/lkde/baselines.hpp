#pragma once

#include "lkde/types.hpp"

namespace lkde {

// Comparison estimators without the linked boundary.

//! Whole-line Gaussian KDE with variance t, restricted to the grid. Leaks
//! mass across the ends of [0,1].
GridDensity gaussian_kde_baseline(const SampleSet& samples, TimeParam t,
                                  const EvaluationGrid& grid);

/// Heat equation with f'(0) = f'(1) = 0:
///   f_c(x,t) = a_0 + 2 sum_{k>=1} e^{-k^2 pi^2 t/2} a_k cos(k pi x),
///   a_k = (1/n) sum_j cos(k pi X_j).
GridDensity cosine_kde(const SampleSet& samples, TimeParam t,
                       const EvaluationGrid& grid,
                       const SummationControl& ctl = {1e-14, 100000});

} // namespace lkde
