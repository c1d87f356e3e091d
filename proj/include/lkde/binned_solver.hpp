#pragma once

#include "lkde/four_corners.hpp"
#include "lkde/types.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <vector>

namespace lkde {

//! m interior nodes x_i = i h, h = 1/(m+1); time step dt = 2 h^2, for which
//! one backward Euler step is exactly (I + A)^{-1}.
struct BinnedGrid
{
  std::size_t m = 0;
  double h = 0.0;
  double dt = 0.0;

  static BinnedGrid make(std::size_t m);
  double node(std::size_t i) const { return static_cast<double>(i) * h; }
};

enum class Propagator
{
  none,
  backward_euler,
  spectral,
  symmetric_eigen,
  scaling_squaring
};

const char* to_string(Propagator p) noexcept;

struct BinnedDensity
{
  BinnedGrid grid;
  std::vector<double> interior; // u_1 .. u_m
  double r = 1.0;
  double time = 0.0;
  Propagator propagator = Propagator::none;
  //! Weight folded from the ghost positions onto nodes 1 and m by binning.
  double boundary_reassigned = 0.0;

  GhostValues ghosts() const;
  //! u_0 .. u_{m+1}, ghosts derived from the interior.
  std::vector<double> with_ghosts() const;
  double interior_sum() const;
  //! Piecewise-linear interpolation of the node values onto `grid`.
  GridDensity interpolate(const EvaluationGrid& grid) const;
};

/// Linear binning: each sample puts weight 1/(n h) on its two neighbouring
/// nodes in proportion to proximity. Weight landing on a ghost node goes to
/// the adjacent interior node, so h * sum(interior) = 1.
BinnedDensity bin_samples(const SampleSet& samples, std::size_t m,
                          BoundaryRatio r);

//! Interior node values f(x_i) of a function, for analytic initial data.
template <class F>
BinnedDensity sample_function(F&& f, std::size_t m, BoundaryRatio r)
{
  BinnedDensity out;
  out.grid = BinnedGrid::make(m);
  out.r = r.value();
  out.interior.resize(m);
  for (std::size_t i = 0; i < m; ++i)
    out.interior[i] = f(out.grid.node(i + 1));
  return out;
}

/// Backward Euler to time T: ceil(T/dt) - 1 full steps (I + A)^{-1} and
/// a final step (I + (dt_last/dt) A)^{-1} so the total time is exactly T.
BinnedDensity backward_euler_evolve(const BinnedDensity& u, TimeParam T);

/// u(t) = exp(-t/(2h^2) A) u(0). Uses the closed-form spectral data for
/// r != 1, a symmetric eigensolver for r = 1, and scaling-and-squaring when
/// the eigenvector basis is too ill-conditioned. The path taken is stored
/// in the result's `propagator`.
BinnedDensity matrix_exponential_evolve(const BinnedDensity& u, TimeParam t);

//! Dense exp(M) by diagonal Pade(6) with scaling and squaring.
Eigen::MatrixXd expm_pade(const Eigen::MatrixXd& M);

} // namespace lkde
