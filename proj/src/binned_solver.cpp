#include "lkde/binned_solver.hpp"

#include "lkde/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace lkde {
namespace {

constexpr double min_basis_rcond = 1e-10;

BinnedDensity evolved_copy(const BinnedDensity& u, double t, Propagator p)
{
  BinnedDensity out = u;
  out.time = u.time + t;
  out.propagator = p;
  return out;
}

void check_state(const BinnedDensity& u)
{
  if (u.grid.m < 2 || u.interior.size() != u.grid.m)
    throw Error(ErrorKind::invalid_input, "binned density has wrong size");
}

} // namespace

const char* to_string(Propagator p) noexcept
{
  switch (p) {
    case Propagator::none: return "none";
    case Propagator::backward_euler: return "backward_euler";
    case Propagator::spectral: return "spectral";
    case Propagator::symmetric_eigen: return "symmetric_eigen";
    case Propagator::scaling_squaring: return "scaling_squaring";
  }
  return "unknown";
}

BinnedGrid BinnedGrid::make(std::size_t m)
{
  if (m < 2)
    throw Error(ErrorKind::invalid_parameter,
                "binned grid needs m >= 2, got " + std::to_string(m));
  BinnedGrid g;
  g.m = m;
  g.h = 1.0 / static_cast<double>(m + 1);
  g.dt = 2.0 * g.h * g.h;
  return g;
}

GhostValues BinnedDensity::ghosts() const
{
  return ghost_values(interior.front(), interior.back(), BoundaryRatio(r));
}

std::vector<double> BinnedDensity::with_ghosts() const
{
  const GhostValues g = ghosts();
  std::vector<double> out;
  out.reserve(interior.size() + 2);
  out.push_back(g.left);
  out.insert(out.end(), interior.begin(), interior.end());
  out.push_back(g.right);
  return out;
}

double BinnedDensity::interior_sum() const
{
  return std::accumulate(interior.begin(), interior.end(), 0.0);
}

GridDensity BinnedDensity::interpolate(const EvaluationGrid& grid) const
{
  const std::vector<double> nodes = with_ghosts();
  const std::size_t last = nodes.size() - 1;
  GridDensity out{grid, std::vector<double>(grid.size()), r, time};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double p = grid[i] / this->grid.h;
    const std::size_t lo = std::min(static_cast<std::size_t>(p), last - 1);
    const double frac = p - static_cast<double>(lo);
    out.values[i] = (1.0 - frac) * nodes[lo] + frac * nodes[lo + 1];
  }
  return out;
}

BinnedDensity bin_samples(const SampleSet& samples, std::size_t m,
                          BoundaryRatio r)
{
  BinnedDensity out;
  out.grid = BinnedGrid::make(m);
  out.r = r.value();
  out.interior.assign(m, 0.0);

  const double unit = 1.0 / (static_cast<double>(samples.size()) * out.grid.h);
  const std::size_t last = m + 1;
  std::vector<double> nodes(m + 2, 0.0);
  for (double x : samples.values()) {
    const double p = x * static_cast<double>(m + 1);
    const std::size_t lo = std::min(static_cast<std::size_t>(p), last - 1);
    const double frac = p - static_cast<double>(lo);
    nodes[lo] += (1.0 - frac) * unit;
    nodes[lo + 1] += frac * unit;
  }
  out.boundary_reassigned = nodes.front() + nodes.back();
  nodes[1] += nodes.front();
  nodes[m] += nodes.back();
  std::copy(nodes.begin() + 1, nodes.begin() + 1 + m, out.interior.begin());
  return out;
}

BinnedDensity backward_euler_evolve(const BinnedDensity& u, TimeParam T)
{
  check_state(u);
  const BinnedGrid& g = u.grid;
  const FourCornersMatrix A = build_four_corners(g.m, BoundaryRatio(u.r));

  const double ratio = T.value() / g.dt;
  auto steps = static_cast<std::size_t>(std::ceil(ratio));
  // Treat T within rounding of a multiple of dt as that multiple.
  if (steps > 0 &&
      std::abs(ratio - static_cast<double>(steps - 1)) <= 1e-9 * ratio)
    --steps;
  steps = std::max<std::size_t>(steps, 1);
  const std::size_t full = steps - 1;
  const double last_fraction =
    std::clamp(ratio - static_cast<double>(full), 0.0, 1.0);

  BinnedDensity out = evolved_copy(u, T.value(), Propagator::backward_euler);
  std::vector<double> next(g.m);
  if (full > 0) {
    const ShiftedFourCornersSolver step(A, 1.0);
    for (std::size_t k = 0; k < full; ++k) {
      step.solve(out.interior, next);
      out.interior.swap(next);
    }
  }
  if (last_fraction > 0.0) {
    const ShiftedFourCornersSolver step(A, last_fraction);
    step.solve(out.interior, next);
    out.interior.swap(next);
  }
  return out;
}

Eigen::MatrixXd expm_pade(const Eigen::MatrixXd& M)
{
  // Golub & Van Loan, Algorithm 11.3.1 with q = 6.
  constexpr int q = 6;
  const double norm = M.lpNorm<Eigen::Infinity>();
  int s = 0;
  if (norm > 0.5)
    s = std::max(0, static_cast<int>(std::ceil(std::log2(norm / 0.5))));
  const Eigen::MatrixXd X0 = M / std::ldexp(1.0, s);
  const auto n = M.rows();

  Eigen::MatrixXd X = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd N = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd D = Eigen::MatrixXd::Identity(n, n);
  double c = 1.0;
  for (int k = 1; k <= q; ++k) {
    c *= static_cast<double>(q - k + 1) / static_cast<double>(k * (2 * q - k + 1));
    X = X0 * X;
    N += c * X;
    D += ((k % 2 == 0) ? c : -c) * X;
  }
  Eigen::MatrixXd E = D.partialPivLu().solve(N);
  for (int k = 0; k < s; ++k)
    E = E * E;
  return E;
}

BinnedDensity matrix_exponential_evolve(const BinnedDensity& u, TimeParam t)
{
  check_state(u);
  const BinnedGrid& g = u.grid;
  const BoundaryRatio r(u.r);
  const FourCornersMatrix A = build_four_corners(g.m, r);
  const double rate = t.value() / (2.0 * g.h * g.h);
  const Eigen::Map<const Eigen::VectorXd> u0(u.interior.data(),
                                             static_cast<Eigen::Index>(g.m));
  Eigen::VectorXd result;
  Propagator used;

  if (u.r == 1.0) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(A.dense());
    if (eig.info() != Eigen::Success)
      throw Error(ErrorKind::internal_error, "symmetric eigensolver failed");
    const Eigen::VectorXd decay = (-rate * eig.eigenvalues().array()).exp();
    const Eigen::MatrixXd& V = eig.eigenvectors();
    result = V * decay.cwiseProduct(V.transpose() * u0);
    used = Propagator::symmetric_eigen;
  } else {
    const SpectralData sd = spectral_data(g.m, r);
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(sd.eigenvectors);
    if (lu.rcond() >= min_basis_rcond) {
      const Eigen::VectorXd coeff = lu.solve(u0);
      Eigen::VectorXd decay(g.m);
      for (std::size_t k = 0; k < g.m; ++k)
        decay[k] = std::exp(-rate * sd.eigenvalues[k]);
      result = sd.eigenvectors * decay.cwiseProduct(coeff);
      used = Propagator::spectral;
    } else {
      result = expm_pade(-rate * A.dense()) * u0;
      used = Propagator::scaling_squaring;
    }
  }

  BinnedDensity out = evolved_copy(u, t.value(), used);
  for (std::size_t i = 0; i < g.m; ++i)
    out.interior[i] = result[static_cast<Eigen::Index>(i)];
  return out;
}

} // namespace lkde
