#pragma once

#include "lkde/types.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <span>
#include <vector>

namespace lkde {

/// m x m finite-difference operator for -h^2 d^2/dx^2 with the linked
/// boundary conditions eliminated through the ghost nodes
///   u_0 = r/(r+1) (u_1 + u_m),   u_{m+1} = 1/(r+1) (u_1 + u_m).
///
/// Stored as A = T + w z^T: T is tridiagonal (-1, 2, -1), w has
/// w_1 = -r/(r+1) and w_m = -1/(r+1), and z = e_1 + e_m. Every column of A
/// sums to zero. Indices in this API are zero-based.
struct FourCornersMatrix
{
  std::size_t m = 0;
  double r = 1.0;
  std::vector<double> sub;   // T(i+1, i)
  std::vector<double> diag;  // T(i, i)
  std::vector<double> super; // T(i, i+1)
  std::vector<double> w;

  double operator()(std::size_t i, std::size_t j) const;
  Eigen::MatrixXd dense() const;
  double trace() const;
  void apply(std::span<const double> u, std::span<double> out) const;
};

FourCornersMatrix build_four_corners(std::size_t m, BoundaryRatio r);

struct GhostValues
{
  double left = 0.0;  // u_0
  double right = 0.0; // u_{m+1}
};

GhostValues ghost_values(double u1, double um, BoundaryRatio r);

/// Solves (I + scale * A) x = b in O(m): one tridiagonal factorization plus
/// a Sherman-Morrison correction for the rank-one corner term. Immutable
/// after construction and safe to share between threads.
class ShiftedFourCornersSolver
{
public:
  ShiftedFourCornersSolver(const FourCornersMatrix& A, double scale);

  void solve(std::span<const double> rhs, std::span<double> x) const;
  std::size_t size() const noexcept { return pivot_inv_.size(); }

private:
  void tridiagonal_solve(std::span<const double> rhs,
                         std::span<double> x) const;

  double off_ = 0.0;
  std::vector<double> c_prime_;
  std::vector<double> pivot_inv_;
  std::vector<double> correction_; // (I + scale T)^{-1} (scale w)
  double sm_denominator_ = 1.0;
};

enum class SpectralClass
{
  skew,       // v^k_j = r sin((j-1) theta) - sin(j theta), theta = 2 pi k / m
  stationary, // zero eigenvalue, affine w^0
  sine        // w^k_j = sin(j theta), theta = 2 pi k / (m+1)
};

/// Closed-form eigen-decomposition of the four-corners matrix for r != 1.
struct SpectralData
{
  std::size_t m = 0;
  double r = 0.0;
  std::vector<double> angles;
  std::vector<double> eigenvalues; // 2 - 2 cos(theta_k)
  std::vector<SpectralClass> classes;
  Eigen::MatrixXd eigenvectors;    // column k pairs with eigenvalues[k]
  std::size_t zero_index = 0;
  std::vector<double> stationary;  // w^0_j = 1 + (1-r)/(1+rm) (j-1)

  /// max_k |A v_k - lambda_k v_k|_inf / |v_k|_inf
  double max_residual(const FourCornersMatrix& A) const;
};

SpectralData spectral_data(std::size_t m, BoundaryRatio r);

} // namespace lkde
