#include <doctest.h>

#include "lkde/binned_solver.hpp"
#include "lkde/error.hpp"
#include "lkde/four_corners.hpp"
#include "lkde/series_solver.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <vector>

using namespace lkde;

namespace {

// Dense oracle built directly from the ghost-node elimination, row by row.
Eigen::MatrixXd ghost_elimination_matrix(std::size_t m, double r)
{
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    A(i, i) += 2.0;
    if (i > 0)
      A(i, i - 1) -= 1.0;
    if (i + 1 < m)
      A(i, i + 1) -= 1.0;
  }
  // Row 1 sees u_0 = r/(r+1)(u_1 + u_m); row m sees u_{m+1} = (u_1 + u_m)/(r+1).
  A(0, 0) -= r / (r + 1);
  A(0, m - 1) -= r / (r + 1);
  A(m - 1, 0) -= 1 / (r + 1);
  A(m - 1, m - 1) -= 1 / (r + 1);
  return A;
}

double sup_diff(const std::vector<double>& a, const std::vector<double>& b)
{
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

std::vector<double> normalized(std::vector<double> v, double h)
{
  const double s = std::accumulate(v.begin(), v.end(), 0.0) * h;
  for (auto& x : v)
    x /= s;
  return v;
}

} // namespace

TEST_CASE("four-corners matrix for m = 3")
{
  const FourCornersMatrix A = build_four_corners(3, BoundaryRatio(2.0));
  const double expect[3][3] = {
    {4.0 / 3, -1, -2.0 / 3}, {-1, 2, -1}, {-1.0 / 3, -1, 5.0 / 3}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(A(i, j) == doctest::Approx(expect[i][j]).epsilon(1e-15));

  const Eigen::MatrixXd S = build_four_corners(3, BoundaryRatio(1.0)).dense();
  CHECK(S(0, 0) == 1.5);
  CHECK(S(0, 2) == -0.5);
  CHECK(S(2, 2) == 1.5);
  CHECK((S - S.transpose()).norm() == 0.0);
}

TEST_CASE("four-corners matrix agrees with ghost elimination")
{
  for (double r : {0.0, 0.5, 2.0, 7.0})
    for (std::size_t m : {2u, 5u, 17u}) {
      const Eigen::MatrixXd A = build_four_corners(m, BoundaryRatio(r)).dense();
      CHECK((A - ghost_elimination_matrix(m, r)).cwiseAbs().maxCoeff() <= 1e-15);
    }
}

TEST_CASE("columns sum to zero")
{
  const Eigen::MatrixXd A = build_four_corners(50, BoundaryRatio(0.5)).dense();
  CHECK(A.colwise().sum().cwiseAbs().maxCoeff() <= 1e-15);
  CHECK_THROWS_AS(build_four_corners(1, BoundaryRatio(0.5)), Error);
}

TEST_CASE("ghost values")
{
  const GhostValues g = ghost_values(1.0, 1.0, BoundaryRatio(2.0));
  CHECK(g.left == doctest::Approx(4.0 / 3.0));
  CHECK(g.right == doctest::Approx(2.0 / 3.0));
  const GhostValues p = ghost_values(0.3, 0.9, BoundaryRatio(1.0));
  CHECK(p.left == doctest::Approx(0.6));
  CHECK(p.right == doctest::Approx(0.6));
  const GhostValues z = ghost_values(0.0, 0.0, BoundaryRatio(5.0));
  CHECK(z.left == 0.0);
  CHECK(z.right == 0.0);
}

TEST_CASE("property: discrete boundary conditions of the ghosts")
{
  std::mt19937_64 gen(9);
  std::uniform_real_distribution<double> u(0.0, 3.0);
  for (int i = 0; i < 200; ++i) {
    const double a = u(gen), b = u(gen), r = u(gen);
    const GhostValues g = ghost_values(a, b, BoundaryRatio(r));
    CHECK(g.left == doctest::Approx(r * g.right).epsilon(1e-15));
    CHECK((a - g.left) == doctest::Approx(g.right - b).epsilon(1e-14));
  }
}

TEST_CASE("linear binning")
{
  const std::size_t m = 9;
  const double h = 0.1;
  const BinnedDensity one = bin_samples(SampleSet({0.2}), m, BoundaryRatio(1.0));
  for (std::size_t i = 0; i < m; ++i)
    CHECK(one.interior[i] == doctest::Approx(i == 1 ? 1.0 / h : 0.0));

  const BinnedDensity mid = bin_samples(SampleSet({0.35}), m, BoundaryRatio(1.0));
  CHECK(mid.interior[2] == doctest::Approx(0.5 / h));
  CHECK(mid.interior[3] == doctest::Approx(0.5 / h));

  const BinnedDensity edge = bin_samples(SampleSet({0.0, 1.0}), m, BoundaryRatio(2.0));
  CHECK(edge.interior.front() == doctest::Approx(0.5 / h));
  CHECK(edge.interior.back() == doctest::Approx(0.5 / h));
  CHECK(edge.boundary_reassigned == doctest::Approx(1.0 / h));
  CHECK(edge.interior_sum() * h == doctest::Approx(1.0));
}

TEST_CASE("binning uniform samples lands near one")
{
  std::mt19937_64 gen(42);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> xs(10000);
  for (auto& x : xs)
    x = u(gen);
  const BinnedDensity b = bin_samples(SampleSet(xs), 99, BoundaryRatio(1.0));
  // Each interior node collects about n h samples; sd of a node value is
  // at most sqrt(1/(n h)) before the linear split shrinks it further.
  const double sd = std::sqrt(1.0 / (10000 * 0.01));
  for (std::size_t i = 1; i + 1 < 99; ++i)
    CHECK(std::abs(b.interior[i] - 1.0) <= 5 * sd);
}

TEST_CASE("backward Euler keeps the stationary vector")
{
  const std::size_t m = 30;
  const SpectralData sd = spectral_data(m, BoundaryRatio(2.0));
  BinnedDensity u;
  u.grid = BinnedGrid::make(m);
  u.r = 2.0;
  u.interior = normalized(sd.stationary, u.grid.h);
  for (double T : {0.001, 0.0137, 0.5}) {
    const BinnedDensity v = backward_euler_evolve(u, TimeParam(T));
    CHECK(sup_diff(v.interior, u.interior) <= 1e-12);
    CHECK(v.time == T);
  }
  BinnedDensity flat = sample_function([](double) { return 1.0; }, m, BoundaryRatio(1.0));
  CHECK(sup_diff(backward_euler_evolve(flat, TimeParam(0.2)).interior, flat.interior) <= 1e-12);
}

TEST_CASE("backward Euler from a point mass conserves mass and stays nonnegative")
{
  const std::size_t m = 99;
  BinnedDensity u;
  u.grid = BinnedGrid::make(m);
  u.r = 2.0;
  u.interior.assign(m, 0.0);
  u.interior[0] = 1.0 / u.grid.h;
  const BinnedDensity v = backward_euler_evolve(u, TimeParam(0.01));
  CHECK(v.interior_sum() == doctest::Approx(u.interior_sum()).epsilon(1e-12));
  CHECK(*std::min_element(v.interior.begin(), v.interior.end()) >= 0.0);
}

TEST_CASE("property: one step conserves the sum and positivity")
{
  std::mt19937_64 gen(10);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (double r : {0.0, 0.5, 1.0, 2.0, 10.0}) {
    const std::size_t m = 40;
    const FourCornersMatrix A = build_four_corners(m, BoundaryRatio(r));
    const ShiftedFourCornersSolver step(A, 1.0);
    std::vector<double> x(m), y(m);
    for (auto& v : x)
      v = u(gen) < 0.3 ? 0.0 : u(gen);
    for (int k = 0; k < 50; ++k) {
      step.solve(x, y);
      const double before = std::accumulate(x.begin(), x.end(), 0.0);
      const double after = std::accumulate(y.begin(), y.end(), 0.0);
      CHECK(std::abs(after - before) <= 1e-12 * before);
      CHECK(*std::min_element(y.begin(), y.end()) >= -1e-14);
      x.swap(y);
    }
  }
}

TEST_CASE("shifted solver matches a dense solve")
{
  for (double r : {0.0, 0.5, 3.0})
    for (double scale : {1.0, 0.37}) {
      const std::size_t m = 25;
      const FourCornersMatrix A = build_four_corners(m, BoundaryRatio(r));
      const Eigen::MatrixXd M = Eigen::MatrixXd::Identity(m, m) + scale * A.dense();
      Eigen::VectorXd b = Eigen::VectorXd::LinSpaced(m, -1.0, 2.0);
      const Eigen::VectorXd ref = M.fullPivLu().solve(b);
      std::vector<double> rhs(b.data(), b.data() + m), x(m);
      ShiftedFourCornersSolver(A, scale).solve(rhs, x);
      for (std::size_t i = 0; i < m; ++i)
        CHECK(x[i] == doctest::Approx(ref(i)).epsilon(1e-12));
    }
}

TEST_CASE("final backward Euler step is shortened")
{
  const std::size_t m = 20;
  BinnedDensity u = sample_function([](double x) { return 2.0 - x; }, m, BoundaryRatio(0.5));
  const double dt = u.grid.dt;
  const BinnedDensity v = backward_euler_evolve(u, TimeParam(2.5 * dt));
  // Oracle: two full dense steps and one half step.
  const Eigen::MatrixXd A = build_four_corners(m, BoundaryRatio(0.5)).dense();
  const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(m, m);
  Eigen::VectorXd x = Eigen::Map<const Eigen::VectorXd>(u.interior.data(), m);
  x = (I + A).lu().solve(x);
  x = (I + A).lu().solve(x);
  x = (I + 0.5 * A).lu().solve(x);
  for (std::size_t i = 0; i < m; ++i)
    CHECK(v.interior[i] == doctest::Approx(x(i)).epsilon(1e-12));
}

TEST_CASE("matrix exponential")
{
  SUBCASE("large time reaches the normalized stationary vector")
  {
    const std::size_t m = 20;
    BinnedDensity u = sample_function([](double x) { return 1.0 + std::sin(7 * x); }, m,
                                      BoundaryRatio(2.0));
    const BinnedDensity v = matrix_exponential_evolve(u, TimeParam(50.0));
    std::vector<double> w0 = spectral_data(m, BoundaryRatio(2.0)).stationary;
    const double scale = u.interior_sum() / std::accumulate(w0.begin(), w0.end(), 0.0);
    for (auto& x : w0)
      x *= scale;
    CHECK(sup_diff(v.interior, w0) <= 1e-10);
    CHECK(v.propagator == Propagator::spectral);
  }
  SUBCASE("uniform is fixed for r = 1")
  {
    BinnedDensity u = sample_function([](double) { return 1.0; }, 15, BoundaryRatio(1.0));
    const BinnedDensity v = matrix_exponential_evolve(u, TimeParam(0.3));
    CHECK(sup_diff(v.interior, u.interior) <= 1e-12);
    CHECK(v.propagator == Propagator::symmetric_eigen);
  }
  SUBCASE("3x3 case matches a dense exponential")
  {
    BinnedDensity u;
    u.grid = BinnedGrid::make(3);
    u.r = 2.0;
    u.interior = {1.0, 3.0, 0.5};
    const double t = 0.01;
    const BinnedDensity v = matrix_exponential_evolve(u, TimeParam(t));
    const Eigen::MatrixXd A = build_four_corners(3, BoundaryRatio(2.0)).dense();
    const double s = -t / (2 * u.grid.h * u.grid.h);
    const Eigen::MatrixXd E = (s * A).exp();
    const Eigen::Vector3d ref = E * Eigen::Vector3d(1.0, 3.0, 0.5);
    for (std::size_t i = 0; i < 3; ++i)
      CHECK(std::abs(v.interior[i] - ref(i)) <= 1e-12);
    CHECK((expm_pade(s * A) - E).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("matrix exponential agrees with backward Euler to first order in dt")
{
  auto gap = [](std::size_t m) {
    BinnedDensity u =
      sample_function([](double x) { return 2.0 + x - 2 * x * x; }, m, BoundaryRatio(2.0));
    return sup_diff(matrix_exponential_evolve(u, TimeParam(0.02)).interior,
                    backward_euler_evolve(u, TimeParam(0.02)).interior);
  };
  const double a = gap(40), b = gap(80);
  CHECK(a / b > 3.0); // dt = 2h^2 shrinks by four
}

TEST_CASE("spectral data for m = 3, r = 2")
{
  const SpectralData sd = spectral_data(3, BoundaryRatio(2.0));
  std::vector<double> eig = sd.eigenvalues;
  CHECK(eig[0] == doctest::Approx(3.0));
  CHECK(std::abs(eig[1]) <= 1e-15);
  CHECK(eig[2] == doctest::Approx(2.0));
  const FourCornersMatrix A = build_four_corners(3, BoundaryRatio(2.0));
  CHECK(A.trace() == doctest::Approx(5.0));
  CHECK(eig[0] + eig[1] + eig[2] == doctest::Approx(A.trace()));
  CHECK(sd.stationary[0] == doctest::Approx(1.0));
  CHECK(sd.stationary[1] == doctest::Approx(6.0 / 7.0));
  CHECK(sd.stationary[2] == doctest::Approx(5.0 / 7.0));
  CHECK(sd.max_residual(A) <= 1e-10);
  CHECK_THROWS_AS(spectral_data(3, BoundaryRatio(1.0)), Error);
}

TEST_CASE("spectral data for m = 10, r = 0.5")
{
  const SpectralData sd = spectral_data(10, BoundaryRatio(0.5));
  int zeros = 0;
  for (double l : sd.eigenvalues) {
    if (std::abs(l) <= 1e-14)
      ++zeros;
    else {
      CHECK(l > 0.0);
      CHECK(l < 4.0);
    }
  }
  CHECK(zeros == 1);
  // Compare against a general eigensolver: the spectra must coincide.
  const FourCornersMatrix A = build_four_corners(10, BoundaryRatio(0.5));
  Eigen::EigenSolver<Eigen::MatrixXd> es(A.dense());
  std::vector<double> ref;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    CHECK(std::abs(es.eigenvalues()(i).imag()) <= 1e-10);
    ref.push_back(es.eigenvalues()(i).real());
  }
  std::vector<double> mine = sd.eigenvalues;
  std::sort(ref.begin(), ref.end());
  std::sort(mine.begin(), mine.end());
  for (std::size_t i = 0; i < ref.size(); ++i)
    CHECK(mine[i] == doctest::Approx(ref[i]).epsilon(1e-10));
}

TEST_CASE("property: spectral residuals and trace over many (m, r)")
{
  for (double r : {0.0, 0.3, 0.9, 1.5, 4.0, 20.0})
    for (std::size_t m : {2u, 3u, 4u, 7u, 16u, 51u}) {
      const FourCornersMatrix A = build_four_corners(m, BoundaryRatio(r));
      const SpectralData sd = spectral_data(m, BoundaryRatio(r));
      CAPTURE(r);
      CAPTURE(m);
      CHECK(sd.max_residual(A) <= 1e-10);
      const double sum = std::accumulate(sd.eigenvalues.begin(), sd.eigenvalues.end(), 0.0);
      CHECK(sum == doctest::Approx(A.trace()).epsilon(1e-12));
    }
}

TEST_CASE("property: stability bound of repeated steps")
{
  for (double r : {0.5, 2.0, 10.0})
    for (std::size_t m : {5u, 20u, 100u}) {
      const Eigen::MatrixXd A = build_four_corners(m, BoundaryRatio(r)).dense();
      const Eigen::MatrixXd S =
        (Eigen::MatrixXd::Identity(m, m) + A).inverse();
      const double bound = std::max(2 * r / (1 + r), 2 / (1 + r)) + 1e-10;
      Eigen::MatrixXd P = Eigen::MatrixXd::Identity(m, m);
      double worst = 0.0;
      for (int K = 1; K <= 10000; ++K) {
        P = S * P;
        if (K <= 20 || K % 100 == 0 || K == 10000)
          worst = std::max(worst, P.cwiseAbs().rowwise().sum().maxCoeff());
        if (m == 100 && K >= 2000)
          break; // powers have long since converged to the projector
      }
      CAPTURE(r);
      CAPTURE(m);
      CHECK(worst <= bound);
    }
}

TEST_CASE("binned solution converges to the series solution at first order")
{
  // f0 = 6/11 (2 + x - 2x^2) satisfies f0(0) = 2 f0(1). The O(1) local error of
  // the boundary rows limits the node error to O(h), not the interior O(h^2).
  const double coeffs[] = {12.0 / 11.0, 6.0 / 11.0, -12.0 / 11.0};
  const auto tr = polynomial_transforms(coeffs, 400);
  const SeriesConfig cfg{BoundaryRatio(2.0), {1e-13, 10000}};
  auto error = [&](std::size_t m, double t) {
    BinnedDensity u = sample_function(
      [](double x) { return 6.0 / 11.0 * (2 + x - 2 * x * x); }, m, BoundaryRatio(2.0));
    const BinnedDensity v = matrix_exponential_evolve(u, TimeParam(t));
    double worst = 0.0;
    for (std::size_t i = 0; i < m; ++i)
      worst = std::max(worst, std::abs(v.interior[i] -
                                       eval_series_solution(tr, cfg, TimeParam(t),
                                                            v.grid.node(i + 1))));
    return worst;
  };
  for (double t : {0.01, 0.05}) {
    const double e1 = error(50, t), e2 = error(100, t), e3 = error(200, t);
    CAPTURE(t);
    CHECK(e2 < e1);
    CHECK(e3 < e2);
    CHECK(e1 / e2 >= 1.8);
    CHECK(e2 / e3 >= 1.8);
  }
}

TEST_CASE("sine eigenvectors approach sin(2 pi k x)")
{
  const std::size_t m = 400;
  const SpectralData sd = spectral_data(m, BoundaryRatio(2.0));
  for (std::size_t k = 1; k <= 3; ++k) {
    const std::size_t col = sd.zero_index + k;
    REQUIRE(sd.classes[col] == SpectralClass::sine);
    double worst = 0.0;
    for (int s = 1; s < 1000; ++s) {
      const double x = s / 1000.0;
      const auto j = static_cast<std::size_t>(std::floor((m + 1) * x));
      if (j < 1 || j > m)
        continue;
      worst = std::max(worst, std::abs(sd.eigenvectors(j - 1, col) -
                                       std::sin(2 * std::numbers::pi * k * x)));
    }
    // Sampling at j/(m+1) instead of x shifts the phase by at most 2 pi k/(m+1).
    CAPTURE(k);
    CHECK(worst <= 2 * std::numbers::pi * k / (m + 1));
  }
}

TEST_CASE("interpolation reproduces linear data with ghosts")
{
  BinnedDensity u = sample_function([](double x) { return (4.0 - 2.0 * x) / 3.0; }, 19,
                                    BoundaryRatio(2.0));
  const GhostValues g = u.ghosts();
  CHECK(g.left == doctest::Approx(2.0 * g.right));
  const GridDensity d = u.interpolate(EvaluationGrid::uniform(101));
  CHECK(d.values.size() == 101);
  CHECK(d.values[50] == doctest::Approx(1.0).epsilon(1e-12));
}
