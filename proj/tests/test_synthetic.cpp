#include <doctest.h>

#include "lkde/error.hpp"
#include "lkde/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

using namespace lkde;

namespace {

double simpson(const std::function<double(double)>& f, int panels = 20000)
{
  double acc = 0.0;
  for (int i = 0; i <= panels; ++i) {
    const double w = (i == 0 || i == panels) ? 1 : (i % 2 ? 4 : 2);
    acc += w * f(static_cast<double>(i) / panels);
  }
  return acc / (3.0 * panels);
}

// Smoothness summary by finite differences of the density alone.
void check_info(const SyntheticTarget& target, double tol)
{
  const auto& f = target.density;
  const double h = 1e-5;
  const double d0 = (-3 * f(0) + 4 * f(h) - f(2 * h)) / (2 * h);
  const double d1 = (3 * f(1) - 4 * f(1 - h) + f(1 - 2 * h)) / (2 * h);
  CHECK(target.info.fprime0 == doctest::Approx(d0).epsilon(tol).scale(1.0));
  CHECK(target.info.fprime1 == doctest::Approx(d1).epsilon(tol).scale(1.0));
  const double g = 1e-4;
  const double f2 = simpson([&](double x) {
    const double xc = std::clamp(x, g, 1 - g);
    const double s = (f(xc + g) - 2 * f(xc) + f(xc - g)) / (g * g);
    return s * s;
  });
  CHECK(target.info.f_second_norm_sq == doctest::Approx(f2).epsilon(1e-3).scale(1.0));
  CHECK(f(0) == doctest::Approx(target.info.r_true * f(1)).epsilon(1e-12));
  CHECK(simpson(f) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(target.cdf(0.0) == doctest::Approx(0.0).scale(1.0));
  CHECK(target.cdf(1.0) == doctest::Approx(1.0).epsilon(1e-14));
}

std::vector<double> to_vector(const SampleSet& s)
{
  return {s.values().begin(), s.values().end()};
}

} // namespace

TEST_CASE("beta mixture with a = 2 is the line (2 + 2x)/3")
{
  const SyntheticTarget t = beta_mixture_target(2.0);
  for (double x : {0.0, 0.3, 0.8, 1.0})
    CHECK(t.density(x) == doctest::Approx((2 + 2 * x) / 3).epsilon(1e-15));
  CHECK(t.density(0.0) == doctest::Approx(2.0 / 3.0));
  CHECK(t.density(1.0) == doctest::Approx(4.0 / 3.0));
  CHECK(t.info.r_true == doctest::Approx(0.5));
  CHECK(t.info.f_second_norm_sq == doctest::Approx(0.0).scale(1.0));
  CHECK(t.info.fprime0 == doctest::Approx(2.0 / 3.0));
  CHECK(t.info.fprime1 == doctest::Approx(2.0 / 3.0));
  CHECK_THROWS_AS(beta_mixture_target(0.0), Error);
}

TEST_CASE("target summaries agree with finite differences")
{
  check_info(beta_mixture_target(3.0), 1e-6);
  check_info(cosine_bump_target(0.5), 1e-6);
  check_info(parabolic_target(), 1e-6);
  check_info(trimodal_target(), 1e-5);
  CHECK(cosine_bump_target(0.5).info.f_second_norm_sq ==
        doctest::Approx(2 * std::pow(std::numbers::pi, 4)));
  CHECK(parabolic_target().info.r_true == 2.0);
  CHECK(trimodal_target().info.r_true == doctest::Approx(2.0));
}

TEST_CASE("property: cdf is the integral of the density")
{
  for (const SyntheticTarget& t :
       {beta_mixture_target(2.5), cosine_bump_target(-0.3), parabolic_target(), trimodal_target()}) {
    for (double x : {0.1, 0.37, 0.5, 0.93}) {
      const double integral = simpson([&](double s) { return x * t.density(x * s); });
      CAPTURE(t.name);
      CHECK(t.cdf(x) == doctest::Approx(integral).epsilon(1e-10));
    }
  }
}

TEST_CASE("parse_target")
{
  CHECK(parse_target("beta_mixture:a=2").kind == TargetKind::beta_mixture);
  CHECK(parse_target("cosine_bump:amp=0.5").info.f_second_norm_sq ==
        doctest::Approx(2 * std::pow(std::numbers::pi, 4)));
  CHECK(parse_target("parabolic").kind == TargetKind::parabolic);
  CHECK(parse_target("trimodal").kind == TargetKind::custom_coefficients);
  CHECK_THROWS_AS(parse_target("gamma:k=2"), Error);
  CHECK_THROWS_AS(parse_target("beta_mixture:a=x"), Error);
}

TEST_CASE("sampling is deterministic for a seed")
{
  const SyntheticTarget t = beta_mixture_target(2.0);
  const SampleSet a = sample_synthetic(t, 1000, 17);
  const SampleSet b = sample_synthetic(t, 1000, 17);
  const SampleSet c = sample_synthetic(t, 1000, 18);
  CHECK(to_vector(a) == to_vector(b));
  CHECK(to_vector(a) != to_vector(c));
}

TEST_CASE("samples follow the target distribution")
{
  const SyntheticTarget t = beta_mixture_target(2.0);
  const std::size_t n = 100000;
  std::vector<double> xs = to_vector(sample_synthetic(t, n, 1));
  std::sort(xs.begin(), xs.end());
  double ks = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double F = t.cdf(xs[i]);
    ks = std::max({ks, std::abs(F - static_cast<double>(i) / n),
                   std::abs(F - static_cast<double>(i + 1) / n)});
  }
  CHECK(ks < 2.0 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("a non-monotone cdf is rejected")
{
  SyntheticTarget bad = parabolic_target();
  bad.cdf = [](double x) { return x + 0.2 * std::sin(6 * std::numbers::pi * x); };
  try {
    sample_synthetic(bad, 10, 0);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::invalid_target);
  }
}

TEST_CASE("custom mixtures validate their weights")
{
  CHECK_THROWS_AS(custom_coefficients_target({{0.5, 2, 2}, {0.4, 1, 1}}), Error);
  CHECK_THROWS_AS(custom_coefficients_target({{1.0, 0, 2}}), Error);
  const SyntheticTarget uniform = custom_coefficients_target({{1.0, 1, 1}}, "flat");
  CHECK(uniform.density(0.3) == doctest::Approx(1.0));
  CHECK(uniform.name == "flat");
}
