#include "lkde/synthetic.hpp"

#include "lkde/error.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

namespace lkde {
namespace {

constexpr double inf = std::numeric_limits<double>::infinity();
constexpr double bisection_tol = 1e-12;

double binomial(int n, int k)
{
  double out = 1.0;
  for (int i = 1; i <= k; ++i)
    out = out * static_cast<double>(n - k + i) / static_cast<double>(i);
  return out;
}

// c * x^e1 * (1-x)^e2, zero whenever c is zero so negative exponents with a
// vanishing coefficient are harmless at the end points.
double monomial(double c, double x, int e1, int e2)
{
  if (c == 0.0)
    return 0.0;
  return c * std::pow(x, e1) * std::pow(1.0 - x, e2);
}

struct IntegerBeta
{
  int alpha;
  int beta;
  double norm; // 1 / B(alpha, beta)

  IntegerBeta(int a, int b)
    : alpha(a)
    , beta(b)
    , norm(1.0 / std::beta(static_cast<double>(a), static_cast<double>(b)))
  {}

  double derivative(double x, int order) const
  {
    const int p = alpha - 1;
    const int q = beta - 1;
    const double pd = p, qd = q;
    switch (order) {
      case 0: return norm * monomial(1.0, x, p, q);
      case 1:
        return norm * (monomial(pd, x, p - 1, q) - monomial(qd, x, p, q - 1));
      default:
        return norm * (monomial(pd * (pd - 1.0), x, p - 2, q) -
                       monomial(2.0 * pd * qd, x, p - 1, q - 1) +
                       monomial(qd * (qd - 1.0), x, p, q - 2));
    }
  }

  double cdf(double x) const
  {
    const int N = alpha + beta - 1;
    double s = 0.0;
    for (int j = alpha; j <= N; ++j)
      s += binomial(N, j) * std::pow(x, j) * std::pow(1.0 - x, N - j);
    return s;
  }
};

template <class F>
double simpson(F&& f, std::size_t intervals)
{
  const double h = 1.0 / static_cast<double>(intervals);
  double s = f(0.0) + f(1.0);
  for (std::size_t i = 1; i < intervals; ++i)
    s += (i % 2 ? 4.0 : 2.0) * f(static_cast<double>(i) * h);
  return s * h / 3.0;
}

void check_cdf(const SyntheticTarget& target)
{
  constexpr std::size_t probes = 1000;
  double prev = target.cdf(0.0);
  if (!(std::abs(prev) < 1e-9) || !(std::abs(target.cdf(1.0) - 1.0) < 1e-9))
    throw Error(ErrorKind::invalid_target,
                "target CDF must map [0,1] onto [0,1]");
  for (std::size_t i = 1; i <= probes; ++i) {
    const double v = target.cdf(static_cast<double>(i) / probes);
    if (!(v >= prev - 1e-12))
      throw Error(ErrorKind::invalid_target, "target CDF is not monotone");
    prev = v;
  }
}

double parse_param(const std::string& spec, const std::string& key)
{
  const auto pos = spec.find(key + "=");
  if (pos == std::string::npos)
    throw Error(ErrorKind::invalid_input,
                "target '" + spec + "' is missing " + key + "=");
  std::istringstream is(spec.substr(pos + key.size() + 1));
  double v;
  if (!(is >> v))
    throw Error(ErrorKind::invalid_input, "bad value for " + key);
  return v;
}

} // namespace

SyntheticTarget beta_mixture_target(double a)
{
  if (!(a > 0.0 && std::isfinite(a)))
    throw Error(ErrorKind::invalid_parameter, "beta mixture needs a > 0");
  SyntheticTarget t;
  t.kind = TargetKind::beta_mixture;
  std::ostringstream name;
  name << "beta_mixture:a=" << a;
  t.name = name.str();
  t.density = [a](double x) {
    return (2.0 * (1.0 - x) + 2.0 * a * std::pow(x, a - 1.0)) / 3.0;
  };
  t.cdf = [a](double x) { return (2.0 * x - x * x + 2.0 * std::pow(x, a)) / 3.0; };

  const double scale = 2.0 * a * (a - 1.0) / 3.0;
  auto& info = t.info;
  if (a == 1.0 || a == 2.0 || a > 2.0)
    info.fprime0 = (a == 2.0) ? (-2.0 + 2.0 * a * (a - 1.0)) / 3.0 : -2.0 / 3.0;
  else
    info.fprime0 = a > 1.0 ? inf : -inf;
  info.fprime1 = (-2.0 + 2.0 * a * (a - 1.0)) / 3.0;
  if (a == 1.0 || a == 2.0)
    info.f_second_norm_sq = 0.0;
  else if (a > 2.5) {
    const double c = scale * (a - 2.0);
    info.f_second_norm_sq = c * c / (2.0 * a - 5.0);
  } else
    info.f_second_norm_sq = inf;
  const double f0 = a == 1.0 ? 4.0 / 3.0 : (a > 1.0 ? 2.0 / 3.0 : inf);
  info.r_true = f0 / (2.0 * a / 3.0);
  return t;
}

SyntheticTarget cosine_bump_target(double amp)
{
  if (!(std::abs(amp) <= 1.0))
    throw Error(ErrorKind::invalid_parameter, "cosine bump needs |amp| <= 1");
  constexpr double two_pi = 2.0 * std::numbers::pi;
  SyntheticTarget t;
  t.kind = TargetKind::cosine_bump;
  std::ostringstream name;
  name << "cosine_bump:amp=" << amp;
  t.name = name.str();
  t.density = [amp](double x) { return 1.0 + amp * std::cos(two_pi * x); };
  t.cdf = [amp](double x) { return x + amp * std::sin(two_pi * x) / two_pi; };
  const double pi4 = std::pow(std::numbers::pi, 4);
  t.info = TargetDensityInfo{8.0 * pi4 * amp * amp, 0.0, 0.0, 1.0};
  return t;
}

SyntheticTarget parabolic_target()
{
  SyntheticTarget t;
  t.kind = TargetKind::parabolic;
  t.name = "parabolic";
  t.density = [](double x) { return 6.0 / 11.0 * (-2.0 * x * x + x + 2.0); };
  t.cdf = [](double x) {
    return 6.0 / 11.0 * (-2.0 / 3.0 * x * x * x + 0.5 * x * x + 2.0 * x);
  };
  t.info = TargetDensityInfo{576.0 / 121.0, 6.0 / 11.0, -18.0 / 11.0, 2.0};
  return t;
}

SyntheticTarget custom_coefficients_target(std::vector<BetaComponent> parts,
                                           std::string name)
{
  if (parts.empty())
    throw Error(ErrorKind::invalid_target, "mixture has no components");
  double total = 0.0;
  std::vector<std::pair<double, IntegerBeta>> comps;
  for (const auto& p : parts) {
    if (!(p.weight >= 0.0) || p.alpha < 1 || p.beta < 1)
      throw Error(ErrorKind::invalid_target,
                  "mixture components need weight >= 0 and alpha, beta >= 1");
    total += p.weight;
    comps.emplace_back(p.weight, IntegerBeta(p.alpha, p.beta));
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw Error(ErrorKind::invalid_target, "mixture weights must sum to 1");

  auto eval = [comps](double x, int order) {
    double s = 0.0;
    for (const auto& [w, b] : comps)
      s += w * b.derivative(x, order);
    return s;
  };

  SyntheticTarget t;
  t.kind = TargetKind::custom_coefficients;
  t.name = std::move(name);
  t.density = [eval](double x) { return eval(x, 0); };
  t.cdf = [comps](double x) {
    double s = 0.0;
    for (const auto& [w, b] : comps)
      s += w * b.cdf(x);
    return s;
  };
  t.info.fprime0 = eval(0.0, 1);
  t.info.fprime1 = eval(1.0, 1);
  t.info.f_second_norm_sq = simpson(
    [&](double x) {
      const double v = eval(x, 2);
      return v * v;
    },
    20000);
  const double f1 = eval(1.0, 0);
  t.info.r_true = f1 > 0.0 ? eval(0.0, 0) / f1 : inf;
  return t;
}

SyntheticTarget trimodal_target()
{
  return custom_coefficients_target({{0.4, 1, 4}, {0.4, 10, 10}, {0.2, 4, 1}},
                                    "trimodal");
}

SyntheticTarget parse_target(const std::string& spec)
{
  const std::string kind = spec.substr(0, spec.find(':'));
  if (kind == "beta_mixture")
    return beta_mixture_target(parse_param(spec, "a"));
  if (kind == "cosine_bump")
    return cosine_bump_target(parse_param(spec, "amp"));
  if (kind == "parabolic")
    return parabolic_target();
  if (kind == "trimodal")
    return trimodal_target();
  throw Error(ErrorKind::invalid_input, "unknown target '" + spec + "'");
}

SampleSet sample_synthetic(const SyntheticTarget& target, std::size_t n,
                           std::uint64_t seed)
{
  if (n < 1)
    throw Error(ErrorKind::invalid_parameter, "sample size must be positive");
  check_cdf(target);

  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<double> u(n);
  for (double& v : u)
    v = unif(gen);

  std::vector<double> xs(n);
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    double lo = 0.0, hi = 1.0;
    while (hi - lo > bisection_tol) {
      const double mid = 0.5 * (lo + hi);
      if (target.cdf(mid) < u[i])
        lo = mid;
      else
        hi = mid;
    }
    xs[i] = 0.5 * (lo + hi);
  }
  return SampleSet(std::move(xs));
}

} // namespace lkde
