#include "lkde/heat_kernel.hpp"

#include "lkde/error.hpp"

#include <cmath>
#include <string>

namespace lkde {
namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

// Reduce to [-1/2, 1/2] using 1-periodicity.
double reduce_period(double x)
{
  return x - std::nearbyint(x);
}

[[noreturn]] void throw_truncation(const char* form, double t, std::size_t cap)
{
  throw Error(ErrorKind::truncation_failure,
              std::string(form) + " sum for K1 did not reach tolerance within " +
                std::to_string(cap) + " terms at t=" + std::to_string(t));
}

} // namespace

KernelValue K1_fourier(double x, TimeParam t, const SummationControl& ctl)
{
  ctl.validate();
  const double tv = t.value();
  const double xr = reduce_period(x);
  // Past k_peak the per-term envelopes 2 e^{-k^2 t/2} and 2k e^{-k^2 t/2}
  // are decreasing.
  const double k_peak = 1.0 / std::sqrt(tv);

  KernelValue out{1.0, 0.0};
  for (std::size_t n = 1;; ++n) {
    if (n > ctl.max_terms)
      throw_truncation("Fourier", tv, ctl.max_terms);
    const double k = two_pi * static_cast<double>(n);
    const double decay = std::exp(-0.5 * k * k * tv);
    if (k >= k_peak && 2.0 * k * decay < ctl.tol && 2.0 * decay < ctl.tol)
      break;
    out.value += 2.0 * decay * std::cos(k * xr);
    out.dx -= 2.0 * k * decay * std::sin(k * xr);
  }
  return out;
}

KernelValue K1_images(double x, TimeParam t, const SummationControl& ctl)
{
  ctl.validate();
  const double tv = t.value();
  const double xr = reduce_period(x);
  const double norm = 1.0 / std::sqrt(two_pi * tv);
  const double sd = std::sqrt(tv);

  auto gauss = [&](double d) { return norm * std::exp(-0.5 * d * d / tv); };

  const double g0 = gauss(xr);
  KernelValue out{g0, -xr / tv * g0};
  for (std::size_t j = 1;; ++j) {
    if (j > ctl.max_terms)
      throw_truncation("image", tv, ctl.max_terms);
    // The nearer of the images x-j, x+j is at distance >= j - 1/2.
    const double dmin = static_cast<double>(j) - 0.5;
    const double env = gauss(dmin);
    if (dmin >= sd && 2.0 * env < ctl.tol && 2.0 * env * dmin / tv < ctl.tol)
      break;
    const double dm = xr - static_cast<double>(j);
    const double dp = xr + static_cast<double>(j);
    const double gm = gauss(dm);
    const double gp = gauss(dp);
    out.value += gm + gp;
    out.dx -= (dm * gm + dp * gp) / tv;
  }
  return out;
}

KernelValue eval_K1_pair(double x, TimeParam t, const SummationControl& ctl)
{
  return t.value() >= k_theta_switch_time ? K1_fourier(x, t, ctl)
                                          : K1_images(x, t, ctl);
}

double eval_K1(double x, TimeParam t, const SummationControl& ctl)
{
  return eval_K1_pair(x, t, ctl).value;
}

double eval_K1_dx(double x, TimeParam t, const SummationControl& ctl)
{
  return eval_K1_pair(x, t, ctl).dx;
}

} // namespace lkde
