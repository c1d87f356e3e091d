#pragma once

#include "lkde/types.hpp"

#include <numbers>

// Periodic heat kernel on the unit circle,
//
//   K1(x, t) = sum_n exp(i k_n x - k_n^2 t / 2),   k_n = 2 pi n
//            = (2 pi t)^(-1/2) sum_n exp(-(x - n)^2 / (2 t)),
//
// the two forms being related by Poisson summation. The Fourier form
// converges fast for large t and the image form for small t.

namespace lkde {

//! Below this time the image sum is used, above it the Fourier sum.
inline constexpr double k_theta_switch_time = 1.0 / (2.0 * std::numbers::pi);

struct KernelValue
{
  double value = 0.0;
  double dx = 0.0;
};

double eval_K1(double x, TimeParam t, const SummationControl& ctl = {});
double eval_K1_dx(double x, TimeParam t, const SummationControl& ctl = {});

//! K1 and its x-derivative from a single pass over the active form.
KernelValue eval_K1_pair(double x, TimeParam t, const SummationControl& ctl = {});

// The two dual forms, exposed so they can be checked against each other.
// Both are valid for every t > 0; only their cost differs.
KernelValue K1_fourier(double x, TimeParam t, const SummationControl& ctl = {});
KernelValue K1_images(double x, TimeParam t, const SummationControl& ctl = {});

} // namespace lkde
