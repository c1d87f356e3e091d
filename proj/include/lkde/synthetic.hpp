#pragma once

#include "lkde/bandwidth.hpp"
#include "lkde/types.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace lkde {

enum class TargetKind
{
  beta_mixture,
  cosine_bump,
  parabolic,
  custom_coefficients
};

/// Known density on [0,1] with its CDF and smoothness summary.
struct SyntheticTarget
{
  TargetKind kind = TargetKind::parabolic;
  std::string name;
  std::function<double(double)> density;
  std::function<double(double)> cdf;
  TargetDensityInfo info;
};

/// (b(1,2;x) + 2 b(a,1;x)) / 3 with b the beta density. a >= 1.
/// For a = 2 this is (2 + 2x)/3 with r = 1/2.
SyntheticTarget beta_mixture_target(double a);

//! 1 + amp cos(2 pi x), |amp| <= 1. Matching boundary slopes, r = 1.
SyntheticTarget cosine_bump_target(double amp);

//! 6/11 (-2x^2 + x + 2), r = 2.
SyntheticTarget parabolic_target();

struct BetaComponent
{
  double weight = 0.0;
  int alpha = 1;
  int beta = 1;
};

/// Weighted mixture of integer-parameter beta densities; weights must be
/// non-negative and sum to one. Slopes and |f''|^2 are computed exactly.
SyntheticTarget custom_coefficients_target(std::vector<BetaComponent> parts,
                                           std::string name = "custom");

/// Three-bump mixture 0.4 b(1,4) + 0.4 b(10,10) + 0.2 b(4,1): modes at 0,
/// 1/2 and 1, with f(0) = 2 f(1).
SyntheticTarget trimodal_target();

/// Parses "beta_mixture:a=2", "cosine_bump:amp=0.5", "parabolic" or
/// "trimodal".
SyntheticTarget parse_target(const std::string& spec);

/// Inverse-CDF sampling by bisection to 1e-12. Deterministic for a seed.
/// Throws invalid_target when the CDF is not a monotone map onto [0,1].
SampleSet sample_synthetic(const SyntheticTarget& target, std::size_t n,
                           std::uint64_t seed);

} // namespace lkde
