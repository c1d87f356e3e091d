#pragma once

#include "lkde/synthetic.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace lkde {

enum class Method
{
  linked,          // series estimator with the target's true r
  linked_estimated, // series estimator with r from estimate_r
  binned,          // backward Euler on linearly binned data, true r
  cosine,
  gaussian
};

const char* to_string(Method m) noexcept;
Method parse_method(const std::string& name);

enum class BandwidthChoice
{
  oracle,
  silverman,
  lscv
};

const char* to_string(BandwidthChoice b) noexcept;
BandwidthChoice parse_bandwidth_choice(const std::string& name);

struct MiseRow
{
  Method method = Method::linked;
  std::size_t n = 0;
  std::size_t reps = 0;
  double mean_ise = 0.0;
  double mean_l2 = 0.0; // mean of sqrt(ISE)
  double mean_linf = 0.0;
  double mean_t = 0.0;
};

struct MiseOptions
{
  std::size_t grid_points = 1001;
  std::size_t bins = 200; // for Method::binned
};

/// For each n: `reps` samples (seed = base_seed + replicate), estimate,
/// compare with the target on the grid, average. Replicates run in
/// parallel and are reduced in index order.
std::vector<MiseRow> run_mise_experiment(const SyntheticTarget& target,
                                         Method method,
                                         const std::vector<std::size_t>& ns,
                                         std::size_t reps,
                                         BandwidthChoice bandwidth,
                                         std::uint64_t seed,
                                         const MiseOptions& options = {});

//! Bandwidth the experiment uses for one sample.
TimeParam select_time(const SyntheticTarget& target, Method method,
                      BandwidthChoice bandwidth, const SampleSet& samples);

//! One estimate of the target density on the grid.
GridDensity run_method(Method method, const SyntheticTarget& target,
                       const SampleSet& samples, TimeParam t,
                       const EvaluationGrid& grid, const MiseOptions& options);

void write_mise_csv(std::ostream& os, const std::vector<MiseRow>& rows);

} // namespace lkde
