#include "lkde/cli.hpp"

#include "lkde/bandwidth.hpp"
#include "lkde/binned_solver.hpp"
#include "lkde/error.hpp"
#include "lkde/experiment.hpp"
#include "lkde/four_corners.hpp"
#include "lkde/series_solver.hpp"
#include "lkde/synthetic.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

namespace lkde::cli {
namespace {

struct EstimateArgs
{
  std::string input;
  std::string r = "1";
  std::string bandwidth = "silverman";
  std::string method = "series";
  std::size_t bins = 200;
  std::size_t grid = 1001;
  std::string output;
  std::string nodes_output;
};

struct SynthArgs
{
  std::string target;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::string output;
};

struct BenchArgs
{
  std::string target;
  std::vector<std::string> methods{"linked", "cosine", "gaussian"};
  std::vector<std::size_t> ns{100, 316, 1000, 3162, 10000};
  std::size_t reps = 20;
  std::uint64_t seed = 0;
  std::string bandwidth = "oracle";
  std::size_t bins = 200;
  std::string output;
};

struct EigsArgs
{
  std::size_t m = 0;
  double r = 0.0;
  std::string output;
};

// Sink for --output, falling back to the caller's stream.
class Output
{
public:
  Output(const std::string& path, std::ostream& fallback)
  {
    if (path.empty() || path == "-") {
      os_ = &fallback;
      return;
    }
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_)
      throw Error(ErrorKind::invalid_input, "cannot open output '" + path + "'");
    os_ = file_.get();
  }

  std::ostream& stream() { return *os_; }

private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* os_ = nullptr;
};

SampleSet read_samples(const std::string& path)
{
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorKind::invalid_input, "cannot open input '" + path + "'");
  std::vector<double> values;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos)
      continue;
    const auto comma = line.find(',');
    std::istringstream is(line.substr(first, comma == std::string::npos
                                               ? std::string::npos
                                               : comma - first));
    double v;
    if (!(is >> v)) {
      if (lineno == 1 && values.empty())
        continue; // header
      throw Error(ErrorKind::invalid_input,
                  "line " + std::to_string(lineno) + " is not a number");
    }
    values.push_back(v);
  }
  return SampleSet(std::move(values));
}

BoundaryRatio resolve_ratio(const std::string& spec, const SampleSet& samples,
                            std::ostream& err)
{
  if (spec == "est") {
    try {
      return estimate_r(samples);
    } catch (const EstimationFailure& e) {
      err << "warning: " << e.what() << "; using r = 1\n";
      return BoundaryRatio(1.0);
    }
  }
  std::istringstream is(spec);
  double r;
  if (!(is >> r) || !is.eof())
    throw Error(ErrorKind::invalid_input, "--r expects a number or 'est'");
  return BoundaryRatio(r);
}

TimeParam resolve_time(const std::string& spec, const SampleSet& samples,
                       BoundaryRatio r)
{
  if (spec == "silverman")
    return silverman_bandwidth(samples).t;
  if (spec == "lscv")
    return lscv_bandwidth(samples, r, log_time_grid(1e-4, 1.0, 30)).t;
  const std::string prefix = "fixed:";
  if (spec.rfind(prefix, 0) == 0) {
    std::istringstream is(spec.substr(prefix.size()));
    double t;
    if (!(is >> t) || !is.eof())
      throw Error(ErrorKind::invalid_input, "bad fixed bandwidth '" + spec + "'");
    return TimeParam(t);
  }
  throw Error(ErrorKind::invalid_input, "unknown bandwidth '" + spec + "'");
}

void write_density(std::ostream& os, const GridDensity& d)
{
  os << "x,density\n" << std::setprecision(17);
  for (std::size_t i = 0; i < d.values.size(); ++i)
    os << d.grid[i] << ',' << d.values[i] << '\n';
}

void write_nodes(std::ostream& os, const BinnedDensity& u)
{
  os << "node,x,value\n" << std::setprecision(17);
  const auto nodes = u.with_ghosts();
  for (std::size_t i = 0; i < nodes.size(); ++i)
    os << i << ',' << u.grid.node(i) << ',' << nodes[i] << '\n';
}

int run_estimate(const EstimateArgs& a, std::ostream& out, std::ostream& err)
{
  const SampleSet samples = read_samples(a.input);
  const BoundaryRatio r = resolve_ratio(a.r, samples, err);
  const TimeParam t = resolve_time(a.bandwidth, samples, r);
  const EvaluationGrid grid = EvaluationGrid::uniform(a.grid);

  GridDensity density{grid, {}, r.value(), t.value()};
  if (a.method == "series") {
    density = series_density(samples, SeriesConfig{r, {}}, t, grid);
  } else if (a.method == "binned") {
    const BinnedDensity u = backward_euler_evolve(bin_samples(samples, a.bins, r), t);
    if (!a.nodes_output.empty()) {
      Output nodes(a.nodes_output, out);
      write_nodes(nodes.stream(), u);
    }
    density = u.interpolate(grid);
  } else {
    throw Error(ErrorKind::invalid_input, "unknown method '" + a.method + "'");
  }
  err << "r = " << r.value() << ", t = " << t.value() << '\n';
  Output sink(a.output, out);
  write_density(sink.stream(), density);
  return exit_ok;
}

int run_synth(const SynthArgs& a, std::ostream& out)
{
  const SyntheticTarget target = parse_target(a.target);
  const SampleSet samples = sample_synthetic(target, a.n, a.seed);
  Output sink(a.output, out);
  sink.stream() << std::setprecision(17);
  for (double x : samples.values())
    sink.stream() << x << '\n';
  return exit_ok;
}

int run_bench(const BenchArgs& a, std::ostream& out)
{
  const SyntheticTarget target = parse_target(a.target);
  const BandwidthChoice bw = parse_bandwidth_choice(a.bandwidth);
  MiseOptions options;
  options.bins = a.bins;
  std::vector<MiseRow> rows;
  for (const auto& name : a.methods) {
    const auto part = run_mise_experiment(target, parse_method(name), a.ns,
                                          a.reps, bw, a.seed, options);
    rows.insert(rows.end(), part.begin(), part.end());
  }
  Output sink(a.output, out);
  write_mise_csv(sink.stream(), rows);
  return exit_ok;
}

int run_eigs(const EigsArgs& a, std::ostream& out)
{
  const BoundaryRatio r(a.r);
  const FourCornersMatrix A = build_four_corners(a.m, r);
  const SpectralData sd = spectral_data(a.m, r);
  Output sink(a.output, out);
  auto& os = sink.stream();
  os << "k,class,theta,eigenvalue,residual\n" << std::setprecision(17);
  std::vector<double> v(a.m), Av(a.m);
  for (std::size_t k = 0; k < a.m; ++k) {
    double vmax = 0.0;
    for (std::size_t j = 0; j < a.m; ++j) {
      v[j] = sd.eigenvectors(j, k);
      vmax = std::max(vmax, std::abs(v[j]));
    }
    A.apply(v, Av);
    double res = 0.0;
    for (std::size_t j = 0; j < a.m; ++j)
      res = std::max(res, std::abs(Av[j] - sd.eigenvalues[k] * v[j]));
    const char* cls = sd.classes[k] == SpectralClass::skew         ? "skew"
                      : sd.classes[k] == SpectralClass::stationary ? "stationary"
                                                                   : "sine";
    os << k + 1 << ',' << cls << ',' << sd.angles[k] << ','
       << sd.eigenvalues[k] << ',' << res / vmax << '\n';
  }
  return exit_ok;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Kernel density estimation on [0,1] with linked boundary "
               "f(0) = r f(1)",
               "lkde"};
  app.require_subcommand(1);

  EstimateArgs est;
  auto* estimate = app.add_subcommand("estimate", "estimate a density from samples");
  estimate->add_option("--input", est.input, "CSV, one sample per line")->required();
  estimate->add_option("--r", est.r, "boundary ratio or 'est'");
  estimate->add_option("--bandwidth", est.bandwidth, "silverman | lscv | fixed:T");
  estimate->add_option("--method", est.method, "series | binned");
  estimate->add_option("--bins", est.bins, "interior nodes for --method binned")
    ->check(CLI::Range(std::size_t{2}, std::size_t{1} << 24));
  estimate->add_option("--grid", est.grid, "evaluation points")
    ->check(CLI::Range(std::size_t{2}, std::size_t{1} << 24));
  estimate->add_option("--output", est.output, "output CSV (default stdout)");
  estimate->add_option("--nodes-output", est.nodes_output,
                       "binned node values as node,x,value");

  SynthArgs syn;
  auto* synth = app.add_subcommand("synth", "draw samples from a synthetic target");
  synth->add_option("--target", syn.target, "beta_mixture:a=A | cosine_bump:amp=B | parabolic | trimodal")
    ->required();
  synth->add_option("--n", syn.n, "sample size")->required()->check(CLI::PositiveNumber);
  synth->add_option("--seed", syn.seed, "RNG seed");
  synth->add_option("--output", syn.output, "output CSV (default stdout)");

  BenchArgs ben;
  auto* bench = app.add_subcommand("bench", "MISE experiment over sample sizes");
  bench->add_option("--target", ben.target, "synthetic target")->required();
  bench->add_option("--methods", ben.methods, "linked,linked_est,binned,cosine,gaussian")
    ->delimiter(',');
  bench->add_option("--ns", ben.ns, "sample sizes")->delimiter(',');
  bench->add_option("--reps", ben.reps, "replicates per n")->check(CLI::PositiveNumber);
  bench->add_option("--seed", ben.seed, "base seed");
  bench->add_option("--bandwidth", ben.bandwidth, "oracle | silverman | lscv");
  bench->add_option("--bins", ben.bins, "interior nodes for the binned method");
  bench->add_option("--output", ben.output, "output CSV (default stdout)");

  EigsArgs eig;
  auto* eigs = app.add_subcommand("eigs", "closed-form spectrum of the four-corners matrix");
  eigs->add_option("--m", eig.m, "interior nodes")->required();
  eigs->add_option("--r", eig.r, "boundary ratio (r != 1)")->required();
  eigs->add_option("--output", eig.output, "output CSV (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_invalid_input;
  }

  try {
    if (*estimate)
      return run_estimate(est, out, err);
    if (*synth)
      return run_synth(syn, out);
    if (*bench)
      return run_bench(ben, out);
    return run_eigs(eig, out);
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return e.is_input_error() ? exit_invalid_input : exit_numerical_failure;
  }
}

} // namespace lkde::cli
