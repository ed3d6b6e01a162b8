#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>

#include "dataset_io.hpp"
#include "formats.hpp"
#include "heightmap/error.hpp"
#include "heightmap/npmle.hpp"
#include "heightmap/reduce.hpp"
#include "heightmap/simbench.hpp"

namespace heightmap::cli {
namespace {

class IoError : public Error {
 public:
  using Error::Error;
};

const std::map<std::string, Engine> kEngines{
    {"auto", Engine::automatic}, {"sweep2d", Engine::sweep2d}, {"sweepnd", Engine::sweepnd}, {"oracle", Engine::oracle}};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  return in;
}

// Writes to `path`, or to `fallback` when the path is empty.
template <typename Fn>
void with_output(const std::string& path, std::ostream& fallback, Fn&& write) {
  if (path.empty()) {
    write(fallback);
    return;
  }
  std::ofstream file(path);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  write(file);
  if (!file) throw IoError("failed writing '" + path + "'");
}

DatasetFile load_dataset(const std::string& path, std::optional<std::size_t> dim) {
  auto in = open_input(path);
  return read_dataset(in, path, dim);
}

std::optional<std::size_t> dim_option(std::size_t dim) {
  return dim == 0 ? std::nullopt : std::optional<std::size_t>(dim);
}

std::vector<MaximalIntersection> sorted(std::vector<MaximalIntersection> v) {
  std::sort(v.begin(), v.end(), canonical_less);
  return v;
}

struct ReduceArgs {
  std::string input;
  std::size_t dim = 0;
  std::string output;
  std::string cliques;
  std::string clique_csv;
  bool canonical = false;
  Engine engine = Engine::automatic;
};

int cmd_reduce(const ReduceArgs& args, std::ostream& out) {
  const DatasetFile data = load_dataset(args.input, dim_option(args.dim));
  const Reduction red = reduce(data.boxes, args.engine);

  with_output(args.output, out, [&](std::ostream& os) {
    os << "# " << red.maxima.size() << " maximal intersections of " << data.boxes.size() << " boxes\n";
    if (args.canonical) {
      write_canonical(os, red.maxima, data.dim);
    } else {
      write_dataset(os, red.real_boxes, data.dim, &data);
    }
  });

  if (!args.cliques.empty() || !args.clique_csv.empty()) {
    const CliqueMatrix c = clique_matrix(red.maxima, red.canonical.boxes);
    if (!args.cliques.empty()) with_output(args.cliques, out, [&](std::ostream& os) { write_clique_supports(os, c); });
    if (!args.clique_csv.empty()) with_output(args.clique_csv, out, [&](std::ostream& os) { write_clique_csv(os, c); });
  }
  return exit_ok;
}

struct CheckArgs {
  std::string input;
  std::size_t dim = 0;
  std::string expected;
  Engine engine = Engine::sweepnd;
};

int cmd_check(const CheckArgs& args, std::ostream& out) {
  const DatasetFile data = load_dataset(args.input, dim_option(args.dim));
  const auto swept = sorted(reduce(data.boxes, args.engine).maxima);

  std::vector<MaximalIntersection> reference;
  std::string reference_name;
  if (args.expected.empty()) {
    reference = sorted(reduce(data.boxes, Engine::oracle).maxima);
    reference_name = "oracle";
  } else {
    auto in = open_input(args.expected);
    std::size_t dim = 0;
    reference = sorted(read_canonical(in, args.expected, dim));
    if (dim != data.dim) {
      throw ValidationError(args.expected + ": dimension " + std::to_string(dim) + " does not match dataset dimension " +
                            std::to_string(data.dim));
    }
    reference_name = "expected";
  }

  if (swept == reference) {
    out << "EQUAL m=" << swept.size() << '\n';
    return exit_ok;
  }

  std::vector<MaximalIntersection> only_reference, only_swept;
  std::set_difference(reference.begin(), reference.end(), swept.begin(), swept.end(),
                      std::back_inserter(only_reference), canonical_less);
  std::set_difference(swept.begin(), swept.end(), reference.begin(), reference.end(), std::back_inserter(only_swept),
                      canonical_less);
  out << "DIFF sweep m=" << swept.size() << ' ' << reference_name << " m=" << reference.size() << '\n';
  if (!only_reference.empty()) out << "first only in " << reference_name << ": " << canonical_line(only_reference.front()) << '\n';
  if (!only_swept.empty()) out << "first only in sweep: " << canonical_line(only_swept.front()) << '\n';
  return exit_mismatch;
}

struct BenchArgs {
  BenchmarkConfig config;
  std::size_t k_last = 4;
  std::string output;
  std::string summary;
};

int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
  const auto records = run_benchmark(args.config);
  with_output(args.output, out, [&](std::ostream& os) { write_timing_csv(os, records); });

  const auto summary = summarize(records);
  if (!args.summary.empty()) {
    with_output(args.summary, out, [&](std::ostream& os) { write_summary_csv(os, summary); });
  }
  const auto precision = err.precision(4);
  for (const SizeSummary& s : summary) {
    err << "n=" << s.n << " runs=" << s.runs << " mean=" << s.mean << "s sd=" << s.sd << "s mean_m=" << s.mean_m;
    if (s.skipped) err << " skipped=" << s.skipped;
    err << '\n';
  }
  try {
    const double slope = fit_loglog_slope(records, args.k_last);
    err << "slope(k_last=" << args.k_last << ")=" << slope << '\n';
  } catch (const ValidationError& e) {
    err << "slope(k_last=" << args.k_last << ") unavailable: " << e.what() << '\n';
  }
  err.precision(precision);
  return exit_ok;
}

int cmd_gen(std::size_t n, std::uint64_t seed, const std::string& output, std::ostream& out) {
  if (n == 0) throw ValidationError("--n must be positive");
  const auto boxes = gen_current_status(n, seed);
  with_output(output, out, [&](std::ostream& os) {
    os << "# bivariate current status, X,Y,U,V ~ Exp(1), n=" << n << " seed=" << seed << '\n';
    write_dataset(os, boxes, 2);
  });
  return exit_ok;
}

int cmd_loglik(const std::string& cliques, const std::string& alpha_path, std::ostream& out) {
  auto cin = open_input(cliques);
  const CliqueMatrix c = read_clique_supports(cin, cliques);
  auto ain = open_input(alpha_path);
  const MassVector alpha(read_numbers(ain, alpha_path));
  const double value = log_likelihood(c, alpha);
  const auto precision = out.precision(17);
  if (std::isinf(value)) {
    out << "-inf\n";
  } else {
    out << value << '\n';
  }
  out.precision(precision);
  return exit_ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Maximal intersections of observation boxes", "heightmap"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "heightmap 0.1.0");

  ReduceArgs reduce_args;
  auto* reduce_cmd = app.add_subcommand("reduce", "Compute the maximal intersections of a dataset");
  reduce_cmd->add_option("input", reduce_args.input, "Dataset file")->required();
  reduce_cmd->add_option("--dim", reduce_args.dim, "Dimension, when the file has no 'dim' header");
  reduce_cmd->add_option("-o,--output", reduce_args.output, "Write maxima here instead of stdout");
  reduce_cmd->add_flag("--canonical", reduce_args.canonical, "Write canonical coordinates and cliques");
  reduce_cmd->add_option("--cliques", reduce_args.cliques, "Write the clique matrix as row supports to this file");
  reduce_cmd->add_option("--clique-csv", reduce_args.clique_csv, "Write the clique matrix as dense 0/1 CSV to this file");
  reduce_cmd->add_option("--engine", reduce_args.engine, "auto, sweep2d, sweepnd or oracle")
      ->transform(CLI::CheckedTransformer(kEngines, CLI::ignore_case));

  CheckArgs check_args;
  auto* check_cmd = app.add_subcommand("check", "Compare the sweep against the brute-force oracle or a fixture");
  check_cmd->add_option("input", check_args.input, "Dataset file")->required();
  check_cmd->add_option("--dim", check_args.dim, "Dimension, when the file has no 'dim' header");
  check_cmd->add_option("--expected", check_args.expected, "Canonical maxima file to compare against");
  check_cmd->add_option("--engine", check_args.engine, "Sweep engine under test")
      ->transform(CLI::CheckedTransformer(kEngines, CLI::ignore_case));

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "Time the reduction on simulated current-status data");
  bench_cmd->add_option("--sizes", bench_args.config.sizes, "Comma-separated sample sizes")->delimiter(',');
  bench_cmd->add_option("--reps", bench_args.config.replicates, "Replicates per size");
  bench_cmd->add_option("--seed", bench_args.config.seed, "Base seed");
  bench_cmd->add_option("--klast", bench_args.k_last, "Number of largest sizes used for the slope");
  bench_cmd->add_option("--budget", bench_args.config.budget_seconds, "Seconds per run before skipping the rest");
  bench_cmd->add_option("--engine", bench_args.config.engine, "auto, sweep2d, sweepnd or oracle")
      ->transform(CLI::CheckedTransformer(kEngines, CLI::ignore_case));
  bench_cmd->add_flag("--with-cliques", bench_args.config.cliques, "Include clique materialization in the timing");
  bench_cmd->add_option("-o,--output", bench_args.output, "Timing CSV path instead of stdout");
  bench_cmd->add_option("--summary", bench_args.summary, "Per-size summary CSV path");

  std::size_t gen_n = 0;
  std::uint64_t gen_seed = BenchmarkConfig{}.seed;
  std::string gen_output;
  auto* gen_cmd = app.add_subcommand("gen", "Write a simulated bivariate current-status dataset");
  gen_cmd->add_option("-n,--n", gen_n, "Number of observations")->required();
  gen_cmd->add_option("--seed", gen_seed, "Seed");
  gen_cmd->add_option("-o,--output", gen_output, "Output path instead of stdout");

  std::string loglik_cliques, loglik_alpha;
  auto* loglik_cmd = app.add_subcommand("loglik", "Evaluate the log likelihood of a mass vector");
  loglik_cmd->add_option("--cliques", loglik_cliques, "Clique matrix in row-support format")->required();
  loglik_cmd->add_option("--alpha", loglik_alpha, "File with one mass per maximal intersection")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (reduce_cmd->parsed()) return cmd_reduce(reduce_args, out);
    if (check_cmd->parsed()) return cmd_check(check_args, out);
    if (bench_cmd->parsed()) return cmd_bench(bench_args, out, err);
    if (gen_cmd->parsed()) return cmd_gen(gen_n, gen_seed, gen_output, out);
    if (loglik_cmd->parsed()) return cmd_loglik(loglik_cliques, loglik_alpha, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return exit_parse;
  } catch (const OracleSizeError& e) {
    err << "oracle refused: " << e.what() << '\n';
    return exit_oracle_refused;
  } catch (const ValidationError& e) {
    err << "invalid input: " << e.what() << '\n';
    return exit_validation;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace heightmap::cli
