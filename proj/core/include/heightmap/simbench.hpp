#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "heightmap/geometry.hpp"
#include "heightmap/reduce.hpp"

namespace heightmap {

/// Observation box for one bivariate current-status draw: X and Y are the
/// variables of interest, U and V their inspection times. Each axis becomes
/// (0, U] when X <= U and (U, inf) otherwise; likewise for Y against V.
ObservationBox current_status_box(double x, double y, double u, double v);

/// n boxes from the model X, Y, U, V ~ Exp(1) i.i.d. Deterministic in
/// `seed`: an mt19937_64 stream seeded with `seed`, exponentials by inverse
/// CDF on 53-bit uniforms, drawn in the order X, Y, U, V per observation.
std::vector<ObservationBox> gen_current_status(std::size_t n, std::uint64_t seed);

/// Seed of the substream for one (size, replicate) cell of a benchmark.
std::uint64_t substream_seed(std::uint64_t base_seed, std::size_t n, std::size_t replicate) noexcept;

enum class RecordStatus {
  measured,
  over_budget,  ///< skipped after an earlier run exceeded the time budget
  over_bound,   ///< skipped because the engine refuses this size (oracle)
};

struct TimingRecord {
  std::size_t n = 0;
  std::size_t replicate = 0;
  std::uint64_t seed = 0;
  double elapsed = 0.0;  ///< seconds, canonicalization plus sweep; 0 when skipped
  std::size_t m = 0;     ///< maximal intersections found; 0 when skipped
  RecordStatus status = RecordStatus::measured;

  friend bool operator==(const TimingRecord&, const TimingRecord&) = default;
};

struct BenchmarkConfig {
  std::vector<std::size_t> sizes{50, 100, 250, 500, 1000, 2500, 5000, 10000};
  std::size_t replicates = 50;
  Engine engine = Engine::automatic;
  std::uint64_t seed = 20050101;
  /// Once a single run takes longer than this, the remaining runs of that
  /// size and every larger size are recorded as over_budget.
  double budget_seconds = 1000.0;
  bool cliques = false;
};

/// One record per (size, replicate), sizes in the given order.
std::vector<TimingRecord> run_benchmark(const BenchmarkConfig& config);

struct SizeSummary {
  std::size_t n = 0;
  std::size_t runs = 0;  ///< measured records
  double mean = 0.0;
  double sd = 0.0;  ///< sample standard deviation; 0 for a single run
  double mean_m = 0.0;
  std::size_t skipped = 0;
};

/// Mean and sd of elapsed time per size over measured records, ascending n.
std::vector<SizeSummary> summarize(std::span<const TimingRecord> records);

/// Least-squares slope of log(mean elapsed) on log(n) over the `k_last`
/// largest sizes that have at least one measured record.
double fit_loglog_slope(std::span<const TimingRecord> records, std::size_t k_last = 4);

void write_timing_csv(std::ostream& os, std::span<const TimingRecord> records);
void write_summary_csv(std::ostream& os, std::span<const SizeSummary> summary);

}  // namespace heightmap
