#include "heightmap/simbench.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <ostream>
#include <random>
#include <string>

#include "heightmap/error.hpp"
#include "heightmap/oracle.hpp"
#include "heightmap/sweep2d.hpp"
#include "heightmap/sweepnd.hpp"

namespace heightmap {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double standard_exponential(std::mt19937_64& rng) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return -std::log1p(-u);
}

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

const char* status_name(RecordStatus s) {
  switch (s) {
    case RecordStatus::measured:
      return "measured";
    case RecordStatus::over_budget:
      return "over_budget";
    case RecordStatus::over_bound:
      return "over_bound";
  }
  return "unknown";
}

}  // namespace

ObservationBox current_status_box(double x, double y, double u, double v) {
  const Interval x_axis = x <= u ? Interval(0.0, u) : Interval(u, kInf);
  const Interval y_axis = y <= v ? Interval(0.0, v) : Interval(v, kInf);
  return ObservationBox({x_axis, y_axis});
}

std::vector<ObservationBox> gen_current_status(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<ObservationBox> boxes;
  boxes.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = standard_exponential(rng);
    const double y = standard_exponential(rng);
    const double u = standard_exponential(rng);
    const double v = standard_exponential(rng);
    boxes.push_back(current_status_box(x, y, u, v));
  }
  return boxes;
}

std::uint64_t substream_seed(std::uint64_t base_seed, std::size_t n, std::size_t replicate) noexcept {
  return splitmix64(splitmix64(splitmix64(base_seed) ^ n) ^ replicate);
}

std::vector<TimingRecord> run_benchmark(const BenchmarkConfig& config) {
  if (config.sizes.empty()) throw ValidationError("benchmark needs at least one size");
  if (config.replicates == 0) throw ValidationError("benchmark needs at least one replicate");

  const ReduceOptions options{config.cliques};
  std::vector<TimingRecord> records;
  records.reserve(config.sizes.size() * config.replicates);
  bool exhausted = false;

  for (std::size_t n : config.sizes) {
    if (n == 0) throw ValidationError("benchmark sizes must be positive");
    const bool refused = config.engine == Engine::oracle && n > oracle_max_n(2);
    for (std::size_t rep = 0; rep < config.replicates; ++rep) {
      TimingRecord rec;
      rec.n = n;
      rec.replicate = rep;
      rec.seed = substream_seed(config.seed, n, rep);
      if (refused || exhausted) {
        rec.status = refused ? RecordStatus::over_bound : RecordStatus::over_budget;
        records.push_back(rec);
        continue;
      }
      const auto boxes = gen_current_status(n, rec.seed);

      const auto start = std::chrono::steady_clock::now();
      const CanonicalDataset canon = canonicalize(boxes);
      std::vector<MaximalIntersection> maxima;
      switch (config.engine) {
        case Engine::automatic:
        case Engine::sweep2d:
          maxima = reduce2d(canon.boxes, options);
          break;
        case Engine::sweepnd:
          maxima = reduce_nd(canon.boxes, 2, options);
          break;
        case Engine::oracle:
          maxima = oracle_reduce(canon.boxes, 2);
          break;
      }
      const auto stop = std::chrono::steady_clock::now();

      rec.elapsed = std::chrono::duration<double>(stop - start).count();
      rec.m = maxima.size();
      records.push_back(rec);
      if (rec.elapsed > config.budget_seconds) exhausted = true;
    }
  }
  return records;
}

std::vector<SizeSummary> summarize(std::span<const TimingRecord> records) {
  std::map<std::size_t, std::vector<const TimingRecord*>> by_size;
  for (const TimingRecord& r : records) by_size[r.n].push_back(&r);

  std::vector<SizeSummary> out;
  for (const auto& [n, group] : by_size) {
    SizeSummary s;
    s.n = n;
    double sum = 0.0;
    double sum_m = 0.0;
    for (const TimingRecord* r : group) {
      if (r->status != RecordStatus::measured) {
        ++s.skipped;
        continue;
      }
      ++s.runs;
      sum += r->elapsed;
      sum_m += static_cast<double>(r->m);
    }
    if (s.runs > 0) {
      s.mean = sum / static_cast<double>(s.runs);
      s.mean_m = sum_m / static_cast<double>(s.runs);
      if (s.runs > 1) {
        double ss = 0.0;
        for (const TimingRecord* r : group) {
          if (r->status == RecordStatus::measured) ss += (r->elapsed - s.mean) * (r->elapsed - s.mean);
        }
        s.sd = std::sqrt(ss / static_cast<double>(s.runs - 1));
      }
    }
    out.push_back(s);
  }
  return out;
}

double fit_loglog_slope(std::span<const TimingRecord> records, std::size_t k_last) {
  if (k_last < 2) throw ValidationError("slope fit needs k_last >= 2");
  std::vector<SizeSummary> measured;
  for (const SizeSummary& s : summarize(records)) {
    if (s.runs > 0) measured.push_back(s);
  }
  if (measured.size() < k_last) {
    throw ValidationError("slope fit needs " + std::to_string(k_last) + " measured sizes, have " +
                          std::to_string(measured.size()));
  }

  const auto tail = std::span<const SizeSummary>(measured).last(k_last);
  double mx = 0.0, my = 0.0;
  for (const SizeSummary& s : tail) {
    if (s.mean <= 0.0) throw ValidationError("mean elapsed at n=" + std::to_string(s.n) + " is not positive");
    mx += std::log(static_cast<double>(s.n));
    my += std::log(s.mean);
  }
  mx /= static_cast<double>(k_last);
  my /= static_cast<double>(k_last);
  double sxy = 0.0, sxx = 0.0;
  for (const SizeSummary& s : tail) {
    const double dx = std::log(static_cast<double>(s.n)) - mx;
    sxy += dx * (std::log(s.mean) - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

void write_timing_csv(std::ostream& os, std::span<const TimingRecord> records) {
  os << "n,replicate,seed,status,elapsed_s,m\n";
  const auto old_precision = os.precision(9);
  for (const TimingRecord& r : records) {
    os << r.n << ',' << r.replicate << ',' << r.seed << ',' << status_name(r.status) << ','
       << r.elapsed << ',' << r.m << '\n';
  }
  os.precision(old_precision);
}

void write_summary_csv(std::ostream& os, std::span<const SizeSummary> summary) {
  os << "n,runs,mean_s,sd_s,mean_m,skipped\n";
  const auto old_precision = os.precision(6);
  for (const SizeSummary& s : summary) {
    os << s.n << ',' << s.runs << ',' << s.mean << ',' << s.sd << ',' << s.mean_m << ',' << s.skipped
       << '\n';
  }
  os.precision(old_precision);
}

}  // namespace heightmap
