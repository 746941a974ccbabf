#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "iris/alpha.hpp"
#include "iris/matrix.hpp"
#include "iris/oracles.hpp"
#include "iris/random.hpp"
#include "iris/serialize.hpp"
#include "iris/theorem2.hpp"

namespace iris {

/// Built-in engine names: naive, ryser, laplace, grid, quadrature,
/// theorem2-sparse, theorem2-bigint ("theorem2" is read as theorem2-sparse).
std::string canonical_engine_name(const std::string& name);
bool is_float_engine(const std::string& canonical);

struct TrialSpec {
  std::size_t n_min = 3;
  std::size_t n_max = 3;
  EntryKind entries;
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  std::vector<std::string> engines;
  PChoice p_policy;
  ValidationPolicy validation = ValidationPolicy::brute;
  std::optional<double> tolerance;  // required once a float engine is involved
  std::optional<BitCount> k;        // theorem2-bigint; nullopt = auto
  OracleCaps caps;
  std::uint64_t bit_guard = kDefaultBitGuard;
  std::uint64_t grid_cap = 100'000'000;
  unsigned threads = 0;  // 0: hardware concurrency
};

using EngineValue = std::variant<GaussianBigInt, std::complex<double>>;

/// Extra engine injected next to the built-ins (harness self-tests).
struct CustomEngine {
  std::string name;
  std::function<EngineValue(const ComplexIntMatrix&)> run;
};

struct EngineOutcome {
  std::string engine;
  std::optional<EngineValue> value;
  std::optional<std::string> error;
};

struct DiscrepancyRecord {
  std::uint64_t trial = 0;
  std::uint64_t seed = 0;
  std::size_t n = 0;
  ComplexIntMatrix matrix;
  std::vector<EngineOutcome> results;
  std::vector<std::pair<std::string, std::string>> disagreeing;
  Json context;  // alpha and engine configuration per Iris engine
};

struct PairStats {
  std::string first;
  std::string second;
  std::uint64_t agreements = 0;
  std::uint64_t discrepancies = 0;
};

struct CrosscheckSummary {
  std::uint64_t trials = 0;
  std::uint64_t discrepant_trials = 0;
  std::vector<PairStats> pairs;
};

struct CrosscheckResult {
  CrosscheckSummary summary;
  std::vector<DiscrepancyRecord> records;  // ascending trial index
};

/// Throws IrisError on an infeasible spec; engine disagreements and engine
/// failures on individual trials are recorded, never thrown.
CrosscheckResult run_crosscheck(const TrialSpec& spec, const std::vector<CustomEngine>& extra = {});

/// One JSON document per record, then the summary as the final line.
std::string to_json_lines(const TrialSpec& spec, const CrosscheckResult& result);

Json to_json(const TrialSpec& spec);
Json to_json(const DiscrepancyRecord& r);
Json to_json(const CrosscheckSummary& s);

struct BenchRow {
  std::string engine;
  std::size_t n = 0;
  std::uint64_t trials = 0;
  double median_ms = 0;
  double worst_ms = 0;
  std::optional<Exponent> max_exponent;     // theorem2-*: n * max(alpha)
  std::optional<std::size_t> term_count;    // theorem2-sparse: largest seen
  std::optional<std::uint64_t> term_bound;  // C(2n-1, n)
  std::optional<BitCount> bit_count;        // theorem2-bigint: largest seen
};

/// Times every engine over spec.trials matrices for each n in range.
std::vector<BenchRow> bench(const TrialSpec& spec);

Json to_json(const BenchRow& row);
std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace iris
