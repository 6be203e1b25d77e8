#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hermrank/channel.hpp"
#include "hermrank/json_io.hpp"

namespace hermrank {

struct SimConfig {
  std::uint64_t trials = 0;  // per rank
  std::vector<unsigned> ranks;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  ErrorMode mode = ErrorMode::Arbitrary;
};

struct RankStats {
  unsigned rank = 0;
  std::uint64_t trials = 0;
  std::uint64_t success = 0;
  std::uint64_t failure = 0;
  std::uint64_t mismatch = 0;  // certified Success with the wrong message
  std::uint64_t inconsistent_key_equation = 0;
  std::uint64_t solver_disagreements = 0;
  std::map<std::string, std::uint64_t> failure_reasons;  // keyed by inner reason
  std::vector<double> latencies_ms;  // per trial, in trial order
};

struct SimReport {
  unsigned q = 0, n = 0, d = 0;
  std::uint64_t seed = 0;
  ErrorMode mode = ErrorMode::Arbitrary;
  std::vector<RankStats> per_rank;

  std::uint64_t total_mismatch() const;
};

/// Trial i at rank t draws message and error from
/// Rng(stream_seed(stream_seed(seed, t), i)), so results do not depend on the
/// thread count.
SimReport simulate(const CodeParams& params, const SimConfig& config);

/// Latency statistics are only emitted with `timing`, keeping the default
/// report byte-identical across runs.
json report_to_json(const SimReport& report, bool timing);

}  // namespace hermrank
