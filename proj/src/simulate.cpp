#include "hermrank/simulate.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <thread>

namespace hermrank {

namespace {

struct TrialOutcome {
  bool success = false;
  bool correct = false;
  bool inconsistent = false;
  bool disagreement = false;
  FailureReason reason = FailureReason::RadiusExceeded;
  double latency_ms = 0;
};

TrialOutcome run_trial(const CodeParams& params, unsigned rank, ErrorMode mode, std::uint64_t seed) {
  Rng rng(seed);
  const Message msg = random_message(params, rng);
  const Codeword c = encode(params, msg);
  const auto e = random_rank_error(params, rank, mode, rng);
  const auto r = corrupt(params.field, c, e);

  const auto start = std::chrono::steady_clock::now();
  const DecodeResult res = decode(params, r);
  const auto stop = std::chrono::steady_clock::now();

  TrialOutcome out;
  out.latency_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  out.success = res.success;
  out.correct = res.success && res.message == msg;
  out.reason = res.diagnostics.inner_reason.value_or(res.reason);
  out.inconsistent = res.diagnostics.inconsistent_systems > 0 ||
                     res.diagnostics.inner_reason == FailureReason::InconsistentKeyEquation;
  out.disagreement = res.diagnostics.solvers_agree.has_value() && !*res.diagnostics.solvers_agree;
  return out;
}

}  // namespace

std::uint64_t SimReport::total_mismatch() const {
  std::uint64_t total = 0;
  for (const auto& s : per_rank) total += s.mismatch;
  return total;
}

SimReport simulate(const CodeParams& params, const SimConfig& config) {
  SimReport report;
  report.q = params.field.q();
  report.n = params.n();
  report.d = params.d;
  report.seed = config.seed;
  report.mode = config.mode;
  const unsigned threads = std::max(1u, config.threads);

  for (unsigned rank : config.ranks) {
    if (rank > params.n()) throw Error(ErrorKind::BadT, "rank exceeds n");
    std::vector<TrialOutcome> outcomes(config.trials);
    const std::uint64_t rank_seed = stream_seed(config.seed, rank);
    auto worker = [&](unsigned w) {
      for (std::uint64_t i = w; i < config.trials; i += threads)
        outcomes[i] = run_trial(params, rank, config.mode, stream_seed(rank_seed, i));
    };
    if (threads == 1) {
      worker(0);
    } else {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker, w);
    }

    RankStats stats;
    stats.rank = rank;
    stats.trials = config.trials;
    for (const auto& o : outcomes) {
      if (o.success) {
        ++stats.success;
        if (!o.correct) ++stats.mismatch;
      } else {
        ++stats.failure;
        ++stats.failure_reasons[std::string(to_string(o.reason))];
      }
      if (o.inconsistent) ++stats.inconsistent_key_equation;
      if (o.disagreement) ++stats.solver_disagreements;
      stats.latencies_ms.push_back(o.latency_ms);
    }
    report.per_rank.push_back(std::move(stats));
  }
  return report;
}

json report_to_json(const SimReport& report, bool timing) {
  json ranks = json::array();
  for (const auto& s : report.per_rank) {
    json entry{
        {"t", s.rank},
        {"trials", s.trials},
        {"success", s.success - s.mismatch},
        {"failure", s.failure},
        {"mismatch", s.mismatch},
        {"inconsistent_key_equation", s.inconsistent_key_equation},
        {"solver_disagreements", s.solver_disagreements},
        {"failure_reasons", s.failure_reasons},
        {"success_rate", s.trials ? static_cast<double>(s.success - s.mismatch) / static_cast<double>(s.trials) : 0.0},
    };
    if (timing && !s.latencies_ms.empty()) {
      std::vector<double> sorted = s.latencies_ms;
      std::sort(sorted.begin(), sorted.end());
      const double mean = std::accumulate(sorted.begin(), sorted.end(), 0.0) / static_cast<double>(sorted.size());
      const std::size_t p95 = std::min(sorted.size() - 1, (sorted.size() * 95 + 99) / 100 - 1);
      entry["mean_latency_ms"] = mean;
      entry["p95_latency_ms"] = sorted[p95];
    }
    ranks.push_back(std::move(entry));
  }
  return json{
      {"q", report.q},
      {"n", report.n},
      {"d", report.d},
      {"seed", report.seed},
      {"mode", report.mode == ErrorMode::Arbitrary ? "arbitrary" : "hermitian"},
      {"per_rank", std::move(ranks)},
      {"mismatch_total", report.total_mismatch()},
  };
}

}  // namespace hermrank
