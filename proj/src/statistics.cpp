#include "bmv/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <random>
#include <vector>

#include "bmv/errors.hpp"

namespace bmv {

void RecyclePolicy::validate() const {
  if (max_passes < 1) throw DomainError("recycle policy: max_passes must be >= 1");
  if (!(per_pass_loss >= 0.0 && per_pass_loss < 1.0)) {
    throw DomainError("recycle policy: per_pass_loss must lie in [0, 1)");
  }
  if (!(packet_width >= 0.0) || !std::isfinite(injection_spacing) ||
      !(injection_spacing > packet_width)) {
    throw DomainError("recycle policy: injection_spacing must exceed packet_width");
  }
}

double expected_snr(std::uint64_t n_postselected, double p_R1_cond) {
  if (n_postselected < 1) throw DomainError("expected SNR needs at least one postselection");
  if (!(p_R1_cond > 0.0 && p_R1_cond < 1.0)) {
    throw DomainError("expected SNR undefined: zero binomial variance");
  }
  return std::sqrt(static_cast<double>(n_postselected) * p_R1_cond / (1.0 - p_R1_cond));
}

SnrReport observed_snr(const RunCounts& counts) {
  if (counts.n_postselected == 0) throw NoPostselections("no successful postselections");
  if (counts.n_L1 == 0) throw NoFailures("N_L1 = 0: observed SNR undefined");
  const double n = static_cast<double>(counts.n_postselected);
  SnrReport r;
  r.p_hat_R1 = static_cast<double>(counts.n_R1) / n;
  r.p_hat_L1 = static_cast<double>(counts.n_L1) / n;
  r.observed_snr = std::sqrt(n * static_cast<double>(counts.n_R1) / static_cast<double>(counts.n_L1));
  return r;
}

SnrReport snr_report(const RunCounts& counts, double p_R1_cond) {
  SnrReport r = observed_snr(counts);
  r.expected_snr = expected_snr(counts.n_postselected, p_R1_cond);
  return r;
}

RunCounts regularize_no_failures(const RunCounts& counts) {
  if (counts.n_L1 > 0 || counts.n_postselected == 0) return counts;
  RunCounts out = counts;
  out.n_L1 = 1;
  out.n_R1 = counts.n_postselected - 1;
  return out;
}

namespace {

struct JointProbabilities {
  double postselect = 0.0;   // P_L2 = |beta|^2 + |delta|^2
  double r1_given_l2 = 0.0;  // |beta|^2 / P_L2
};

JointProbabilities joint_probabilities(const PhaseConfig& cfg) {
  const auto s = evolve_matrix(cfg);
  const double b = std::norm(s.rl());
  const double d = std::norm(s.ll());
  JointProbabilities p;
  p.postselect = std::clamp(b + d, 0.0, 1.0);
  p.r1_given_l2 = p.postselect > 0.0 ? std::clamp(b / p.postselect, 0.0, 1.0) : 0.0;
  return p;
}

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n, double p) {
  if (n == 0 || p <= 0.0) return 0;
  if (p >= 1.0) return n;
  return std::binomial_distribution<std::uint64_t>(n, p)(rng);
}

RunCounts run_shard(const JointProbabilities& p, std::uint64_t n_pairs, std::uint64_t seed,
                    const RecyclePolicy& policy) {
  std::mt19937_64 rng(seed);
  RunCounts c;
  c.n_pairs_injected = n_pairs;
  std::uint64_t remaining = n_pairs;
  for (std::uint64_t pass = 1; pass <= policy.max_passes && remaining > 0; ++pass) {
    ++c.n_recycle_passes;
    c.n_injections += remaining;
    const std::uint64_t hits = draw(rng, remaining, p.postselect);
    const std::uint64_t r1 = draw(rng, hits, p.r1_given_l2);
    c.n_postselected += hits;
    c.n_R1 += r1;
    c.n_L1 += hits - r1;
    const std::uint64_t failed = remaining - hits;
    if (pass == policy.max_passes) break;
    const std::uint64_t kept = draw(rng, failed, 1.0 - policy.per_pass_loss);
    c.n_lost += failed - kept;
    remaining = kept;
  }
  return c;
}

}  // namespace

RunCounts simulate_runs(const PhaseConfig& cfg, std::uint64_t n_pairs, std::uint64_t seed,
                        const RecyclePolicy& policy, unsigned shards) {
  validate(cfg);
  policy.validate();
  if (n_pairs < 1) throw DomainError("simulate_runs needs at least one pair");
  if (shards < 1) throw DomainError("simulate_runs needs at least one shard");

  const auto probs = joint_probabilities(cfg);
  if (shards == 1) return run_shard(probs, n_pairs, seed, policy);

  std::vector<std::future<RunCounts>> jobs;
  const std::uint64_t base = n_pairs / shards;
  const std::uint64_t extra = n_pairs % shards;
  for (unsigned k = 0; k < shards; ++k) {
    const std::uint64_t share = base + (k < extra ? 1 : 0);
    jobs.push_back(std::async(std::launch::async, run_shard, probs, share,
                              seed ^ static_cast<std::uint64_t>(k), policy));
  }
  RunCounts total;
  for (auto& job : jobs) {
    const RunCounts c = job.get();
    total.n_pairs_injected += c.n_pairs_injected;
    total.n_injections += c.n_injections;
    total.n_postselected += c.n_postselected;
    total.n_R1 += c.n_R1;
    total.n_L1 += c.n_L1;
    total.n_lost += c.n_lost;
    total.n_recycle_passes = std::max(total.n_recycle_passes, c.n_recycle_passes);
  }
  return total;
}

}  // namespace bmv
