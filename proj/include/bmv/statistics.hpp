#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "bmv/evolution.hpp"

namespace bmv {

inline constexpr std::string_view kGeneratorName = "std::mt19937_64";

// Reinjection of pairs that fail the L2 postselection.
struct RecyclePolicy {
  std::uint64_t max_passes = 1;   // 1 = no recycling
  double per_pass_loss = 0.0;     // probability a failed pair is lost before reinjection
  double injection_spacing = 1e-3;  // seconds between injections
  double packet_width = 1e-6;       // temporal width of a pair's wave packet, seconds

  // Throws DomainError unless max_passes >= 1, 0 <= loss < 1 and
  // injection_spacing > packet_width >= 0.
  void validate() const;
  // Injection-limited source rate 1 / injection_spacing.
  double effective_rate() const { return 1.0 / injection_spacing; }
};

struct RunCounts {
  std::uint64_t n_pairs_injected = 0;  // distinct pairs entering the first pass
  std::uint64_t n_injections = 0;      // pair injections over all passes
  std::uint64_t n_postselected = 0;    // N_L2
  std::uint64_t n_R1 = 0;              // N_R1 among the postselected
  std::uint64_t n_L1 = 0;              // N_L1 among the postselected
  std::uint64_t n_lost = 0;            // pairs dropped between passes
  std::uint64_t n_recycle_passes = 0;  // passes actually run

  friend bool operator==(const RunCounts&, const RunCounts&) = default;
};

struct SnrReport {
  std::optional<double> expected_snr;
  double observed_snr = 0.0;
  double p_hat_R1 = 0.0;
  double p_hat_L1 = 0.0;
  bool regularized = false;  // N_L1 = 1 convention applied
};

// sqrt(N * P / (1 - P)); throws DomainError unless 0 < P < 1 and N >= 1.
double expected_snr(std::uint64_t n_postselected, double p_R1_cond);

// sqrt(N_L2 * N_R1 / N_L1). Throws NoPostselections if N_L2 == 0 and
// NoFailures if N_L1 == 0.
SnrReport observed_snr(const RunCounts& counts);

// observed_snr plus expected_snr(N_L2, p_R1_cond).
SnrReport snr_report(const RunCounts& counts, double p_R1_cond);

// Replaces N_L1 = 0 with N_L1 = 1, N_R1 = N_L2 - 1 (the best experimentally
// justifiable frequencies). Counts with N_L1 > 0 are returned unchanged.
RunCounts regularize_no_failures(const RunCounts& counts);

// Samples the joint output distribution |alpha|^2..|delta|^2 of
// evolve_matrix(cfg) for n_pairs pairs, postselecting L2 and reinjecting the
// failures per the policy. Each shard k runs on its own generator seeded with
// seed ^ k; counts are summed. Deterministic in (cfg, n_pairs, seed, policy, shards).
RunCounts simulate_runs(const PhaseConfig& cfg, std::uint64_t n_pairs, std::uint64_t seed,
                        const RecyclePolicy& policy = {}, unsigned shards = 1);

}  // namespace bmv
