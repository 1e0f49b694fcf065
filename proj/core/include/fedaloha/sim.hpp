#pragma once

// Iteration loop that ties the model, the channel and an access policy
// together, plus multi-seed averaging.
//
// Per-iteration random draw order (one generator per run):
//   1. availability, one uniform per user, ascending user index;
//   2. channel choices, one per available user, ascending (ALOHA policies);
//   3. access coins, one per available user, ascending (ALOHA policies).
// The instance itself (w_true, then x_0..x_{K-1}) is drawn from the same
// generator before the first iteration.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "fedaloha/access.hpp"
#include "fedaloha/model.hpp"

namespace fedaloha {

struct SimConfig {
    std::size_t users = 1000;     // K
    std::size_t channels = 10;    // M
    std::size_t dimension = 10;   // L
    double local_step = 0.01;     // mu1, gradient step at every user
    double feedback_step = 0.1;   // mu, dual-ascent step for psi
    double p_comp = 0.1;
    std::size_t horizon = 1000;   // T
    Policy policy = Policy::AdaptiveAloha;
    SignificanceMode significance = SignificanceMode::DeltaNorm;
    AggregationMode aggregation = AggregationMode::Mean;
    double initial_feedback = -15.0;  // psi_0
    std::uint64_t seed = 1;
    std::size_t runs = 1;

    /// Throws std::invalid_argument naming the first violated invariant.
    void validate() const;

    friend bool operator==(const SimConfig&, const SimConfig&) = default;
};

/// Metrics of iteration t. `error` is measured after the iteration's
/// aggregation; `psi` is the feedback in force during the iteration (0 for
/// non-adaptive policies); `collisions` counts collided attempts, so
/// successes + collisions == active.
struct RoundReport {
    std::size_t t = 0;
    double error = 0.0;
    std::size_t successes = 0;
    std::size_t active = 0;
    double psi = 0.0;
    std::size_t collisions = 0;
};

struct Trajectory {
    std::vector<RoundReport> reports;
    WeightVector final_w;
};

/// Called once per iteration with the global model after aggregation.
using IterateObserver = std::function<void(std::size_t t, const WeightVector& w)>;

Trajectory run(const SimConfig& config, const IterateObserver& observer = {});

/// Seed of run r: base XOR r.
constexpr std::uint64_t derive_seed(std::uint64_t base, std::size_t run) noexcept {
    return base ^ static_cast<std::uint64_t>(run);
}

struct AveragedRound {
    std::size_t t = 0;
    double error_mean = 0.0;
    double error_std = 0.0;
    double successes_mean = 0.0;
    double successes_std = 0.0;
    double active_mean = 0.0;
    double psi_mean = 0.0;
    double collisions_mean = 0.0;
};

struct Ensemble {
    std::size_t runs = 0;
    std::vector<AveragedRound> rounds;
    std::vector<double> final_errors;  // one per run, in run order
};

/// Runs the config under derive_seed(config.seed, r) for r in [0, runs) and
/// reports pointwise means and sample standard deviations (0 for one run).
/// Runs are distributed over `threads` workers (0 = hardware concurrency);
/// the result does not depend on the thread count.
Ensemble run_many(const SimConfig& config, std::size_t runs, std::size_t threads = 0);

/// Single run packaged as an ensemble of one.
Ensemble as_ensemble(const Trajectory& trajectory);

}  // namespace fedaloha
