#pragma once

// Access-probability policies: equal-probability multichannel ALOHA, the
// success-probability model, the centralized water-filling program and its
// distributed form driven by a dual-ascent feedback signal, plus the two
// single-uploader selection baselines.

#include <cstddef>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include "fedaloha/channel.hpp"
#include "fedaloha/model.hpp"

namespace fedaloha {

inline constexpr double kInvE = 1.0 / std::numbers::e;

enum class Policy { Polling, EqualAloha, AdaptiveAloha, Ccd, GenieMaxNorm };

/// min(M/K, p_comp): the unconditional per-user send probability.
double equal_access_probability(std::size_t users, std::size_t channels, double p_comp);

/// Probability that an available user transmits under equal-probability
/// ALOHA, so that availability times this equals equal_access_probability.
double equal_conditional_probability(std::size_t users, std::size_t channels, double p_comp);

/// K p (1 - p/M)^(K-1), the mean number of collision-free uploads.
double expected_successes(std::size_t users, std::size_t channels, double p);

/// p_k * prod_{n != k} (1 - p_n / M).
double success_probability(std::span<const double> p_all, std::size_t k, std::size_t channels);

/// sum_k a_k exp(-q_k).
double error_bound(std::span<const double> significance, std::span<const double> q);

class InfeasibleProgram : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct CentralizedSolution {
    std::vector<double> q;
    /// ln(lambda) where bisection stopped. Not unique when every positive
    /// user is clipped; q is.
    double log_lambda;
};

/// Minimizes sum_k a_k exp(-q_k) subject to sum_k q_k = M/e and
/// 0 <= q_k <= 1/e. The optimum is q_k = clip(ln a_k - ln lambda, 0, 1/e);
/// ln lambda is found by bisection on the monotone budget residual.
/// Users with a_k = 0 get q_k = 0. Throws InfeasibleProgram when fewer than
/// M users have a_k > 0.
CentralizedSolution solve_centralized(std::span<const double> significance, std::size_t channels);

/// Budget residual sum_k clip(ln a_k - log_lambda, 0, 1/e) - M/e.
double budget_residual(std::span<const double> significance, std::size_t channels, double log_lambda);

double p_from_q(double q);
double q_from_p(double p);

/// clip(e ln a - psi, 0, 1); a = 0 maps to 0 without taking the log.
double adaptive_probability(double significance, double psi);

/// psi + mu (P_hat - M). P_hat is the observed active count, or its
/// expectation when iterating on a deterministic model.
double dual_ascent_update(double psi, double active, std::size_t channels, double mu);

/// t mod K
UserId ccd_select(std::size_t t, std::size_t users);

/// User with the largest local gradient norm ||(x.w - y) x||; lowest index on ties.
UserId genie_select(const ModelInstance& instance, const WeightVector& w);

}  // namespace fedaloha
