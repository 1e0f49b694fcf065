#pragma once

// Federated linear regression: per-user squared-error loss, one-step local
// gradient updates and server-side aggregation.

#include <cstddef>
#include <span>
#include <vector>

#include "fedaloha/random.hpp"
#include "fedaloha/weight_vector.hpp"

namespace fedaloha {

struct UserDataset {
    WeightVector x;
    double y;
};

struct ModelInstance {
    WeightVector w_true;
    std::vector<UserDataset> datasets;

    std::size_t users() const noexcept { return datasets.size(); }
    std::size_t dimension() const noexcept { return w_true.size(); }
};

enum class SignificanceMode {
    WeightNorm,  ///< ||w_k(t+1)||
    DeltaNorm,   ///< ||w_k(t+1) - w(t)||, the step length of the local update
};

enum class AggregationMode {
    Mean,         ///< average of the received local models
    SumGradient,  ///< w(t) + sum of received displacements
};

/// Draws w_true and then x_0 .. x_{K-1}, all entries i.i.d. N(0, 1), in that
/// order; y_k = x_k . w_true with no noise.
ModelInstance generate_instance(std::size_t users, std::size_t dimension, Rng& rng);

/// x . w - y
double residual(const WeightVector& w, const UserDataset& d);

/// 0.5 * |x . w - y|^2
double loss(const WeightVector& w, const UserDataset& d);

/// One gradient step on the user's loss: w - step * (x . w - y) * x.
WeightVector local_update(const WeightVector& w, const UserDataset& d, double step);

/// Norm used to rank a user's update for access. An unavailable user has
/// significance 0 and therefore never transmits.
double significance(const WeightVector& w_old, const WeightVector& w_new, SignificanceMode mode,
                    bool available = true);

/// Combines the local models the server received this iteration. With
/// nothing received the previous model is returned unchanged.
WeightVector aggregate(const WeightVector& w_prev, std::span<const WeightVector> received,
                       AggregationMode mode);

/// ||w - w_true||
double error_norm(const WeightVector& w, const WeightVector& w_true);

}  // namespace fedaloha
