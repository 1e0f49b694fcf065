#include "fedaloha/model.hpp"

#include <stdexcept>
#include <string>

namespace fedaloha {

namespace {

void require_finite(const WeightVector& v, const char* where) {
    if (!v.all_finite()) throw std::domain_error(std::string(where) + ": non-finite result");
}

}  // namespace

ModelInstance generate_instance(std::size_t users, std::size_t dimension, Rng& rng) {
    if (users == 0) throw std::invalid_argument("generate_instance: K must be >= 1");
    if (dimension == 0) throw std::invalid_argument("generate_instance: L must be >= 1");

    WeightVector w_true(dimension);
    for (std::size_t i = 0; i < dimension; ++i) w_true[i] = rng.normal();

    std::vector<UserDataset> datasets;
    datasets.reserve(users);
    for (std::size_t k = 0; k < users; ++k) {
        WeightVector x(dimension);
        for (std::size_t i = 0; i < dimension; ++i) x[i] = rng.normal();
        const double y = x.dot(w_true);
        datasets.push_back({std::move(x), y});
    }
    return {std::move(w_true), std::move(datasets)};
}

double residual(const WeightVector& w, const UserDataset& d) {
    require_same_dimension(w, d.x, "residual");
    return d.x.dot(w) - d.y;
}

double loss(const WeightVector& w, const UserDataset& d) {
    const double r = residual(w, d);
    return 0.5 * r * r;
}

WeightVector local_update(const WeightVector& w, const UserDataset& d, double step) {
    if (!(step > 0.0)) throw std::invalid_argument("local_update: step size must be > 0");
    const double scaled = step * residual(w, d);
    WeightVector out = w;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= scaled * d.x[i];
    require_finite(out, "local_update");
    return out;
}

double significance(const WeightVector& w_old, const WeightVector& w_new, SignificanceMode mode,
                    bool available) {
    require_same_dimension(w_old, w_new, "significance");
    if (!available) return 0.0;
    switch (mode) {
        case SignificanceMode::WeightNorm:
            return w_new.norm();
        case SignificanceMode::DeltaNorm:
            return (w_new - w_old).norm();
    }
    throw std::invalid_argument("significance: unknown mode");
}

WeightVector aggregate(const WeightVector& w_prev, std::span<const WeightVector> received,
                       AggregationMode mode) {
    for (const auto& v : received) require_same_dimension(w_prev, v, "aggregate");
    if (received.empty()) return w_prev;

    WeightVector out(w_prev.size());
    switch (mode) {
        case AggregationMode::Mean:
            for (const auto& v : received) out += v;
            for (std::size_t i = 0; i < out.size(); ++i) out[i] /= static_cast<double>(received.size());
            break;
        case AggregationMode::SumGradient:
            out = w_prev;
            for (const auto& v : received) {
                for (std::size_t i = 0; i < out.size(); ++i) out[i] += v[i] - w_prev[i];
            }
            break;
    }
    require_finite(out, "aggregate");
    return out;
}

double error_norm(const WeightVector& w, const WeightVector& w_true) {
    require_same_dimension(w, w_true, "error_norm");
    return (w - w_true).norm();
}

}  // namespace fedaloha
