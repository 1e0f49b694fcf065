#include "fedaloha/access.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace fedaloha {

namespace {

void require_probability(double p, const char* where) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument(std::string(where) + ": probability outside [0, 1]");
    }
}

double clip(double x, double lo, double hi) { return std::min(std::max(x, lo), hi); }

}  // namespace

double equal_access_probability(std::size_t users, std::size_t channels, double p_comp) {
    if (users == 0 || channels == 0) {
        throw std::invalid_argument("equal_access_probability: K and M must be >= 1");
    }
    require_probability(p_comp, "equal_access_probability");
    return std::min(static_cast<double>(channels) / static_cast<double>(users), p_comp);
}

double equal_conditional_probability(std::size_t users, std::size_t channels, double p_comp) {
    const double p = equal_access_probability(users, channels, p_comp);
    if (p_comp == 0.0) return 0.0;
    return std::min(p / p_comp, 1.0);
}

double expected_successes(std::size_t users, std::size_t channels, double p) {
    if (users == 0 || channels == 0) throw std::invalid_argument("expected_successes: K and M must be >= 1");
    require_probability(p, "expected_successes");
    const double per_channel = p / static_cast<double>(channels);
    return static_cast<double>(users) * p *
           std::pow(1.0 - per_channel, static_cast<double>(users - 1));
}

double success_probability(std::span<const double> p_all, std::size_t k, std::size_t channels) {
    if (k >= p_all.size()) throw std::out_of_range("success_probability: user index out of range");
    if (channels == 0) throw std::invalid_argument("success_probability: M must be >= 1");
    for (double p : p_all) require_probability(p, "success_probability");
    double q = p_all[k];
    const double m = static_cast<double>(channels);
    for (std::size_t n = 0; n < p_all.size(); ++n) {
        if (n != k) q *= 1.0 - p_all[n] / m;
    }
    return q;
}

double error_bound(std::span<const double> significance, std::span<const double> q) {
    if (significance.size() != q.size()) throw std::invalid_argument("error_bound: length mismatch");
    double sum = 0.0;
    for (std::size_t k = 0; k < q.size(); ++k) {
        if (significance[k] < 0.0) throw std::invalid_argument("error_bound: negative significance");
        require_probability(q[k], "error_bound");
        sum += significance[k] * std::exp(-q[k]);
    }
    return sum;
}

double budget_residual(std::span<const double> significance, std::size_t channels, double log_lambda) {
    double sum = 0.0;
    for (double a : significance) {
        if (a > 0.0) sum += clip(std::log(a) - log_lambda, 0.0, kInvE);
    }
    return sum - static_cast<double>(channels) * kInvE;
}

CentralizedSolution solve_centralized(std::span<const double> significance, std::size_t channels) {
    if (channels == 0) throw std::invalid_argument("solve_centralized: M must be >= 1");

    std::size_t positive = 0;
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (double a : significance) {
        if (!(a >= 0.0) || !std::isfinite(a)) {
            throw std::invalid_argument("solve_centralized: significance must be finite and >= 0");
        }
        if (a > 0.0) {
            ++positive;
            lo = std::min(lo, std::log(a));
            hi = std::max(hi, std::log(a));
        }
    }
    if (positive < channels) {
        throw InfeasibleProgram("solve_centralized: " + std::to_string(positive) +
                                " users with positive significance cannot fill a budget of " +
                                std::to_string(channels) + "/e");
    }

    // residual(lo) >= 0 (every positive user clipped at 1/e), residual(hi) < 0.
    lo -= 1.0;
    hi += 1.0;
    constexpr int kMaxIterations = 200;
    constexpr double kTolerance = 1e-12;
    double mid = 0.5 * (lo + hi);
    for (int it = 0; it < kMaxIterations; ++it) {
        mid = 0.5 * (lo + hi);
        const double r = budget_residual(significance, channels, mid);
        if (std::abs(r) <= kTolerance) break;
        if (r > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
        if (mid == lo && mid == hi) break;
    }

    CentralizedSolution out{std::vector<double>(significance.size(), 0.0), mid};
    for (std::size_t k = 0; k < significance.size(); ++k) {
        if (significance[k] > 0.0) out.q[k] = clip(std::log(significance[k]) - mid, 0.0, kInvE);
    }
    return out;
}

double p_from_q(double q) {
    if (!(q >= 0.0 && q <= kInvE)) throw std::invalid_argument("p_from_q: q must lie in [0, 1/e]");
    return std::min(q * std::numbers::e, 1.0);
}

double q_from_p(double p) {
    require_probability(p, "q_from_p");
    return p * kInvE;
}

double adaptive_probability(double significance, double psi) {
    if (!(significance > 0.0)) return 0.0;
    return clip(std::numbers::e * std::log(significance) - psi, 0.0, 1.0);
}

double dual_ascent_update(double psi, double active, std::size_t channels, double mu) {
    return psi + mu * (active - static_cast<double>(channels));
}

UserId ccd_select(std::size_t t, std::size_t users) {
    if (users == 0) throw std::invalid_argument("ccd_select: K must be >= 1");
    return t % users;
}

UserId genie_select(const ModelInstance& instance, const WeightVector& w) {
    if (instance.users() == 0) throw std::invalid_argument("genie_select: empty instance");
    UserId best = 0;
    double best_norm = -1.0;
    for (UserId k = 0; k < instance.users(); ++k) {
        const auto& d = instance.datasets[k];
        WeightVector gradient = d.x;
        gradient *= residual(w, d);
        const double n = gradient.norm();
        if (n > best_norm) {
            best_norm = n;
            best = k;
        }
    }
    return best;
}

}  // namespace fedaloha
