#include "fedaloha/sim.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>

#include "fedaloha/channel.hpp"

namespace fedaloha {

void SimConfig::validate() const {
    auto fail = [](const char* what) { throw std::invalid_argument(std::string("invalid config: ") + what); };
    if (users == 0) fail("K must be >= 1");
    if (channels == 0) fail("M must be >= 1");
    if (dimension == 0) fail("L must be >= 1");
    if (channels > users) fail("M must not exceed K");
    if (horizon == 0) fail("T must be >= 1");
    if (runs == 0) fail("runs must be >= 1");
    if (!(p_comp >= 0.0 && p_comp <= 1.0)) fail("p_comp must lie in [0, 1]");
    if (!(local_step > 0.0) || !std::isfinite(local_step)) fail("mu1 must be finite and > 0");
    if (!(feedback_step > 0.0) || !std::isfinite(feedback_step)) fail("mu must be finite and > 0");
    if (!std::isfinite(initial_feedback)) fail("psi0 must be finite");
}

namespace {

bool single_uploader(Policy p) { return p == Policy::Ccd || p == Policy::GenieMaxNorm; }

}  // namespace

Trajectory run(const SimConfig& config, const IterateObserver& observer) {
    config.validate();

    const std::size_t K = config.users;
    const std::size_t M = config.channels;
    Rng rng(config.seed);
    const ModelInstance instance = generate_instance(K, config.dimension, rng);

    WeightVector w(config.dimension);
    double psi = config.initial_feedback;
    const bool adaptive = config.policy == Policy::AdaptiveAloha;
    const double equal_send =
        config.policy == Policy::EqualAloha ? equal_conditional_probability(K, M, config.p_comp) : 0.0;
    const std::size_t slot_width = single_uploader(config.policy) ? 1 : M;

    std::vector<TransmissionAttempt> attempts;
    std::vector<ChannelId> chosen(K, 0);
    std::vector<WeightVector> local(K, WeightVector(config.dimension));
    std::vector<double> send_probability(K, 0.0);
    std::vector<WeightVector> received;

    Trajectory out{{}, w};
    out.reports.reserve(config.horizon);

    for (std::size_t t = 0; t < config.horizon; ++t) {
        const AvailabilityVector available = draw_availability(K, config.p_comp, rng);
        attempts.clear();

        switch (config.policy) {
            case Policy::Polling: {
                const auto polled = poll_schedule(t, K, M);
                for (ChannelId m = 0; m < polled.size(); ++m) {
                    if (available[polled[m]]) attempts.push_back({polled[m], m});
                }
                break;
            }
            case Policy::EqualAloha:
            case Policy::AdaptiveAloha: {
                for (UserId k = 0; k < K; ++k) {
                    if (!available[k]) continue;
                    if (adaptive) {
                        local[k] = local_update(w, instance.datasets[k], config.local_step);
                        const double a = significance(w, local[k], config.significance);
                        send_probability[k] = adaptive_probability(a, psi);
                    } else {
                        send_probability[k] = equal_send;
                    }
                }
                for (UserId k = 0; k < K; ++k) {
                    if (available[k]) chosen[k] = choose_channel(M, rng);
                }
                for (UserId k = 0; k < K; ++k) {
                    if (available[k] && rng.bernoulli(send_probability[k])) {
                        attempts.push_back({k, chosen[k]});
                    }
                }
                break;
            }
            case Policy::Ccd:
            case Policy::GenieMaxNorm: {
                const UserId k = config.policy == Policy::Ccd ? ccd_select(t, K) : genie_select(instance, w);
                if (available[k]) attempts.push_back({k, 0});
                break;
            }
        }

        const ChannelOutcome outcome = resolve_slot(attempts, slot_width);
        received.clear();
        for (UserId k : outcome.received_users()) {
            received.push_back(adaptive ? local[k] : local_update(w, instance.datasets[k], config.local_step));
        }
        w = aggregate(w, received, config.aggregation);

        const std::size_t active = count_active(attempts);
        out.reports.push_back({t, error_norm(w, instance.w_true), outcome.successes(), active,
                               adaptive ? psi : 0.0, outcome.collided_attempts()});
        if (adaptive) psi = dual_ascent_update(psi, static_cast<double>(active), M, config.feedback_step);
        if (observer) observer(t, w);
    }

    out.final_w = std::move(w);
    return out;
}

namespace {

struct Moments {
    double mean;
    double stddev;
};

template <typename Get>
Moments moments(const std::vector<Trajectory>& runs, std::size_t t, Get get) {
    double sum = 0.0;
    for (const auto& r : runs) sum += get(r.reports[t]);
    const double n = static_cast<double>(runs.size());
    const double mean = sum / n;
    if (runs.size() < 2) return {mean, 0.0};
    double ss = 0.0;
    for (const auto& r : runs) {
        const double d = get(r.reports[t]) - mean;
        ss += d * d;
    }
    return {mean, std::sqrt(ss / (n - 1.0))};
}

Ensemble summarize(const std::vector<Trajectory>& runs) {
    Ensemble e;
    e.runs = runs.size();
    const std::size_t horizon = runs.front().reports.size();
    e.rounds.reserve(horizon);
    for (std::size_t t = 0; t < horizon; ++t) {
        const auto err = moments(runs, t, [](const RoundReport& r) { return r.error; });
        const auto succ = moments(runs, t, [](const RoundReport& r) { return double(r.successes); });
        e.rounds.push_back({runs.front().reports[t].t, err.mean, err.stddev, succ.mean, succ.stddev,
                            moments(runs, t, [](const RoundReport& r) { return double(r.active); }).mean,
                            moments(runs, t, [](const RoundReport& r) { return r.psi; }).mean,
                            moments(runs, t, [](const RoundReport& r) { return double(r.collisions); }).mean});
    }
    for (const auto& r : runs) e.final_errors.push_back(r.reports.back().error);
    return e;
}

}  // namespace

Ensemble run_many(const SimConfig& config, std::size_t runs, std::size_t threads) {
    if (runs == 0) throw std::invalid_argument("run_many: runs must be >= 1");
    config.validate();

    std::vector<std::optional<Trajectory>> results(runs);
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, runs);

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t r = next++; r < runs; r = next++) {
            try {
                SimConfig c = config;
                c.seed = derive_seed(config.seed, r);
                results[r] = run(c);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };

    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);

    std::vector<Trajectory> done;
    done.reserve(runs);
    for (auto& r : results) done.push_back(std::move(*r));
    return summarize(done);
}

Ensemble as_ensemble(const Trajectory& trajectory) {
    return summarize({trajectory});
}

}  // namespace fedaloha
