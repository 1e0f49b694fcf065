#include "fedaloha/channel.hpp"

#include <stdexcept>
#include <string>
#include <unordered_set>

namespace fedaloha {

std::size_t ChannelOutcome::successes() const noexcept {
    std::size_t n = 0;
    for (const auto& c : channels_) n += std::holds_alternative<Success>(c) ? 1 : 0;
    return n;
}

std::size_t ChannelOutcome::collided_attempts() const noexcept {
    std::size_t n = 0;
    for (const auto& c : channels_) {
        if (const auto* col = std::get_if<Collision>(&c)) n += col->count;
    }
    return n;
}

std::size_t ChannelOutcome::collision_channels() const noexcept {
    std::size_t n = 0;
    for (const auto& c : channels_) n += std::holds_alternative<Collision>(c) ? 1 : 0;
    return n;
}

std::vector<UserId> ChannelOutcome::received_users() const {
    std::vector<UserId> users;
    for (const auto& c : channels_) {
        if (const auto* s = std::get_if<Success>(&c)) users.push_back(s->user);
    }
    return users;
}

AvailabilityVector draw_availability(std::size_t users, double p_comp, Rng& rng) {
    if (!(p_comp >= 0.0 && p_comp <= 1.0)) {
        throw std::invalid_argument("draw_availability: p_comp must lie in [0, 1]");
    }
    AvailabilityVector available(users);
    for (std::size_t k = 0; k < users; ++k) available[k] = rng.bernoulli(p_comp);
    return available;
}

ChannelOutcome resolve_slot(std::span<const TransmissionAttempt> attempts, std::size_t channels) {
    std::vector<std::size_t> load(channels, 0);
    std::vector<UserId> first(channels, 0);
    std::unordered_set<UserId> seen;
    seen.reserve(attempts.size());

    for (const auto& a : attempts) {
        if (a.channel >= channels) {
            throw std::invalid_argument("resolve_slot: channel " + std::to_string(a.channel) +
                                        " out of range [0, " + std::to_string(channels) + ")");
        }
        if (!seen.insert(a.user).second) {
            throw std::invalid_argument("resolve_slot: user " + std::to_string(a.user) +
                                        " transmits more than once");
        }
        if (load[a.channel]++ == 0) first[a.channel] = a.user;
    }

    std::vector<ChannelState> states(channels);
    for (std::size_t m = 0; m < channels; ++m) {
        if (load[m] == 1) {
            states[m] = Success{first[m]};
        } else if (load[m] >= 2) {
            states[m] = Collision{load[m]};
        }
    }
    return ChannelOutcome(std::move(states));
}

ChannelId choose_channel(std::size_t channels, Rng& rng) {
    if (channels == 0) throw std::invalid_argument("choose_channel: M must be >= 1");
    return rng.index(channels);
}

std::vector<UserId> poll_schedule(std::size_t t, std::size_t users, std::size_t channels) {
    if (channels == 0 || users == 0) throw std::invalid_argument("poll_schedule: K and M must be >= 1");
    if (channels > users) throw std::invalid_argument("poll_schedule: M must not exceed K");
    const std::size_t start = (t % users) * channels % users;
    std::vector<UserId> polled(channels);
    for (std::size_t i = 0; i < channels; ++i) polled[i] = (start + i) % users;
    return polled;
}

std::size_t count_active(std::span<const TransmissionAttempt> attempts) noexcept {
    return attempts.size();
}

}  // namespace fedaloha
