#pragma once

// Uplink medium: availability process, multichannel slotted ALOHA slot
// resolution and the round-robin polling schedule.

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "fedaloha/random.hpp"

namespace fedaloha {

using UserId = std::size_t;
using ChannelId = std::size_t;

/// Entry k is true when user k can compute its local update this iteration.
using AvailabilityVector = std::vector<bool>;

struct TransmissionAttempt {
    UserId user;
    ChannelId channel;

    friend bool operator==(const TransmissionAttempt&, const TransmissionAttempt&) = default;
};

struct Idle {
    friend bool operator==(const Idle&, const Idle&) = default;
};
struct Success {
    UserId user;
    friend bool operator==(const Success&, const Success&) = default;
};
struct Collision {
    std::size_t count;  // >= 2
    friend bool operator==(const Collision&, const Collision&) = default;
};

using ChannelState = std::variant<Idle, Success, Collision>;

/// Result of one slot on M channels.
class ChannelOutcome {
public:
    explicit ChannelOutcome(std::vector<ChannelState> channels) : channels_(std::move(channels)) {}

    std::size_t channels() const noexcept { return channels_.size(); }
    const ChannelState& operator[](ChannelId m) const { return channels_.at(m); }

    std::size_t successes() const noexcept;
    /// Attempts lost to collisions (sum of Collision counts).
    std::size_t collided_attempts() const noexcept;
    std::size_t collision_channels() const noexcept;
    /// Users received, in ascending channel order.
    std::vector<UserId> received_users() const;

private:
    std::vector<ChannelState> channels_;
};

/// Each entry independently true with probability p_comp; one uniform draw
/// per user in ascending order.
AvailabilityVector draw_availability(std::size_t users, double p_comp, Rng& rng);

/// Throws std::invalid_argument on an out-of-range channel or a user that
/// appears twice.
ChannelOutcome resolve_slot(std::span<const TransmissionAttempt> attempts, std::size_t channels);

ChannelId choose_channel(std::size_t channels, Rng& rng);

/// Users (t*M + i) mod K for i in [0, M).
std::vector<UserId> poll_schedule(std::size_t t, std::size_t users, std::size_t channels);

/// Number of transmitting users, collided or not.
std::size_t count_active(std::span<const TransmissionAttempt> attempts) noexcept;

}  // namespace fedaloha
