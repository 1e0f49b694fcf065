#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace fedaloha {

/// Seeded generator with portable transforms.
///
/// std:: distributions are implementation-defined, so the uniform, normal and
/// index transforms are written out here; a given seed yields the same stream
/// on every conforming standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, 1) with 53 random bits.
    double uniform();

    /// Standard normal via Box-Muller; consumes two uniforms per call.
    double normal();

    /// Uniform on [0, n). Requires n >= 1.
    std::size_t index(std::size_t n);

    /// True with probability p. p <= 0 never fires, p >= 1 always fires.
    bool bernoulli(double p) { return uniform() < p; }

private:
    std::mt19937_64 engine_;
};

}  // namespace fedaloha
