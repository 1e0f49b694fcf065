#pragma once

// Line-oriented key=value experiment description.
//
//   # comment
//   K=1000
//   policy=adaptive
//
// Blank lines and lines starting with '#' are ignored. Every key is
// optional; missing keys keep the SimConfig defaults.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "fedaloha/sim.hpp"

namespace fedaloha {

enum class ConfigErrorKind { Malformed, UnknownKey, DuplicateKey, BadValue, Invalid };

class ConfigError : public std::runtime_error {
public:
    ConfigError(ConfigErrorKind kind, std::size_t line, const std::string& message)
        : std::runtime_error(message), kind_(kind), line_(line) {}

    ConfigErrorKind kind() const noexcept { return kind_; }
    /// 1-based line of the offending entry; 0 for whole-document invariants.
    std::size_t line() const noexcept { return line_; }

private:
    ConfigErrorKind kind_;
    std::size_t line_;
};

SimConfig parse_config(std::string_view text);

/// Every key, one per line, in canonical order; parse_config inverts it.
std::string render_config(const SimConfig& config);

/// Key reference with defaults, for --help.
std::string config_reference();

std::string_view policy_name(Policy p);
std::optional<Policy> parse_policy(std::string_view name);
std::string_view significance_name(SignificanceMode m);
std::optional<SignificanceMode> parse_significance(std::string_view name);
std::string_view aggregation_name(AggregationMode m);
std::optional<AggregationMode> parse_aggregation(std::string_view name);

/// Shortest decimal text that reads back to the same double.
std::string format_exact(double value);

}  // namespace fedaloha
