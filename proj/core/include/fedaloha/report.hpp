#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <string_view>

#include "fedaloha/sim.hpp"

namespace fedaloha {

inline constexpr std::string_view kCsvHeader =
    "t,error_mean,error_std,successes_mean,active_mean,psi_mean,collisions_mean";

/// 9 significant digits, locale-independent (printf %.9g).
std::string format_csv_number(double value);

/// Header plus one LF-terminated row per iteration.
void emit_csv(const Ensemble& result, std::ostream& out);
std::string to_csv(const Ensemble& result);

/// Throws std::runtime_error when the file cannot be written.
void write_csv(const Ensemble& result, const std::filesystem::path& path);

}  // namespace fedaloha
