#pragma once

// Experiment presets mirroring the figures: each expands to one SimConfig per
// (policy, sweep point). All entries of a preset share the base seed, so
// policies are compared on the same drawn instances.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fedaloha/sim.hpp"

namespace fedaloha {

struct PresetEntry {
    std::string label;  // output file stem
    SimConfig config;
};

struct Preset {
    std::string name;
    std::vector<PresetEntry> entries;
};

/// fig1, fig2, fig3a, fig3b, fig4
const std::vector<std::string>& preset_names();

/// Throws std::invalid_argument for an unknown name or runs == 0.
Preset make_preset(std::string_view name, std::optional<std::size_t> runs = std::nullopt,
                   std::optional<std::uint64_t> seed = std::nullopt);

/// Runs every entry, writes <label>.csv per entry and <name>_index.csv with
/// the final-error summary of each entry. Returns the written paths.
std::vector<std::filesystem::path> write_preset(const Preset& preset, const std::filesystem::path& out_dir,
                                                std::size_t threads = 0);

}  // namespace fedaloha
