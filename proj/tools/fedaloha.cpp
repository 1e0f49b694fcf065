// fedaloha: run federated-learning-over-ALOHA experiments and emit CSV.
//
//   fedaloha simulate --config FILE [--out FILE]
//   fedaloha preset --name fig2 --out-dir DIR [--runs N] [--seed S]

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fedaloha/config.hpp"
#include "fedaloha/presets.hpp"
#include "fedaloha/report.hpp"
#include "fedaloha/sim.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int simulate(const std::string& config_path, const std::string& out_path) {
    const fedaloha::SimConfig config = fedaloha::parse_config(read_file(config_path));
    std::cerr << "# effective config\n" << fedaloha::render_config(config);

    const fedaloha::Ensemble result = fedaloha::run_many(config, config.runs);
    if (out_path.empty()) {
        fedaloha::emit_csv(result, std::cout);
    } else {
        fedaloha::write_csv(result, out_path);
    }
    return 0;
}

int preset(const std::string& name, const std::string& out_dir, std::optional<std::size_t> runs,
           std::optional<std::uint64_t> seed) {
    const fedaloha::Preset p = fedaloha::make_preset(name, runs, seed);
    for (const auto& path : fedaloha::write_preset(p, out_dir)) std::cerr << "wrote " << path.string() << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Federated learning over multichannel ALOHA: simulator and figure presets"};
    app.footer(fedaloha::config_reference());
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    auto* sim = app.add_subcommand("simulate", "Run one configuration and write its averaged trajectory as CSV");
    sim->add_option("--config", config_path, "key=value config file")->required()->check(CLI::ExistingFile);
    sim->add_option("--out", out_path, "CSV destination (default: stdout)");

    std::string preset_name;
    std::string out_dir;
    std::optional<std::size_t> runs;
    std::optional<std::uint64_t> seed;
    auto* pre = app.add_subcommand("preset", "Run a figure preset and write one CSV per entry plus an index");
    pre->add_option("--name", preset_name, "fig1|fig2|fig3a|fig3b|fig4")
        ->required()
        ->check(CLI::IsMember(fedaloha::preset_names()));
    pre->add_option("--out-dir", out_dir, "output directory")->required();
    pre->add_option("--runs", runs, "runs per entry (default: preset-specific)")->check(CLI::PositiveNumber);
    pre->add_option("--seed", seed, "base seed (default 1)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*sim) return simulate(config_path, out_path);
        return preset(preset_name, out_dir, runs, seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
