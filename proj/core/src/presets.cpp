#include "fedaloha/presets.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <numeric>
#include <stdexcept>

#include "fedaloha/config.hpp"
#include "fedaloha/report.hpp"

namespace fedaloha {

namespace {

constexpr std::array kRandomAccessPolicies{Policy::Polling, Policy::EqualAloha, Policy::AdaptiveAloha};

SimConfig random_access_base(double p_comp, std::size_t horizon) {
    SimConfig c;
    c.users = 1000;
    c.channels = 10;
    c.dimension = 10;
    c.local_step = 0.01;
    c.feedback_step = 0.1;
    c.p_comp = p_comp;
    c.horizon = horizon;
    return c;
}

void add_policies(Preset& preset, const SimConfig& base, const std::string& stem) {
    for (Policy p : kRandomAccessPolicies) {
        SimConfig c = base;
        c.policy = p;
        preset.entries.push_back({stem + "_" + std::string(policy_name(p)), c});
    }
}

}  // namespace

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names{"fig1", "fig2", "fig3a", "fig3b", "fig4"};
    return names;
}

Preset make_preset(std::string_view name, std::optional<std::size_t> runs, std::optional<std::uint64_t> seed) {
    if (runs && *runs == 0) throw std::invalid_argument("preset: runs must be >= 1");
    Preset preset{std::string(name), {}};
    std::size_t default_runs = 1;

    if (name == "fig1") {
        for (Policy p : {Policy::Ccd, Policy::GenieMaxNorm}) {
            SimConfig c;
            c.users = 100;
            c.channels = 1;
            c.dimension = 10;
            c.local_step = 0.01;
            c.p_comp = 1.0;
            c.horizon = 1000;
            c.policy = p;
            preset.entries.push_back({"fig1_" + std::string(policy_name(p)), c});
        }
    } else if (name == "fig2" || name == "fig4") {
        default_runs = 20;
        add_policies(preset, random_access_base(name == "fig2" ? 0.1 : 0.6, 1000), std::string(name));
    } else if (name == "fig3a") {
        default_runs = 50;
        for (std::size_t m : {2, 5, 10, 20, 50}) {
            SimConfig base = random_access_base(0.1, 100);
            base.channels = m;
            add_policies(preset, base, "fig3a_M" + std::to_string(m));
        }
    } else if (name == "fig3b") {
        default_runs = 50;
        for (int tenth = 1; tenth <= 10; ++tenth) {
            const double p_comp = tenth / 10.0;
            add_policies(preset, random_access_base(p_comp, 100), "fig3b_pcomp" + format_exact(p_comp));
        }
    } else {
        throw std::invalid_argument("unknown preset '" + std::string(name) + "'");
    }

    for (auto& e : preset.entries) {
        e.config.runs = runs.value_or(default_runs);
        if (seed) e.config.seed = *seed;
        e.config.validate();
    }
    return preset;
}

std::vector<std::filesystem::path> write_preset(const Preset& preset, const std::filesystem::path& out_dir,
                                                std::size_t threads) {
    std::filesystem::create_directories(out_dir);
    std::vector<std::filesystem::path> written;

    const auto index_path = out_dir / (preset.name + "_index.csv");
    std::ofstream index(index_path, std::ios::binary | std::ios::trunc);
    if (!index) throw std::runtime_error("cannot write " + index_path.string());
    index << "label,policy,K,M,p_comp,T,runs,final_error_mean,final_error_std,successes_mean\n";

    for (const auto& entry : preset.entries) {
        const Ensemble result = run_many(entry.config, entry.config.runs, threads);
        const auto csv_path = out_dir / (entry.label + ".csv");
        write_csv(result, csv_path);
        written.push_back(csv_path);

        const auto& finals = result.final_errors;
        const double n = static_cast<double>(finals.size());
        const double mean = std::accumulate(finals.begin(), finals.end(), 0.0) / n;
        double ss = 0.0;
        for (double f : finals) ss += (f - mean) * (f - mean);
        const double sd = finals.size() > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;
        double succ = 0.0;
        for (const auto& r : result.rounds) succ += r.successes_mean;
        succ /= static_cast<double>(result.rounds.size());

        const auto& c = entry.config;
        index << entry.label << ',' << policy_name(c.policy) << ',' << c.users << ',' << c.channels << ','
              << format_csv_number(c.p_comp) << ',' << c.horizon << ',' << c.runs << ','
              << format_csv_number(mean) << ',' << format_csv_number(sd) << ',' << format_csv_number(succ) << '\n';
    }
    index.flush();
    if (!index) throw std::runtime_error("write failed for " + index_path.string());
    written.push_back(index_path);
    return written;
}

}  // namespace fedaloha
