#include "fedaloha/config.hpp"

#include <array>
#include <charconv>
#include <set>
#include <sstream>

namespace fedaloha {

namespace {

struct NamedPolicy {
    std::string_view name;
    Policy policy;
};

constexpr std::array kPolicies{
    NamedPolicy{"polling", Policy::Polling}, NamedPolicy{"equal", Policy::EqualAloha},
    NamedPolicy{"adaptive", Policy::AdaptiveAloha}, NamedPolicy{"ccd", Policy::Ccd},
    NamedPolicy{"genie", Policy::GenieMaxNorm},
};

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

template <typename T>
std::optional<T> parse_number(std::string_view text) {
    T value{};
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end) return std::nullopt;
    return value;
}

}  // namespace

std::string_view policy_name(Policy p) {
    for (const auto& np : kPolicies) {
        if (np.policy == p) return np.name;
    }
    return "unknown";
}

std::optional<Policy> parse_policy(std::string_view name) {
    for (const auto& np : kPolicies) {
        if (np.name == name) return np.policy;
    }
    return std::nullopt;
}

std::string_view significance_name(SignificanceMode m) {
    return m == SignificanceMode::DeltaNorm ? "delta" : "weight";
}

std::optional<SignificanceMode> parse_significance(std::string_view name) {
    if (name == "delta") return SignificanceMode::DeltaNorm;
    if (name == "weight") return SignificanceMode::WeightNorm;
    return std::nullopt;
}

std::string_view aggregation_name(AggregationMode m) {
    return m == AggregationMode::Mean ? "mean" : "sum";
}

std::optional<AggregationMode> parse_aggregation(std::string_view name) {
    if (name == "mean") return AggregationMode::Mean;
    if (name == "sum") return AggregationMode::SumGradient;
    return std::nullopt;
}

std::string format_exact(double value) {
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), ptr);
}

SimConfig parse_config(std::string_view text) {
    SimConfig config;
    std::set<std::string, std::less<>> seen;
    std::size_t line_no = 0;

    while (!text.empty()) {
        ++line_no;
        const auto newline = text.find('\n');
        const std::string_view raw = text.substr(0, newline);
        text = newline == std::string_view::npos ? std::string_view{} : text.substr(newline + 1);

        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') continue;

        const auto eq = line.find('=');
        const std::string_view key = eq == std::string_view::npos ? std::string_view{} : trim(line.substr(0, eq));
        if (key.empty()) {
            throw ConfigError(ConfigErrorKind::Malformed, line_no,
                              "line " + std::to_string(line_no) + ": malformed entry '" + std::string(line) +
                                  "' (expected key=value)");
        }
        const std::string_view value = trim(line.substr(eq + 1));

        auto bad_value = [&](const char* expected) {
            return ConfigError(ConfigErrorKind::BadValue, line_no,
                               "line " + std::to_string(line_no) + ": bad value '" + std::string(value) +
                                   "' for key '" + std::string(key) + "' (expected " + expected + ")");
        };
        auto as_count = [&]() {
            auto v = parse_number<std::size_t>(value);
            if (!v) throw bad_value("a non-negative integer");
            return *v;
        };
        auto as_real = [&]() {
            auto v = parse_number<double>(value);
            if (!v) throw bad_value("a real number");
            return *v;
        };

        if (key == "K") {
            config.users = as_count();
        } else if (key == "M") {
            config.channels = as_count();
        } else if (key == "L") {
            config.dimension = as_count();
        } else if (key == "T") {
            config.horizon = as_count();
        } else if (key == "runs") {
            config.runs = as_count();
        } else if (key == "seed") {
            auto v = parse_number<std::uint64_t>(value);
            if (!v) throw bad_value("an unsigned 64-bit integer");
            config.seed = *v;
        } else if (key == "mu1") {
            config.local_step = as_real();
        } else if (key == "mu") {
            config.feedback_step = as_real();
        } else if (key == "p_comp") {
            config.p_comp = as_real();
        } else if (key == "psi0") {
            config.initial_feedback = as_real();
        } else if (key == "policy") {
            auto p = parse_policy(value);
            if (!p) throw bad_value("polling|equal|adaptive|ccd|genie");
            config.policy = *p;
        } else if (key == "significance") {
            auto m = parse_significance(value);
            if (!m) throw bad_value("delta|weight");
            config.significance = *m;
        } else if (key == "aggregation") {
            auto m = parse_aggregation(value);
            if (!m) throw bad_value("mean|sum");
            config.aggregation = *m;
        } else {
            throw ConfigError(ConfigErrorKind::UnknownKey, line_no,
                              "line " + std::to_string(line_no) + ": unknown key '" + std::string(key) + "'");
        }

        if (!seen.emplace(key).second) {
            throw ConfigError(ConfigErrorKind::DuplicateKey, line_no,
                              "line " + std::to_string(line_no) + ": duplicate key '" + std::string(key) + "'");
        }
    }

    try {
        config.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(ConfigErrorKind::Invalid, 0, e.what());
    }
    return config;
}

std::string render_config(const SimConfig& c) {
    std::ostringstream out;
    out << "K=" << c.users << '\n'
        << "M=" << c.channels << '\n'
        << "L=" << c.dimension << '\n'
        << "mu1=" << format_exact(c.local_step) << '\n'
        << "mu=" << format_exact(c.feedback_step) << '\n'
        << "p_comp=" << format_exact(c.p_comp) << '\n'
        << "T=" << c.horizon << '\n'
        << "policy=" << policy_name(c.policy) << '\n'
        << "significance=" << significance_name(c.significance) << '\n'
        << "aggregation=" << aggregation_name(c.aggregation) << '\n'
        << "psi0=" << format_exact(c.initial_feedback) << '\n'
        << "seed=" << c.seed << '\n'
        << "runs=" << c.runs << '\n';
    return out.str();
}

std::string config_reference() {
    const SimConfig d;
    std::ostringstream out;
    out << "Config keys (key=value, one per line, '#' comments):\n"
        << "  K=<int>             users (default " << d.users << ")\n"
        << "  M=<int>             channels, M <= K (default " << d.channels << ")\n"
        << "  L=<int>             model dimension (default " << d.dimension << ")\n"
        << "  mu1=<real>          local gradient step (default " << format_exact(d.local_step) << ")\n"
        << "  mu=<real>           feedback dual-ascent step (default " << format_exact(d.feedback_step) << ")\n"
        << "  p_comp=<real>       probability a user can compute (default " << format_exact(d.p_comp) << ")\n"
        << "  T=<int>             iterations (default " << d.horizon << ")\n"
        << "  policy=<name>       polling|equal|adaptive|ccd|genie (default " << policy_name(d.policy) << ")\n"
        << "  significance=<name> delta|weight (default " << significance_name(d.significance) << ")\n"
        << "  aggregation=<name>  mean|sum (default " << aggregation_name(d.aggregation) << ")\n"
        << "  psi0=<real>         initial feedback psi (default " << format_exact(d.initial_feedback) << ")\n"
        << "  seed=<int>          base seed; run r uses seed XOR r (default " << d.seed << ")\n"
        << "  runs=<int>          independent runs averaged (default " << d.runs << ")\n";
    return out.str();
}

}  // namespace fedaloha
