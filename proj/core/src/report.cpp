#include "fedaloha/report.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fedaloha {

std::string format_csv_number(double value) {
    if (value == 0.0) value = 0.0;  // drop the sign of -0
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 9);
    return std::string(buf.data(), ptr);
}

void emit_csv(const Ensemble& result, std::ostream& out) {
    out << kCsvHeader << '\n';
    for (const auto& r : result.rounds) {
        out << r.t << ',' << format_csv_number(r.error_mean) << ',' << format_csv_number(r.error_std) << ','
            << format_csv_number(r.successes_mean) << ',' << format_csv_number(r.active_mean) << ','
            << format_csv_number(r.psi_mean) << ',' << format_csv_number(r.collisions_mean) << '\n';
    }
}

std::string to_csv(const Ensemble& result) {
    std::ostringstream out;
    emit_csv(result, out);
    return out.str();
}

void write_csv(const Ensemble& result, const std::filesystem::path& path) {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw std::runtime_error("cannot write " + path.string());
    emit_csv(result, file);
    file.flush();
    if (!file) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace fedaloha
