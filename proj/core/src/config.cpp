#include "cavityqed/config.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>

#include "cavityqed/errors.hpp"

namespace cavityqed {

namespace {

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

constexpr std::array<std::string_view, 7> kSystemKeys{
    "n_electrons", "area", "lz", "nz", "omega", "units", "ratio"};

double parse_double(const ConfigEntry& e, std::string_view key) {
    double v = 0.0;
    const char* first = e.value.data();
    const char* last = first + e.value.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) throw ConfigError("expected a number, got '" + e.value + "'", e.line, std::string(key));
    return v;
}

} // namespace

ConfigMap parse_config_text(std::string_view text) {
    ConfigMap out;
    int lineno = 0;
    while (!text.empty()) {
        ++lineno;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ConfigError("expected 'key = value'", lineno);
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError("missing key", lineno);
        if (value.empty()) throw ConfigError("missing value", lineno, std::string(key));
        if (out.contains(key)) throw ConfigError("duplicate key", lineno, std::string(key));
        out.emplace(std::string(key), ConfigEntry{std::string(value), lineno});
    }
    return out;
}

ConfigMap load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

double config_double(const ConfigMap& m, std::string_view key, double fallback) {
    const auto it = m.find(key);
    return it == m.end() ? fallback : parse_double(it->second, key);
}

long config_integer(const ConfigMap& m, std::string_view key, long fallback) {
    const auto it = m.find(key);
    if (it == m.end()) return fallback;
    const double v = parse_double(it->second, key);
    if (v != static_cast<double>(static_cast<long>(v)))
        throw ConfigError("expected an integer, got '" + it->second.value + "'", it->second.line, std::string(key));
    return static_cast<long>(v);
}

bool is_system_key(std::string_view key) {
    for (auto k : kSystemKeys)
        if (k == key) return true;
    return false;
}

SystemConfig apply_system_keys(const ConfigMap& m, SystemConfig base) {
    base.n_electrons = config_double(m, "n_electrons", base.n_electrons);
    base.area = config_double(m, "area", base.area);
    base.lz = config_double(m, "lz", base.lz);
    base.nz = static_cast<int>(config_integer(m, "nz", base.nz));
    if (m.contains("omega")) base.omega = config_double(m, "omega", 0.0);
    base.ratio = config_double(m, "ratio", base.ratio);
    if (const auto it = m.find("units"); it != m.end()) {
        if (it->second.value == "si" || it->second.value == "SI") base.units = UnitsMode::SI;
        else if (it->second.value == "ratio") base.units = UnitsMode::Ratio;
        else throw ConfigError("expected 'si' or 'ratio'", it->second.line, "units");
    }

    const auto field_line = [&](std::string_view k) {
        const auto it = m.find(k);
        return it == m.end() ? 0 : it->second.line;
    };
    if (base.units == UnitsMode::Ratio) {
        if (!(base.ratio >= 0.0)) throw ConfigError("must be >= 0", field_line("ratio"), "ratio");
        return base;
    }
    if (!(base.n_electrons >= 1.0)) throw ConfigError("must be >= 1", field_line("n_electrons"), "n_electrons");
    if (!(base.area > 0.0)) throw ConfigError("must be > 0", field_line("area"), "area");
    if (!(base.lz > 0.0)) throw ConfigError("must be > 0", field_line("lz"), "lz");
    if (base.nz < 1) throw ConfigError("must be >= 1", field_line("nz"), "nz");
    if (base.omega && !(*base.omega > 0.0)) throw ConfigError("must be > 0", field_line("omega"), "omega");
    return base;
}

} // namespace cavityqed
