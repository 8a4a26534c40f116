#pragma once

#include <map>
#include <string>
#include <string_view>

#include "cavityqed/system.hpp"

namespace cavityqed {

// Plain text, one `key = value` per line; `#` starts a comment.
struct ConfigEntry {
    std::string value;
    int line = 0;
};

using ConfigMap = std::map<std::string, ConfigEntry, std::less<>>;

ConfigMap parse_config_text(std::string_view text);
ConfigMap load_config_file(const std::string& path);

double config_double(const ConfigMap& m, std::string_view key, double fallback);
long config_integer(const ConfigMap& m, std::string_view key, long fallback);

// Applies the SystemConfig keys present in `m` on top of `base`:
// n_electrons, area, lz, nz, omega, units (si|ratio), ratio.
SystemConfig apply_system_keys(const ConfigMap& m, SystemConfig base = {});

bool is_system_key(std::string_view key);

} // namespace cavityqed
