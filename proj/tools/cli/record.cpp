#include "record.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include <cavityqed/errors.hpp>
#include <cavityqed/version.hpp>

namespace cavityqed::cli {

namespace {

double parse_number(const std::string& s, const std::string& field, int line) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v))
        throw ConfigError("expected a finite number, got '" + s + "'", line, field);
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

nlohmann::ordered_json cell_json(const Cell& c, int digits) {
    if (const auto* s = std::get_if<std::string>(&c)) return *s;
    const double v = std::get<double>(c);
    if (!std::isfinite(v)) return nullptr;
    return round_digits(v, digits);
}

nlohmann::ordered_json summary_json(const nlohmann::ordered_json& j, int digits) {
    if (j.is_object()) {
        auto out = nlohmann::ordered_json::object();
        for (auto it = j.begin(); it != j.end(); ++it) out[it.key()] = summary_json(it.value(), digits);
        return out;
    }
    if (j.is_number_float()) {
        const double v = j.get<double>();
        if (!std::isfinite(v)) return nullptr;
        return round_digits(v, digits);
    }
    return j;
}

} // namespace

SweepSpec SweepSpec::parse(const std::string& text, int line) {
    const auto eq = text.find('=');
    if (eq == std::string::npos || eq == 0) throw ConfigError("expected var=start:stop:count[:log]", line, "sweep");
    SweepSpec s;
    s.var = text.substr(0, eq);
    const auto parts = split(text.substr(eq + 1), ':');
    if (parts.size() != 3 && parts.size() != 4) throw ConfigError("expected var=start:stop:count[:log]", line, "sweep");
    s.start = parse_number(parts[0], "sweep", line);
    s.stop = parse_number(parts[1], "sweep", line);
    const double count = parse_number(parts[2], "sweep", line);
    if (count != std::floor(count) || count < 2 || count > 1e7) throw ConfigError("count must be an integer >= 2", line, "sweep");
    s.count = static_cast<int>(count);
    if (parts.size() == 4) {
        if (parts[3] != "log" && parts[3] != "lin") throw ConfigError("spacing must be 'log' or 'lin'", line, "sweep");
        s.log = parts[3] == "log";
    }
    if (s.start == s.stop) throw ConfigError("start and stop must differ", line, "sweep");
    if (s.log && !(s.start > 0.0 && s.stop > 0.0)) throw ConfigError("log spacing needs positive endpoints", line, "sweep");
    return s;
}

std::vector<double> SweepSpec::values() const {
    std::vector<double> v(static_cast<std::size_t>(count));
    const double n = count - 1;
    if (log) {
        const double a = std::log(start), b = std::log(stop);
        for (int i = 0; i < count; ++i) v[i] = std::exp(a + (b - a) * (i / n));
    } else {
        for (int i = 0; i < count; ++i) v[i] = start + (stop - start) * (i / n);
    }
    v.front() = start;
    v.back() = stop;
    return v;
}

std::string SweepSpec::to_string() const {
    return var + "=" + format_number(start, 17) + ":" + format_number(stop, 17) + ":" + std::to_string(count) +
           (log ? ":log" : "");
}

void OutputRecord::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) throw std::logic_error("row width does not match the column schema");
    rows.push_back(std::move(row));
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string config_hash(const nlohmann::ordered_json& input) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(input.dump())));
    return buf;
}

double round_digits(double v, int digits) {
    if (!std::isfinite(v) || digits >= 17) return v;
    return std::strtod(format_number(v, digits).c_str(), nullptr);
}

std::string format_number(double v, int digits) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

void write_record(std::ostream& os, const OutputRecord& rec, Format fmt, int digits) {
    const std::string hash = config_hash(rec.input);
    if (fmt == Format::Json) {
        nlohmann::ordered_json j;
        j["command"] = rec.command;
        j["input"] = rec.input;
        j["columns"] = rec.columns;
        auto rows = nlohmann::ordered_json::array();
        for (const auto& r : rec.rows) {
            auto row = nlohmann::ordered_json::array();
            for (const auto& c : r) row.push_back(cell_json(c, digits));
            rows.push_back(std::move(row));
        }
        j["rows"] = std::move(rows);
        j["summary"] = summary_json(rec.summary, digits);
        j["provenance"] = {{"version", std::string(version())}, {"config_hash", hash}};
        os << j.dump(2) << '\n';
        return;
    }
    os << "# command: " << rec.command << '\n';
    os << "# version: " << version() << '\n';
    os << "# config_hash: " << hash << '\n';
    os << "# input: " << rec.input.dump() << '\n';
    for (auto it = rec.summary.begin(); it != rec.summary.end(); ++it)
        os << "# summary." << it.key() << ": " << summary_json(it.value(), digits).dump() << '\n';
    for (std::size_t i = 0; i < rec.columns.size(); ++i) os << (i ? "," : "") << rec.columns[i];
    os << '\n';
    for (const auto& r : rec.rows) {
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (i) os << ',';
            if (const auto* s = std::get_if<std::string>(&r[i]))
                os << *s;
            else
                os << format_number(std::get<double>(r[i]), digits);
        }
        os << '\n';
    }
}

} // namespace cavityqed::cli
