#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace cavityqed::cli {

struct SweepSpec {
    std::string var;
    double start = 0.0;
    double stop = 0.0;
    int count = 0;
    bool log = false;

    // var=start:stop:count[:log]; ConfigError on malformed input.
    static SweepSpec parse(const std::string& text, int line = 0);
    std::vector<double> values() const;
    std::string to_string() const;
};

using Cell = std::variant<double, std::string>;

struct OutputRecord {
    std::string command;
    nlohmann::ordered_json input = nlohmann::ordered_json::object();
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    nlohmann::ordered_json summary = nlohmann::ordered_json::object();

    void add_row(std::vector<Cell> row);
};

enum class Format { Csv, Json };

std::uint64_t fnv1a(const std::string& s);
std::string config_hash(const nlohmann::ordered_json& input);

// Rounds to `digits` significant digits through the decimal representation.
double round_digits(double v, int digits);
std::string format_number(double v, int digits);

void write_record(std::ostream& os, const OutputRecord& rec, Format fmt, int digits);

} // namespace cavityqed::cli
