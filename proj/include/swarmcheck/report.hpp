#pragma once

#include "swarmcheck/checker.hpp"
#include "swarmcheck/model.hpp"

#include <filesystem>
#include <string>

namespace swarmcheck {

struct RunRow {
    ModelParams params;
    std::uint64_t total_states = 0;
    std::uint64_t reachable_states = 0;
    std::uint64_t transitions = 0;
    std::string verdict; // holds | fails | inconclusive | (custom)
    std::int64_t time_ms = 0;
    std::uint64_t peak_states = 0;
    bool budget_hit = false;
};

std::string csv_header();
std::string csv_line(const RunRow &row);

// Appends row to a CSV file, writing the header first when the file is new
// or empty. Header mismatches in an existing file raise ConfigError.
void append_csv(const std::filesystem::path &path, const RunRow &row);

} // namespace swarmcheck
