#include "swarmcheck/report.hpp"

#include <fstream>
#include <sstream>

namespace swarmcheck {

std::string csv_header() {
    return "m,r,alpha,range,mode,abstraction,encoding,total_states,reachable_states,"
           "transitions,verdict,time_ms,peak_states,budget_hit";
}

std::string csv_line(const RunRow &row) {
    std::ostringstream os;
    os << row.params.m << ',' << row.params.r << ',' << row.params.alpha << ','
       << row.params.range << ',' << to_string(row.params.mode) << ','
       << to_string(row.params.abstraction) << ',' << to_string(row.params.encoding) << ','
       << row.total_states << ',' << row.reachable_states << ',' << row.transitions << ','
       << row.verdict << ',' << row.time_ms << ',' << row.peak_states << ','
       << (row.budget_hit ? 1 : 0);
    return os.str();
}

void append_csv(const std::filesystem::path &path, const RunRow &row) {
    bool need_header = true;
    if (std::filesystem::exists(path) && std::filesystem::file_size(path) > 0) {
        std::ifstream in(path);
        std::string first;
        std::getline(in, first);
        if (first != csv_header())
            throw ConfigError("existing CSV has a different header: " + path.string());
        need_header = false;
    }
    std::ofstream out(path, std::ios::app);
    if (!out)
        throw ConfigError("cannot open CSV for append: " + path.string());
    if (need_header)
        out << csv_header() << '\n';
    out << csv_line(row) << '\n';
}

} // namespace swarmcheck
