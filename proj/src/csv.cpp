#include "clayton/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace clayton {

std::string format_real(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_csv(std::ostream& os, const std::vector<std::string>& comments,
               const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
    for (const auto& c : comments) os << "# " << c << "\n";
    for (std::size_t j = 0; j < header.size(); ++j) {
        os << (j ? "," : "") << header[j];
    }
    os << "\n";
    for (const auto& row : rows) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            os << (j ? "," : "") << format_real(row[j]);
        }
        os << "\n";
    }
}

DataMatrix read_csv_2col(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input("cannot open input file: " + path);

    DataMatrix x;
    std::string line;
    std::size_t lineno = 0;
    bool seen_content = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ss(line);
        std::string f1, f2, extra;
        if (!std::getline(ss, f1, ',') || !std::getline(ss, f2, ',')) {
            throw invalid_input("line " + std::to_string(lineno) +
                                ": expected 2 comma-separated columns");
        }
        if (std::getline(ss, extra, ',')) {
            throw invalid_input("line " + std::to_string(lineno) +
                                ": more than 2 columns");
        }
        char* end1 = nullptr;
        char* end2 = nullptr;
        const double a = std::strtod(f1.c_str(), &end1);
        const double b = std::strtod(f2.c_str(), &end2);
        const bool parsed = end1 && *end1 == '\0' && end2 && *end2 == '\0' &&
                            !f1.empty() && !f2.empty();
        if (!parsed) {
            if (!seen_content) { // header row
                seen_content = true;
                continue;
            }
            throw invalid_input("line " + std::to_string(lineno) +
                                ": non-numeric value");
        }
        seen_content = true;
        x.x1.push_back(a);
        x.x2.push_back(b);
    }
    return x;
}

} // namespace clayton
