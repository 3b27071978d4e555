#ifndef CLAYTON_CSV_HPP
#define CLAYTON_CSV_HPP

#include <ostream>
#include <string>
#include <vector>

#include "clayton/estimation.hpp"

namespace clayton {

// One double as text, with enough digits (17 significant) to round-trip
// the exact bit pattern.
std::string format_real(double x);

// Comma-separated, dot decimal mark, LF line endings, newline-terminated
// rows. `comments` lines are emitted first, each prefixed with "# ".
void write_csv(std::ostream& os, const std::vector<std::string>& comments,
               const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

// Reads a 2-column numeric CSV; a leading header row and '#' comment lines
// are skipped. Throws invalid_input on malformed rows.
DataMatrix read_csv_2col(const std::string& path);

} // namespace clayton

#endif // CLAYTON_CSV_HPP
