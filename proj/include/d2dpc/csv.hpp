// Stable CSV formatting: fixed column order, shortest round-trip decimals,
// LF endings. Identical inputs produce identical bytes.

#ifndef D2DPC_CSV_HPP
#define D2DPC_CSV_HPP

#include <string>
#include <vector>

namespace d2dpc {

// Shortest decimal that parses back to exactly the same double.
std::string format_double(double value);

std::string csv_line(const std::vector<std::string>& fields);

}  // namespace d2dpc

#endif  // D2DPC_CSV_HPP
