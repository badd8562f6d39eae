#include "d2dpc/csv.hpp"

#include <charconv>
#include <cstdio>

namespace d2dpc {

std::string format_double(double value) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    (void)ec;  // 64 bytes always suffice for a double
    return std::string(buf, end);
}

std::string csv_line(const std::vector<std::string>& fields) {
    std::string line;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) line += ',';
        line += fields[i];
    }
    line += '\n';
    return line;
}

}  // namespace d2dpc
