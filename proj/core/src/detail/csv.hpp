#pragma once

#include <fstream>
#include <string>
#include <vector>

namespace tsou::detail {

// Canonical number rendering for CSV cells: '.' decimal separator, plain
// fixed notation in mid-range, scientific past 1e+-6, no trailing zeros.
std::string format_number(double x);

// Comma-separated output with '#'-prefixed comment lines and a mandatory
// header row. No timestamps: identical data must produce identical bytes.
class CsvFile {
public:
    explicit CsvFile(const std::string& path);

    void comment(const std::string& text);
    void row(const std::vector<std::string>& cells);

    static std::string num(double x) { return format_number(x); }

private:
    std::ofstream out_;
};

}  // namespace tsou::detail
