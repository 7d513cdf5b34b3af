#include "detail/csv.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace tsou::detail {

namespace {

std::string trim_zeros(std::string s) {
    const auto dot = s.find('.');
    if (dot == std::string::npos) return s;
    auto last = s.find_last_not_of('0');
    if (s[last] == '.') --last;
    return s.substr(0, last + 1);
}

}  // namespace

std::string format_number(double x) {
    if (x == 0.0) return "0";
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    const double ax = std::fabs(x);
    char buf[48];
    if (ax >= 1e6 || ax < 1e-6) {
        std::snprintf(buf, sizeof buf, "%.12e", x);
        // trim mantissa zeros: 1.500000000000e+07 -> 1.5e+07
        std::string s(buf);
        const auto e = s.find('e');
        return trim_zeros(s.substr(0, e)) + s.substr(e);
    }
    std::snprintf(buf, sizeof buf, "%.12f", x);
    return trim_zeros(std::string(buf));
}

CsvFile::CsvFile(const std::string& path) : out_(path, std::ios::binary) {
    if (!out_) throw std::runtime_error("cannot open output file: " + path);
}

void CsvFile::comment(const std::string& text) { out_ << "# " << text << "\n"; }

void CsvFile::row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out_ << ',';
        out_ << cells[i];
    }
    out_ << "\n";
}

}  // namespace tsou::detail
