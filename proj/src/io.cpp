#include "suitalab/io.hpp"

#include <cstdio>

namespace suitalab {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

CsvWriter::CsvWriter(std::ostream& os, const nlohmann::json& config,
                     const std::vector<std::string>& header)
    : os_(os) {
    os_ << "# " << config.dump() << "\n";
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) os_ << ",";
        os_ << header[i];
    }
    os_ << "\n";
}

void CsvWriter::row(const std::vector<std::optional<double>>& values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) os_ << ",";
        if (values[i]) os_ << format_double(*values[i]);
    }
    os_ << "\n";
}

void CsvWriter::row_mixed(const std::vector<std::string>& values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) os_ << ",";
        os_ << values[i];
    }
    os_ << "\n";
}

}  // namespace suitalab
