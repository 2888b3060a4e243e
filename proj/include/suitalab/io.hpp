#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace suitalab {

// Shortest round-trip decimal form of a double (%.17g), locale independent.
std::string format_double(double x);

// CSV emitter: one `# <config json>` comment line, an exact header line, then
// rows.  Empty optionals become empty fields.  Output is byte-reproducible
// for identical inputs.
class CsvWriter {
public:
    CsvWriter(std::ostream& os, const nlohmann::json& config,
              const std::vector<std::string>& header);

    void row(const std::vector<std::optional<double>>& values);
    void row_mixed(const std::vector<std::string>& values);

private:
    std::ostream& os_;
};

}  // namespace suitalab
