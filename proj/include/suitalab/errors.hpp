#pragma once

#include <stdexcept>
#include <string>

namespace suitalab {

// A requested (domain, point, metric, method) combination that the library
// cannot serve, or an operation whose mathematical hypotheses fail.  The CLI
// maps this to exit code 2; everything else unexpected is an internal error.
class capability_error : public std::runtime_error {
public:
    explicit capability_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace suitalab
