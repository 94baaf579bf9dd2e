#pragma once

#include <string>
#include <vector>

namespace solp {

struct Diagnostic {
    enum class Severity { Error, Warning };
    Severity severity = Severity::Error;
    std::string message;
    std::string source; // file or unit name, may be empty
    int line = 0;       // 1-based, 0 when not tied to a location
    int column = 0;

    std::string format() const;
};

bool hasErrors(const std::vector<Diagnostic>& ds);

} // namespace solp
