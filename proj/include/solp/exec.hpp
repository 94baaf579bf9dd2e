#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace solp {

// Serial kernels are the reference implementations; the parallel ones must
// produce identical (canonically ordered) results.
enum class ExecMode { Serial, Parallel };

struct Caps {
    int afpAtomCap = 20;            // max atoms per program for fixpoint scans
    long long candidateCap = 1000000; // max size of the candidate product
    int oracleUniverseCap = 22;     // max atom universe for the generic backend
};

class CapExceeded : public std::runtime_error {
public:
    CapExceeded(std::string cap, std::string detail)
        : std::runtime_error(cap + " exceeded: " + detail), capName(std::move(cap)) {}
    std::string capName;
};

} // namespace solp
